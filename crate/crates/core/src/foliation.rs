//! Foliations on the weighted projective plane: saturation, points of
//! the plane up to the weighted action, the singular set chart by
//! chart, and the multiplicity data special to P(1, 1, k).

use crate::chart::{ChartForm, ExceptionalData};
use crate::error::{FolError, Result};
use crate::forms::{OneForm, TwoForm};
use crate::poly::QHPoly;
use crate::roots::gauss_roots;
use crate::scalar::GaussRat;
use crate::weights::WeightVector;

/// A foliation presented by a nonzero quasi-homogeneous one-form with
/// zero radial contraction. `d` is the normal degree; the twisted
/// bundles are O(d) and O(d - |l|), so both are recoverable from it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Foliation {
    pub w: WeightVector,
    pub omega: OneForm,
    pub d: i64,
    pub saturated: bool,
}

impl Foliation {
    pub fn new(omega: OneForm) -> Result<Foliation> {
        if omega.is_zero() {
            return Err(FolError::ZeroForm);
        }
        let d = omega.validate()?;
        let saturated = omega.is_saturated();
        Ok(Foliation { w: omega.w, omega, d, saturated })
    }

    /// Divide out the coefficient gcd. The returned foliation is
    /// saturated and its degree drops by the degree of the factor.
    pub fn saturate(&self) -> (Foliation, QHPoly) {
        let (form, factor) = self.omega.saturate();
        let f = Foliation::new(form).expect("saturation preserves validity");
        (f, factor)
    }

    /// Exact divisibility test for invariance of the curve C = {c = 0},
    /// with the cofactor two-form on success.
    pub fn invariance_quotient(&self, c: &QHPoly) -> Option<TwoForm> {
        self.omega.invariance_quotient(c)
    }

    pub fn is_invariant(&self, c: &QHPoly) -> bool {
        self.omega.is_invariant(c)
    }

    pub fn chart(&self, i: usize) -> ChartForm {
        self.omega.restrict_chart(i)
    }

    /// Algebraic multiplicity at the vertex p_i: the lowest degree of a
    /// nonzero quasi-homogeneous layer of the chart restriction on the
    /// cover, counting dx_j with weight l_j.
    pub fn algebraic_multiplicity(&self, i: usize) -> Result<i64> {
        self.chart(i)
            .min_degree()
            .ok_or_else(|| FolError::ZeroForm)
    }

    /// Behaviour along the exceptional divisor of the resolution of the
    /// vertex p2 of P(1, 1, k): invariance of E and the saturation
    /// exponent e of the pulled-back form.
    pub fn exceptional(&self) -> Result<ExceptionalData> {
        self.chart(2).exceptional_data()
    }

    /// The transverse-fibration predicates on P(1, 1, k).
    pub fn riccati(&self) -> Result<RiccatiReport> {
        let [l0, l1, l2] = self.w.l;
        if l0 != 1 || l1 != 1 {
            return Err(FolError::Unsupported(format!(
                "riccati predicates need weights (1, 1, k), got {:?}",
                self.w.l
            )));
        }
        let k = l2 as i64;
        let r = self.algebraic_multiplicity(2)?;
        let exc = self.exceptional()?;
        debug_assert_eq!(exc.r, r);
        Ok(RiccatiReport {
            k,
            d: self.d,
            r,
            exceptional_invariant: exc.invariant,
            e: exc.e,
            riccati: exc.e == self.d - 2 * k,
            riccati_invariant_branch: r == self.d - k,
        })
    }
}

/// Riccati data for a foliation on P(1, 1, k). The fibration pencil is
/// generically transverse exactly when e = d - 2k; when additionally
/// the exceptional divisor is invariant this collapses to r = d - k.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RiccatiReport {
    pub k: i64,
    pub d: i64,
    /// Algebraic multiplicity at p2.
    pub r: i64,
    pub exceptional_invariant: bool,
    /// Saturation exponent along the exceptional divisor.
    pub e: i64,
    /// General criterion e = d - 2k.
    pub riccati: bool,
    /// The branch r = d - k; equivalent to `riccati` together with an
    /// invariant exceptional divisor.
    pub riccati_invariant_branch: bool,
}

/// A point of P(l0, l1, l2) by homogeneous coordinates, compared up to
/// the weighted action t * x = (t^l0 x0, t^l1 x1, t^l2 x2).
///
/// Construction scales the first nonzero coordinate to 1 whenever the
/// needed root exists in Q(i); otherwise the raw representative is
/// kept and only the orbit test below identifies equal points.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    pub w: WeightVector,
    pub coords: [GaussRat; 3],
}

impl ProjPoint {
    pub fn new(w: WeightVector, coords: [GaussRat; 3]) -> Result<ProjPoint> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(FolError::Unsupported(
                "projective point needs a nonzero coordinate".to_string(),
            ));
        }
        let mut p = ProjPoint { w, coords };
        let i = (0..3).find(|&j| !p.coords[j].is_zero()).unwrap();
        if let Some(s) = p.coords[i].inv().nth_root(w.l[i]) {
            for j in 0..3 {
                p.coords[j] = s.pow(w.l[j] as i64) * p.coords[j].clone();
            }
            // guard against drift in the exact arithmetic
            debug_assert!(p.coords[i].is_one());
        }
        Ok(p)
    }

    /// The vertex p_i.
    pub fn vertex(w: WeightVector, i: usize) -> ProjPoint {
        let mut coords = [GaussRat::zero(), GaussRat::zero(), GaussRat::zero()];
        coords[i] = GaussRat::one();
        ProjPoint { w, coords }
    }

    /// The point of chart U_i with cover coordinates (x, y) in the two
    /// remaining slots.
    pub fn from_chart(w: WeightVector, i: usize, x: &GaussRat, y: &GaussRat) -> ProjPoint {
        let (j, k) = WeightVector::others(i);
        let mut coords = [GaussRat::zero(), GaussRat::zero(), GaussRat::zero()];
        coords[i] = GaussRat::one();
        coords[j] = x.clone();
        coords[k] = y.clone();
        ProjPoint::new(w, coords).expect("chart coordinate is 1")
    }

    /// Some(i) when the point is the vertex p_i.
    pub fn vertex_index(&self) -> Option<usize> {
        let nz: Vec<usize> = (0..3).filter(|&j| !self.coords[j].is_zero()).collect();
        if nz.len() == 1 { Some(nz[0]) } else { None }
    }

    /// Representative with coordinate i scaled to 1, as the pair of
    /// remaining coordinates in slot order. None when the needed
    /// l_i-th root does not exist in Q(i).
    pub fn chart_rep(&self, i: usize) -> Option<(GaussRat, GaussRat)> {
        if self.coords[i].is_zero() {
            return None;
        }
        let (j, k) = WeightVector::others(i);
        if self.coords[j].is_zero() && self.coords[k].is_zero() {
            // the vertex: every root choice sends the other slots to 0
            return Some((GaussRat::zero(), GaussRat::zero()));
        }
        let s = self.coords[i].inv().nth_root(self.w.l[i])?;
        Some((
            s.pow(self.w.l[j] as i64) * self.coords[j].clone(),
            s.pow(self.w.l[k] as i64) * self.coords[k].clone(),
        ))
    }

    /// Orbit equality. With S the common support, r_j the coordinate
    /// ratios and g = gcd(l_j : j in S), any scaling factor t linking
    /// the points satisfies t^g = prod r_j^(alpha_j) for a Bezout
    /// combination sum alpha_j l_j = g, so the points agree exactly
    /// when that product u fulfils u^(l_j / g) = r_j on all of S.
    pub fn same_point(&self, other: &ProjPoint) -> bool {
        if self.w != other.w {
            return false;
        }
        let sup: Vec<usize> = (0..3).filter(|&j| !self.coords[j].is_zero()).collect();
        let sup2: Vec<usize> = (0..3).filter(|&j| !other.coords[j].is_zero()).collect();
        if sup != sup2 {
            return false;
        }
        let ls: Vec<i64> = sup.iter().map(|&j| self.w.l[j] as i64).collect();
        let (g, alphas) = bezout_many(&ls);
        let mut u = GaussRat::one();
        for (idx, &j) in sup.iter().enumerate() {
            let rj = other.coords[j].clone() * self.coords[j].inv();
            u = u * rj.pow(alphas[idx]);
        }
        sup.iter().all(|&j| {
            let rj = other.coords[j].clone() * self.coords[j].inv();
            u.pow((self.w.l[j] as i64) / g) == rj
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "[{}:{}:{}]",
            self.coords[0].to_text(),
            self.coords[1].to_text(),
            self.coords[2].to_text()
        )
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.same_point(other)
    }
}

impl Eq for ProjPoint {}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// gcd of the values with one Bezout coefficient vector.
fn bezout_many(ls: &[i64]) -> (i64, Vec<i64>) {
    assert!(!ls.is_empty());
    let mut g = ls[0];
    let mut alphas = vec![1i64];
    for &l in &ls[1..] {
        let (g2, s, t) = ext_gcd(g, l);
        for a in alphas.iter_mut() {
            *a *= s;
        }
        alphas.push(t);
        g = g2;
    }
    (g, alphas)
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = ext_gcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

/// Common zeros of a chart pair on the mu_{l_i}-cover. `solutions`
/// lists the zeros with both coordinates in Q(i); `residual` counts,
/// with the multiplicities carried by the eliminating resultants, the
/// remaining zeros living in proper extensions.
#[derive(Clone, Debug)]
pub struct ChartSolutions {
    pub chart: usize,
    pub solutions: Vec<(GaussRat, GaussRat)>,
    pub residual: u32,
}

/// Solve a = b = 0 on the cover of chart U_i by eliminating the second
/// chart variable with a resultant and back-substituting the rational
/// first coordinates.
pub fn singular_points_chart(f: &Foliation, i: usize) -> Result<ChartSolutions> {
    let cf = f.chart(i);
    chart_solutions(&cf)
}

pub fn chart_solutions(cf: &ChartForm) -> Result<ChartSolutions> {
    let (vx, vy) = cf.vars();
    let a = &cf.a;
    let b = &cf.b;
    if a.is_zero() && b.is_zero() {
        return Err(FolError::NotZeroDimensional {
            witness: "chart form vanishes identically".to_string(),
        });
    }
    let g = a.gcd(b);
    if !g.is_constant() {
        return Err(FolError::NotZeroDimensional { witness: g.to_text() });
    }
    // A nonzero constant coefficient makes the chart zero set empty.
    if (a.is_constant() && !a.is_zero()) || (b.is_constant() && !b.is_zero()) {
        return Ok(ChartSolutions { chart: cf.chart, solutions: vec![], residual: 0 });
    }
    // Both free of y: coprime univariate in x, so no common zeros.
    if a.degree_in(vy).unwrap_or(0) == 0 && b.degree_in(vy).unwrap_or(0) == 0 {
        return Ok(ChartSolutions { chart: cf.chart, solutions: vec![], residual: 0 });
    }
    let r = crate::linalg::resultant(a, b, vy);
    // The resultant lies in the ideal (a, b), so it vanishes on every
    // common zero; coprimality keeps it from vanishing identically.
    assert!(!r.is_zero(), "resultant of a coprime chart pair");
    let mut residual = 0u32;
    let mut solutions = Vec::new();
    if !r.is_constant() {
        let gr = gauss_roots(&r, vx)?;
        residual += gr.residual.degree_in(vx).unwrap_or(0);
        for (x0, _mult) in &gr.roots {
            let fa = a.set_var(vx, x0);
            let fb = b.set_var(vx, x0);
            debug_assert!(
                !(fa.is_zero() && fb.is_zero()),
                "a common line factor survived the gcd test"
            );
            let h = fa.gcd(&fb);
            if h.is_constant() {
                // root of the resultant from leading-coefficient
                // collapse, no zero above it
                continue;
            }
            let hr = gauss_roots(&h, vy)?;
            residual += hr.residual.degree_in(vy).unwrap_or(0);
            for (y0, _m) in &hr.roots {
                solutions.push((x0.clone(), y0.clone()));
            }
        }
    }
    Ok(ChartSolutions { chart: cf.chart, solutions, residual })
}
