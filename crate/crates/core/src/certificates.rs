//! Exact certificates about invariant algebraic curves through a point.
//!
//! The restriction of a quasi-homogeneous curve of quasi-degree at most n
//! to a chart cover lies in the span of finitely many cover monomials. An
//! invariant curve through p restricts to a nonzero element f of that span
//! with f(p) = 0 and v(f) divisible by f, where v = b d/dx - a d/dy is the
//! chart vector field. The engines below decide whether such an element
//! exists whenever the space of candidates through p has dimension at most
//! two, and produce a machine-checkable witness when none does.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chart::ChartForm;
use crate::error::{FolError, Result};
use crate::foliation::{Foliation, ProjPoint};
use crate::linalg::{det_bareiss, det_scalar, kernel_basis};
use crate::poly::{prem, QHPoly};
use crate::roots::gauss_roots;
use crate::scalar::GaussRat;
use crate::weights::WeightVector;

/// Dimension cap for the symbolic determinant in extactic_polynomial.
pub const EXTACTIC_DIM_CAP: usize = 8;

/// Cover monomials spanning the chart restrictions of the
/// quasi-homogeneous curves of quasi-degree at most n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpaceBasis {
    pub w: WeightVector,
    pub chart: usize,
    pub n: i64,
    /// Exponent pairs (p, q) for x_j^p x_k^q on the cover of chart i,
    /// j < k the other two indices, sorted by increasing cover degree
    /// p l_j + q l_k, then by q. The pair (0, 0) stands for the
    /// restriction 1 of a pure power of x_i and is present exactly
    /// when l_i <= n.
    pub monomials: Vec<(u32, u32)>,
}

impl CurveSpaceBasis {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    /// Cover degree p l_j + q l_k of the monomial at index t.
    pub fn degree(&self, t: usize) -> i64 {
        let (j, k) = WeightVector::others(self.chart);
        let (p, q) = self.monomials[t];
        p as i64 * self.w.l[j] as i64 + q as i64 * self.w.l[k] as i64
    }

    /// The monomial at index t as a polynomial in the chart variables.
    pub fn monomial(&self, t: usize) -> QHPoly {
        let (j, k) = WeightVector::others(self.chart);
        let (p, q) = self.monomials[t];
        let mut e = [0u32; 3];
        e[j] = p;
        e[k] = q;
        QHPoly::mono(GaussRat::one(), e)
    }
}

/// Basis of restrictions to chart U_i of quasi-homogeneous curves of
/// quasi-degree at most n. A curve of quasi-degree m <= n restricts to a
/// combination of monomials x^p y^q with p l_j + q l_k <= m, the x_i
/// powers of each term restricting to 1. Conversely, every such monomial
/// of positive cover degree is itself the restriction of a curve of that
/// degree, and 1 is a restriction exactly when some positive power of x_i
/// has quasi-degree at most n.
pub fn curve_space_basis(w: WeightVector, chart: usize, n: i64) -> CurveSpaceBasis {
    assert!(chart < 3, "chart index out of range");
    let (j, k) = WeightVector::others(chart);
    let (lj, lk) = (w.l[j] as i64, w.l[k] as i64);
    let mut keyed: Vec<(i64, u32, u32)> = Vec::new();
    if w.l[chart] as i64 <= n {
        keyed.push((0, 0, 0));
    }
    let mut p = 0u32;
    while p as i64 * lj <= n {
        let rest = n - p as i64 * lj;
        let mut q = 0u32;
        while q as i64 * lk <= rest {
            if p > 0 || q > 0 {
                keyed.push((p as i64 * lj + q as i64 * lk, q, p));
            }
            q += 1;
        }
        p += 1;
    }
    keyed.sort();
    let monomials = keyed.into_iter().map(|(_, q, p)| (p, q)).collect();
    CurveSpaceBasis { w, chart, n, monomials }
}

/// Derivation along the chart vector field v = b d/dx - a d/dy.
fn chart_derive(cf: &ChartForm, f: &QHPoly) -> QHPoly {
    let (j, k) = cf.vars();
    &(&cf.b * &f.derivative(j)) - &(&cf.a * &f.derivative(k))
}

fn eval_at(chart: usize, f: &QHPoly, rep: &(GaussRat, GaussRat)) -> GaussRat {
    let (j, k) = WeightVector::others(chart);
    let mut at = [GaussRat::one(), GaussRat::one(), GaussRat::one()];
    at[j] = rep.0.clone();
    at[k] = rep.1.clone();
    f.eval(&at)
}

/// Rows v^r applied to the basis monomials, r = 0 .. dim-1.
fn extactic_rows(cf: &ChartForm, basis: &CurveSpaceBasis) -> Vec<Vec<QHPoly>> {
    let n = basis.dim();
    let mut rows = Vec::with_capacity(n);
    let mut cur: Vec<QHPoly> = (0..n).map(|t| basis.monomial(t)).collect();
    for r in 0..n {
        if r > 0 {
            cur = cur.iter().map(|f| chart_derive(cf, f)).collect();
        }
        rows.push(cur.clone());
    }
    rows
}

fn require_saturated(f: &Foliation) -> Result<()> {
    if f.saturated {
        Ok(())
    } else {
        Err(FolError::Unsupported(
            "certificates need a saturated foliation; call saturate() first".to_string(),
        ))
    }
}

/// Square matrix whose (r, t) entry is v^r applied to the t-th basis
/// monomial of the curve space for bound n, evaluated at the chart cover
/// point. A nonzero determinant rules out invariant curves of
/// quasi-degree at most n through the point.
pub fn extactic_matrix_at(
    f: &Foliation,
    chart: usize,
    point: &(GaussRat, GaussRat),
    n: i64,
) -> Result<Vec<Vec<GaussRat>>> {
    require_saturated(f)?;
    let basis = curve_space_basis(f.w, chart, n);
    let cf = f.chart(chart);
    Ok(extactic_rows(&cf, &basis)
        .into_iter()
        .map(|row| row.iter().map(|g| eval_at(chart, g, point)).collect())
        .collect())
}

/// The symbolic determinant of the matrix above, a polynomial in the
/// chart variables. Every invariant curve of quasi-degree at most n has
/// a chart restriction dividing it. Errors when the basis dimension
/// exceeds EXTACTIC_DIM_CAP.
pub fn extactic_polynomial(f: &Foliation, chart: usize, n: i64) -> Result<QHPoly> {
    require_saturated(f)?;
    let basis = curve_space_basis(f.w, chart, n);
    if basis.dim() > EXTACTIC_DIM_CAP {
        return Err(FolError::Unsupported(format!(
            "symbolic extactic determinant needs basis dimension <= {}, got {}",
            EXTACTIC_DIM_CAP,
            basis.dim()
        )));
    }
    let cf = f.chart(chart);
    Ok(det_bareiss(extactic_rows(&cf, &basis)))
}

/// sha256 over the weights and the canonical text of the defining form.
pub fn foliation_hash(f: &Foliation) -> String {
    let mut h = Sha256::new();
    h.update(format!(
        "w={},{},{};omega={}",
        f.w.l[0],
        f.w.l[1],
        f.w.l[2],
        f.omega.to_text()
    ));
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// A Gaussian rational split into rational strings, the JSON carrier
/// for exact scalars.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatPair {
    pub re: String,
    pub im: String,
}

impl RatPair {
    pub fn of(x: &GaussRat) -> RatPair {
        let (re, im) = x.to_string_pair();
        RatPair { re, im }
    }

    pub fn to_gauss(&self) -> Result<GaussRat> {
        Ok(GaussRat::new(parse_rat(&self.re)?, parse_rat(&self.im)?))
    }
}

fn parse_rat(s: &str) -> Result<BigRational> {
    BigRational::from_str(s)
        .map_err(|e| FolError::Unsupported(format!("unreadable rational {s:?}: {e}")))
}

/// Machine-checkable witness that no invariant algebraic curve of
/// quasi-degree at most n passes through the recorded point. verify()
/// reruns the deciding computation and compares every field bit for bit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbsenceCertificate {
    /// sha256 over the weights and defining form, pinning the foliation.
    pub foliation_hash: String,
    pub weights: [u32; 3],
    pub chart: usize,
    /// Chart cover coordinates of the point.
    pub point: [RatPair; 2],
    /// Quasi-degree bound on the curves ruled out.
    pub n: i64,
    /// Dimension of the restricted curve space.
    #[serde(rename = "N")]
    pub basis_dim: usize,
    /// Deciding engine(s): "vacuous", "extactic", "divisibility",
    /// "pencil", or a +-join when residue classes used different ones.
    pub method: String,
    /// Nonzero scalar produced by the deciding engine: the extactic
    /// determinant, the leading coefficient of an obstructing
    /// pseudo-remainder, or 1 for engines that refute candidates one
    /// root at a time.
    pub determinant: RatPair,
    /// Highest derivation order entering the extactic rows.
    pub derivation_order: usize,
    pub tool_version: String,
}

impl AbsenceCertificate {
    /// Recompute the certifying run from the stored data and compare.
    pub fn verify(&self, f: &Foliation) -> Result<bool> {
        if foliation_hash(f) != self.foliation_hash || f.w.l != self.weights {
            return Ok(false);
        }
        let rep = (self.point[0].to_gauss()?, self.point[1].to_gauss()?);
        match certify_in_chart(f, self.chart, &rep, self.n)? {
            CertifyOutcome::Absent(c) => Ok(c == *self),
            _ => Ok(false),
        }
    }
}

/// Result of certify_absence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyOutcome {
    /// No invariant curve of quasi-degree at most n passes through the
    /// point.
    Absent(AbsenceCertificate),
    /// An invariant curve through the point, of quasi-degree at most n,
    /// verified against the full invariance identity.
    Found { chart: usize, curve: QHPoly },
    /// Neither settled; the reason names every obstruction met.
    Inconclusive { reason: String },
}

enum Engine {
    Absent { method: &'static str, det: GaussRat },
    Found(QHPoly),
    Inconclusive(String),
}

/// Decide whether some invariant algebraic curve of quasi-degree at most
/// n passes through p, with an AbsenceCertificate on the negative answer
/// and a verified curve on the positive one. The point is analysed on
/// the first chart where it has a Gaussian rational cover representative.
pub fn certify_absence(f: &Foliation, p: &ProjPoint, n: i64) -> Result<CertifyOutcome> {
    require_saturated(f)?;
    if f.w != p.w {
        return Err(FolError::WeightMismatch(f.w.to_string(), p.w.to_string()));
    }
    for i in 0..3 {
        if p.coords[i].is_zero() {
            continue;
        }
        if let Some(rep) = p.chart_rep(i) {
            return certify_in_chart(f, i, &rep, n);
        }
    }
    Err(FolError::Unsupported(
        "point has no chart cover representative with Gaussian rational coordinates".to_string(),
    ))
}

fn certify_in_chart(
    f: &Foliation,
    chart: usize,
    rep: &(GaussRat, GaussRat),
    n: i64,
) -> Result<CertifyOutcome> {
    let basis = curve_space_basis(f.w, chart, n);
    let dim = basis.dim();
    if dim == 0 {
        // no curve of quasi-degree <= n meets this chart at all
        return Ok(CertifyOutcome::Absent(make_cert(
            f,
            chart,
            rep,
            n,
            0,
            "vacuous",
            GaussRat::one(),
        )));
    }
    let cf = f.chart(chart);
    let (av, bv) = cf.eval(&rep.0, &rep.1);
    if !av.is_zero() || !bv.is_zero() {
        // at a nonsingular point the evaluated rows can be independent
        let det = det_scalar(extactic_matrix_at(f, chart, rep, n)?);
        if !det.is_zero() {
            return Ok(CertifyOutcome::Absent(make_cert(
                f, chart, rep, n, dim, "extactic", det,
            )));
        }
    }
    // The restriction of a single quasi-homogeneous curve keeps all its
    // cover degrees in one residue class mod l_i, so each class can be
    // decided on its own.
    let li = f.w.l[chart] as i64;
    let mut classes: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for t in 0..dim {
        classes.entry(basis.degree(t).rem_euclid(li)).or_default().push(t);
    }
    let mut methods: Vec<&'static str> = Vec::new();
    let mut det = GaussRat::one();
    let mut obstructions: Vec<String> = Vec::new();
    for idxs in classes.values() {
        let vals: Vec<GaussRat> =
            idxs.iter().map(|&t| eval_at(chart, &basis.monomial(t), rep)).collect();
        let kernel = kernel_basis(vec![vals]);
        let members: Vec<QHPoly> = kernel
            .iter()
            .map(|ks| {
                let mut acc = QHPoly::zero();
                for (pos, &t) in idxs.iter().enumerate() {
                    acc = &acc + &basis.monomial(t).scale(&ks[pos]);
                }
                acc
            })
            .collect();
        let engine = match members.len() {
            0 => Engine::Absent { method: "vacuous", det: GaussRat::one() },
            1 => divisibility_engine(f, &cf, &basis, &members[0]),
            2 => pencil_engine(f, &cf, &basis, &members[0], &members[1]),
            d => Engine::Inconclusive(format!(
                "curve space through the point has dimension {d} in one residue class; engines stop at pencils"
            )),
        };
        match engine {
            Engine::Found(curve) => return Ok(CertifyOutcome::Found { chart, curve }),
            Engine::Absent { method, det: piece } => {
                methods.push(method);
                det = &det * &piece;
            }
            Engine::Inconclusive(reason) => obstructions.push(reason),
        }
    }
    if !obstructions.is_empty() {
        return Ok(CertifyOutcome::Inconclusive { reason: obstructions.join("; ") });
    }
    methods.sort_unstable();
    methods.dedup();
    let method = methods.join("+");
    Ok(CertifyOutcome::Absent(make_cert(f, chart, rep, n, dim, &method, det)))
}

/// The unique candidate (up to scale) through the point: an invariant
/// curve restricting into this class would be proportional to it, so the
/// chart divisibility test settles the class outright.
fn divisibility_engine(
    f: &Foliation,
    cf: &ChartForm,
    basis: &CurveSpaceBasis,
    m: &QHPoly,
) -> Engine {
    let vf = chart_derive(cf, m);
    if m.divides(&vf) {
        return verified_found(f, basis, m);
    }
    let (j, k) = cf.vars();
    let vch = if m.degree_in(j).unwrap_or(0) >= 1 { j } else { k };
    let det = match prem(&vf, m, vch).lead() {
        Some((_, c)) => c.clone(),
        None => GaussRat::one(),
    };
    Engine::Absent { method: "divisibility", det }
}

/// Two-dimensional candidate space: every member is f0 + s f1 (or f1
/// alone). Pseudo-reducing v(f0) + s v(f1) by f0 + s f1 gives a
/// remainder whose coefficient gcd H in s vanishes at every parameter of
/// an invariant member, as long as the leading coefficient does not
/// collapse there; the collapse parameter and the member at infinity are
/// checked directly. Each candidate parameter is confirmed or refuted by
/// the full invariance identity.
fn pencil_engine(
    f: &Foliation,
    cf: &ChartForm,
    basis: &CurveSpaceBasis,
    f0: &QHPoly,
    f1: &QHPoly,
) -> Engine {
    let (j, k) = cf.vars();
    // the chart slot is exponent-free in every chart polynomial, so it
    // can carry the pencil parameter
    let s = basis.chart;
    let sv = QHPoly::var(s);
    let member = f0 + &(&sv * f1);
    let vmember = &chart_derive(cf, f0) + &(&sv * &chart_derive(cf, f1));
    let vch = if f0.degree_in(j).unwrap_or(0).max(f1.degree_in(j).unwrap_or(0)) >= 1 {
        j
    } else {
        k
    };
    let r = prem(&vmember, &member, vch);
    let mut candidates: Vec<GaussRat> = Vec::new();
    let push = |cs: &mut Vec<GaussRat>, c: GaussRat| {
        if !cs.contains(&c) {
            cs.push(c);
        }
    };
    let mut unreachable_roots = false;
    if !r.is_zero() {
        let mut buckets: BTreeMap<(u32, u32), QHPoly> = BTreeMap::new();
        for (e, c) in r.terms() {
            let mut se = [0u32; 3];
            se[s] = e[s];
            let entry = buckets.entry((e[j], e[k])).or_insert_with(QHPoly::zero);
            *entry = &*entry + &QHPoly::mono(c.clone(), se);
        }
        let h = QHPoly::gcd_many(buckets.values());
        if h.degree_in(s).unwrap_or(0) >= 1 {
            let found = gauss_roots(&h, s).expect("gcd of a nonzero family is nonzero");
            for (root, _) in found.roots {
                push(&mut candidates, root);
            }
            if found.residual.degree_in(s).unwrap_or(0) >= 1 {
                unreachable_roots = true;
            }
        }
    } else {
        // every member pseudo-reduces to zero; sample small parameters
        for t in [0, 1, -1] {
            push(&mut candidates, GaussRat::from_int(t));
        }
    }
    // parameter where the leading coefficient in the division variable
    // collapses, escaping the remainder argument
    let d0 = f0.degree_in(vch).unwrap_or(0);
    let d1 = f1.degree_in(vch).unwrap_or(0);
    if d1 > d0 {
        push(&mut candidates, GaussRat::zero());
    } else if d0 == d1 {
        let lc0 = f0.coeffs_in(vch).pop().expect("nonzero member");
        let lc1 = f1.coeffs_in(vch).pop().expect("nonzero member");
        if let Some(qt) = lc0.div_exact(&lc1) {
            if qt.is_constant() {
                push(&mut candidates, -qt.coeff(&[0, 0, 0]));
            }
        }
    }
    candidates.sort_by(|x, y| x.re.cmp(&y.re).then(x.im.cmp(&y.im)));
    for s0 in &candidates {
        let cand = f0 + &f1.scale(s0);
        if cand.is_zero() {
            continue;
        }
        let curve = homogenize_curve(&f.w, basis.chart, &cand);
        if f.is_invariant(&curve) {
            return Engine::Found(curve);
        }
    }
    let infinity = homogenize_curve(&f.w, basis.chart, f1);
    if f.is_invariant(&infinity) {
        return Engine::Found(infinity);
    }
    if r.is_zero() {
        return Engine::Inconclusive(
            "pencil reduction vanishes identically but no sampled member is invariant".to_string(),
        );
    }
    if unreachable_roots {
        return Engine::Inconclusive(
            "pencil parameter obstruction has irrational roots; coefficient field extensions are not implemented"
                .to_string(),
        );
    }
    Engine::Absent { method: "pencil", det: GaussRat::one() }
}

fn verified_found(f: &Foliation, basis: &CurveSpaceBasis, m: &QHPoly) -> Engine {
    let curve = homogenize_curve(&f.w, basis.chart, m);
    if f.is_invariant(&curve) {
        Engine::Found(curve)
    } else {
        Engine::Inconclusive(format!(
            "chart candidate {} passes the chart test but fails global invariance",
            m.to_text()
        ))
    }
}

/// Lift a chart polynomial whose cover degrees share one residue class
/// mod l_i back to a quasi-homogeneous curve, using minimal x_i powers.
fn homogenize_curve(w: &WeightVector, chart: usize, m: &QHPoly) -> QHPoly {
    let (j, k) = WeightVector::others(chart);
    let (lj, lk, li) = (w.l[j] as i64, w.l[k] as i64, w.l[chart] as i64);
    let deg = |e: &[u32; 3]| e[j] as i64 * lj + e[k] as i64 * lk;
    let target = m.terms().map(|(e, _)| deg(e)).max().expect("nonzero candidate");
    let lifted = QHPoly::from_terms(m.terms().map(|(e, c)| {
        let gap = target - deg(e);
        debug_assert_eq!(gap.rem_euclid(li), 0, "mixed residue classes in one candidate");
        let mut ee = *e;
        ee[chart] = (gap / li) as u32;
        (ee, c.clone())
    }));
    debug_assert!(lifted.is_quasi_homogeneous(&[w.l[0] as i64, w.l[1] as i64, w.l[2] as i64]));
    lifted
}

fn make_cert(
    f: &Foliation,
    chart: usize,
    rep: &(GaussRat, GaussRat),
    n: i64,
    basis_dim: usize,
    method: &str,
    det: GaussRat,
) -> AbsenceCertificate {
    debug_assert!(!det.is_zero());
    AbsenceCertificate {
        foliation_hash: foliation_hash(f),
        weights: f.w.l,
        chart,
        point: [RatPair::of(&rep.0), RatPair::of(&rep.1)],
        n,
        basis_dim,
        method: method.to_string(),
        determinant: RatPair::of(&det),
        derivation_order: basis_dim.saturating_sub(1),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::tests::{delta, fibration};
    use crate::forms::OneForm;

    fn q(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn x(v: usize) -> QHPoly {
        QHPoly::var(v)
    }

    #[test]
    fn basis_enumeration() {
        // P(1,1,1), chart 0, n = 1: {1, x, y}
        let b = curve_space_basis(WeightVector::std(), 0, 1);
        assert_eq!(b.monomials, vec![(0, 0), (1, 0), (0, 1)]);
        // P(1,1,2), chart 0 covers (x1, x2) with weights (1, 2):
        // n = 2 gives {1, x, x^2, y}
        let b = curve_space_basis(WeightVector::new(1, 1, 2), 0, 2);
        assert_eq!(b.monomials, vec![(0, 0), (1, 0), (2, 0), (0, 1)]);
        assert_eq!(b.degree(3), 2);
        // P(1,1,k), chart 2, n = 1: {x, y}; 1 is missing since no power
        // of x2 has quasi-degree 1
        let b = curve_space_basis(WeightVector::new(1, 1, 3), 2, 1);
        assert_eq!(b.monomials, vec![(1, 0), (0, 1)]);
        // P(1,1,1): full polynomial space of degree <= n once n >= 1
        for n in 1..6 {
            let b = curve_space_basis(WeightVector::std(), 1, n);
            assert_eq!(b.dim() as i64, (n + 1) * (n + 2) / 2);
        }
        // degree <= 0 admits no curves at all
        assert_eq!(curve_space_basis(WeightVector::std(), 1, 0).dim(), 0);
        // P(2,3,5), chart 2, n = 1: nothing at all
        let b = curve_space_basis(WeightVector::new(2, 3, 5), 2, 1);
        assert_eq!(b.dim(), 0);
    }

    #[test]
    fn extactic_of_rotation_field() {
        // v = y d/dx - x d/dy on the standard chart 2: rows 1, v, v^2
        // on {1, x, y} give det -(x^2 + y^2), and the restriction of
        // the invariant conic x0^2 + x1^2 divides it
        let w = WeightVector::std();
        let cf = ChartForm { w, chart: 2, a: x(0), b: x(1) };
        let basis = curve_space_basis(w, 2, 1);
        let det = det_bareiss(extactic_rows(&cf, &basis));
        let conic = &(&x(0) * &x(0)) + &(&x(1) * &x(1));
        assert_eq!(det, -&conic);
        assert!(conic.divides(&det));
    }

    #[test]
    fn extactic_vanishes_for_translation_field() {
        // v = d/dx annihilates 1 and x after two derivations: the
        // matrix on {1, x, y} is upper triangular with a zero row
        let w = WeightVector::std();
        let cf = ChartForm { w, chart: 2, a: QHPoly::zero(), b: QHPoly::one() };
        let basis = curve_space_basis(w, 2, 1);
        assert!(det_bareiss(extactic_rows(&cf, &basis)).is_zero());
    }

    #[test]
    fn extactic_polynomial_matches_matrix_evaluation() {
        let f = delta(2);
        let e = extactic_polynomial(&f, 0, 1).unwrap();
        for (u, v) in [(1, 1), (2, -1), (0, 3)] {
            let rep = (q(u), q(v));
            let m = extactic_matrix_at(&f, 0, &rep, 1).unwrap();
            assert_eq!(det_scalar(m), eval_at(0, &e, &rep));
        }
    }

    #[test]
    fn extactic_rows_vanish_at_singular_points() {
        // at a singular point a = b = 0, every derived row evaluates
        // to zero, so the numeric determinant is structurally zero
        let f = delta(2);
        let rep = (q(1), q(1));
        let m = extactic_matrix_at(&f, 0, &rep, 2).unwrap();
        for row in &m[1..] {
            assert!(row.iter().all(|c| c.is_zero()));
        }
        assert!(det_scalar(m).is_zero());
    }

    #[test]
    fn extactic_preconditions() {
        // x0 times the fibration is not saturated
        let w = WeightVector::new(1, 1, 2);
        let omega = OneForm::new(w, [&x(0) * &x(1), -(&x(0) * &x(0)), QHPoly::zero()]);
        let f = Foliation::new(omega).unwrap();
        assert!(!f.saturated);
        assert!(extactic_polynomial(&f, 0, 1).is_err());
        // dimension cap for the symbolic determinant
        let f = delta(2);
        assert!(extactic_polynomial(&f, 0, 5).is_err());
        assert!(extactic_matrix_at(&f, 0, &(q(1), q(1)), 5).is_ok());
    }

    #[test]
    fn certify_delta_diagonal_point_divisibility() {
        // the singular point [1:1:1] of the k = 2 example: the only
        // quasi-degree-1 curve through it is x0 - x1, which is not
        // invariant, so absence is certified through the unique
        // candidate's divisibility test
        let f = delta(2);
        let p = ProjPoint::new(f.w, [q(1), q(1), q(1)]).unwrap();
        let out = certify_absence(&f, &p, 1).unwrap();
        let CertifyOutcome::Absent(cert) = &out else {
            panic!("expected absence, got {out:?}");
        };
        assert_eq!(cert.chart, 0);
        assert_eq!(cert.basis_dim, 2);
        assert_eq!(cert.method, "divisibility");
        assert_eq!(cert.n, 1);
        assert_eq!(cert.derivation_order, 1);
        assert!(!cert.determinant.to_gauss().unwrap().is_zero());
        assert!(cert.verify(&f).unwrap());

        // exhaustive cross-check: x0 - x1 spans the quasi-degree-1
        // curves through the point, and it is indeed not invariant
        assert!(!f.is_invariant(&(&x(0) - &x(1))));
        // while the named invariant curves avoid the point or exceed n
        assert!(f.is_invariant(&x(0)));
        assert!(f.is_invariant(&x(2)));
    }

    #[test]
    fn certify_delta_certificate_serializes() {
        let f = delta(2);
        let p = ProjPoint::new(f.w, [q(1), q(1), q(1)]).unwrap();
        let CertifyOutcome::Absent(cert) = certify_absence(&f, &p, 1).unwrap() else {
            panic!("expected absence");
        };
        let js = serde_json::to_value(&cert).unwrap();
        assert_eq!(js["N"], 2);
        assert_eq!(js["weights"], serde_json::json!([1, 1, 2]));
        assert_eq!(js["determinant"]["im"], "0");
        let back: AbsenceCertificate = serde_json::from_value(js).unwrap();
        assert_eq!(back, cert);
        assert!(back.verify(&f).unwrap());
    }

    /// The chart-2 form a = (y^2 - 1) x, b = -i (x^2 - 1) y on P(1,1,2),
    /// homogenized. Its vertex p2 lifts to the cover origin.
    fn eta_form() -> Foliation {
        crate::catalog::eta(WeightVector::new(1, 1, 2), 2, 2, &GaussRat::i()).unwrap()
    }

    #[test]
    fn certify_eta_origin_pencil() {
        let f = eta_form();
        assert!(f.saturated);
        assert_eq!(f.d, 6);
        let p = ProjPoint::vertex(f.w, 2);
        let out = certify_absence(&f, &p, 1).unwrap();
        let CertifyOutcome::Absent(cert) = &out else {
            panic!("expected absence, got {out:?}");
        };
        assert_eq!(cert.chart, 2);
        assert_eq!(cert.basis_dim, 2);
        assert_eq!(cert.method, "pencil");
        assert!(cert.verify(&f).unwrap());

        // grid cross-check: lines x0 - s x1 and x1 all pass through p2
        // in the n = 1 curve space; none is invariant
        assert!(!f.is_invariant(&x(1)));
        for s in -4..=4 {
            for t in [GaussRat::from_int(s), &q(s) * &GaussRat::i()] {
                assert!(!f.is_invariant(&(&x(0) - &x(1).scale(&t))));
            }
        }
    }

    #[test]
    fn certify_fibration_reports_the_fiber() {
        // a fiber passes through every point, so certification must
        // come back with the curve instead of a certificate
        let f = fibration(WeightVector::new(1, 1, 2));
        let p = ProjPoint::new(f.w, [q(1), q(1), q(1)]).unwrap();
        let out = certify_absence(&f, &p, 1).unwrap();
        assert_eq!(
            out,
            CertifyOutcome::Found { chart: 0, curve: &x(1) - &x(0) }
        );
    }

    #[test]
    fn certify_vacuous_without_candidate_curves() {
        // P(2,3,5) has no curves of quasi-degree 1 at all
        let f = fibration(WeightVector::new(2, 3, 5));
        let p = ProjPoint::new(f.w, [q(1), q(1), q(1)]).unwrap();
        let CertifyOutcome::Absent(cert) = certify_absence(&f, &p, 1).unwrap() else {
            panic!("expected vacuous absence");
        };
        assert_eq!(cert.method, "vacuous");
        assert_eq!(cert.basis_dim, 0);
        assert_eq!(cert.determinant, RatPair::of(&q(1)));
        assert!(cert.verify(&f).unwrap());
    }

    #[test]
    fn certify_nonsingular_point_by_extactic() {
        // [1:2:1] is a nonsingular point of the k = 2 example; the
        // evaluated extactic matrix decides directly
        let f = delta(2);
        let p = ProjPoint::new(f.w, [q(1), q(2), q(1)]).unwrap();
        let CertifyOutcome::Absent(cert) = certify_absence(&f, &p, 1).unwrap() else {
            panic!("expected absence at a generic point");
        };
        assert_eq!(cert.method, "extactic");
        let det = cert.determinant.to_gauss().unwrap();
        let m = extactic_matrix_at(&f, 0, &(q(2), q(1)), 1).unwrap();
        assert_eq!(det, det_scalar(m));
        assert!(cert.verify(&f).unwrap());
    }

    #[test]
    fn certify_finds_curves_through_named_singularities() {
        // x0 = 0 passes through the vertex p1 of the k = 2 example and
        // is invariant; it is the unique quasi-degree-1 candidate there
        let f = delta(2);
        let p = ProjPoint::vertex(f.w, 1);
        let out = certify_absence(&f, &p, 1).unwrap();
        assert_eq!(out, CertifyOutcome::Found { chart: 1, curve: x(0) });

        // with n = 2 the candidate space through p1 is {x0, x0^2, x2},
        // beyond the pencil engines: reported as such, never upgraded
        let out = certify_absence(&f, &p, 2).unwrap();
        let CertifyOutcome::Inconclusive { reason } = &out else {
            panic!("expected an inconclusive report, got {out:?}");
        };
        assert!(reason.contains("dimension 3"));
    }

    #[test]
    fn certify_preconditions() {
        let w = WeightVector::new(1, 1, 2);
        let omega = OneForm::new(w, [&x(0) * &x(1), -(&x(0) * &x(0)), QHPoly::zero()]);
        let unsat = Foliation::new(omega).unwrap();
        let p = ProjPoint::new(w, [q(1), q(1), q(1)]).unwrap();
        assert!(certify_absence(&unsat, &p, 1).is_err());

        let f = delta(2);
        let wrong = ProjPoint::new(WeightVector::std(), [q(1), q(1), q(1)]).unwrap();
        assert!(matches!(
            certify_absence(&f, &wrong, 1),
            Err(FolError::WeightMismatch(_, _))
        ));

        // [2:2:0] on P(2,3,5) has no Gaussian rational cover
        // representative: chart 0 needs a square root of 1/2 and
        // chart 1 a cube root of 1/2
        let f235 = fibration(WeightVector::new(2, 3, 5));
        let bad = ProjPoint::new(f235.w, [q(2), q(2), q(0)]).unwrap();
        let r = certify_absence(&f235, &bad, 1);
        assert!(matches!(r, Err(FolError::Unsupported(_))));
    }

    #[test]
    fn extactic_polynomial_is_divisible_by_invariant_restrictions() {
        // chart 0 of the k = 2 example with n = 2: the invariant curve
        // x2 restricts to the cover variable y, which must divide the
        // symbolic extactic determinant
        let f = delta(2);
        let e = extactic_polynomial(&f, 0, 2).unwrap();
        assert!(!e.is_zero());
        assert!(x(2).divides(&e));
    }
}
