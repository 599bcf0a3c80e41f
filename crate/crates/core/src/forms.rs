//! Differential forms with quasi-homogeneous polynomial coefficients on
//! a weighted projective plane.
//!
//! A degree-d one-form is w = A0 dx0 + A1 dx1 + A2 dx2 with A_i
//! quasi-homogeneous of degree d - l_i and with vanishing contraction
//! against the radial (Euler) field R = sum l_i x_i d/dx_i. The radial
//! condition is what makes w descend to the quotient plane.

use crate::error::{FolError, Result};
use crate::linalg::kernel_basis;
use crate::poly::{Exps, QHPoly};
use crate::scalar::GaussRat;
use crate::weights::WeightVector;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct OneForm {
    pub w: WeightVector,
    /// Coefficients of dx0, dx1, dx2.
    pub a: [QHPoly; 3],
}

#[derive(Clone, PartialEq, Eq)]
pub struct TwoForm {
    pub w: WeightVector,
    /// Coefficient of dx0 ^ dx1.
    pub c01: QHPoly,
    /// Coefficient of dx0 ^ dx2.
    pub c02: QHPoly,
    /// Coefficient of dx1 ^ dx2.
    pub c12: QHPoly,
}

#[derive(Clone, PartialEq, Eq)]
pub struct VectorField {
    pub w: WeightVector,
    /// Coefficients of d/dx0, d/dx1, d/dx2.
    pub b: [QHPoly; 3],
}

impl OneForm {
    pub fn new(w: WeightVector, a: [QHPoly; 3]) -> Self {
        OneForm { w, a }
    }

    pub fn zero(w: WeightVector) -> Self {
        OneForm::new(w, [QHPoly::zero(), QHPoly::zero(), QHPoly::zero()])
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|p| p.is_zero())
    }

    fn wl(&self) -> [i64; 3] {
        [self.w.l[0] as i64, self.w.l[1] as i64, self.w.l[2] as i64]
    }

    /// i_R w = sum l_i x_i A_i; identically zero exactly when the form
    /// descends to the weighted plane.
    pub fn contract_radial(&self) -> QHPoly {
        let mut s = QHPoly::zero();
        for i in 0..3 {
            let mut e = [0u32; 3];
            e[i] = 1;
            s = &s + &self.a[i].mul_mono(&GaussRat::from_int(self.w.l[i] as i64), &e);
        }
        s
    }

    /// The degree d with deg A_i = d - l_i for every nonzero component.
    pub fn degree(&self) -> Result<i64> {
        let wl = self.wl();
        let mut d: Option<i64> = None;
        for i in 0..3 {
            if self.a[i].is_zero() {
                continue;
            }
            let di = self.a[i].quasi_degree(&wl).ok_or(FolError::NotQuasiHomogeneous {
                which: format!("dx{} coefficient", i),
            })? + wl[i];
            match d {
                None => d = Some(di),
                Some(prev) if prev == di => {}
                Some(prev) => {
                    return Err(FolError::DegreeIncompatible {
                        detail: format!("dx{} gives {} but an earlier component gives {}", i, di, prev),
                    })
                }
            }
        }
        d.ok_or(FolError::ZeroForm)
    }

    /// Full well-formedness: quasi-homogeneous pieces of one common
    /// degree and zero radial contraction.
    pub fn validate(&self) -> Result<i64> {
        let d = self.degree()?;
        let r = self.contract_radial();
        if !r.is_zero() {
            return Err(FolError::RadialContractionNonzero(r.to_text()));
        }
        Ok(d)
    }

    /// gcd of the three coefficients; constant exactly when saturated.
    pub fn coefficient_gcd(&self) -> QHPoly {
        QHPoly::gcd_many(self.a.iter())
    }

    pub fn is_saturated(&self) -> bool {
        let g = self.coefficient_gcd();
        !g.is_zero() && g.is_constant()
    }

    /// Divide out the coefficient gcd; returns (saturated form, gcd).
    pub fn saturate(&self) -> (OneForm, QHPoly) {
        let g = self.coefficient_gcd();
        if g.is_zero() || g.is_constant() {
            return (self.clone(), QHPoly::one());
        }
        let a = [
            self.a[0].div_exact(&g).expect("gcd divides"),
            self.a[1].div_exact(&g).expect("gcd divides"),
            self.a[2].div_exact(&g).expect("gcd divides"),
        ];
        (OneForm::new(self.w, a), g)
    }

    /// w ^ dF, the obstruction two-form for invariance of {F = 0}.
    pub fn wedge_df(&self, f: &QHPoly) -> TwoForm {
        let d0 = f.derivative(0);
        let d1 = f.derivative(1);
        let d2 = f.derivative(2);
        TwoForm {
            w: self.w,
            c01: &(&self.a[0] * &d1) - &(&self.a[1] * &d0),
            c02: &(&self.a[0] * &d2) - &(&self.a[2] * &d0),
            c12: &(&self.a[1] * &d2) - &(&self.a[2] * &d1),
        }
    }

    /// Some(theta) with w ^ dF = F * theta when {F = 0} is invariant.
    pub fn invariance_quotient(&self, f: &QHPoly) -> Option<TwoForm> {
        assert!(!f.is_zero(), "invariance of the zero curve is undefined");
        let t = self.wedge_df(f);
        Some(TwoForm {
            w: self.w,
            c01: t.c01.div_exact(f)?,
            c02: t.c02.div_exact(f)?,
            c12: t.c12.div_exact(f)?,
        })
    }

    pub fn is_invariant(&self, f: &QHPoly) -> bool {
        self.invariance_quotient(f).is_some()
    }

    /// Pullback along phi(x) = (x0^l0, x1^l1, x2^l2) to the standard
    /// plane: dx_i picks up l_i x_i^(l_i - 1).
    pub fn pullback_phi(&self) -> OneForm {
        let k = [self.w.l[0], self.w.l[1], self.w.l[2]];
        let mut a = [QHPoly::zero(), QHPoly::zero(), QHPoly::zero()];
        for i in 0..3 {
            let comp = self.a[i].subst_powers(&k);
            let mut e = [0u32; 3];
            e[i] = k[i] - 1;
            a[i] = comp.mul_mono(&GaussRat::from_int(k[i] as i64), &e);
        }
        OneForm::new(WeightVector::std(), a)
    }

    /// Pullback along the monomial map psi(x) = (x0^m0, x1^m1, x2^m2)
    /// from the space with weights `w_dom` into the space this form
    /// lives on. Well-defined exactly when m_i * w_dom_i = c * l_i for
    /// a uniform positive integer c; degrees then rescale by c, which
    /// is returned alongside the pulled-back form.
    pub fn pullback_powers(&self, m: &[u32; 3], w_dom: WeightVector) -> Result<(OneForm, u32)> {
        if m.iter().any(|&mi| mi == 0) {
            return Err(FolError::DegreeIncompatible {
                detail: "pullback exponents must be positive".to_string(),
            });
        }
        let prod0 = u64::from(m[0]) * u64::from(w_dom.l[0]);
        if prod0 % u64::from(self.w.l[0]) != 0 {
            return Err(FolError::DegreeIncompatible {
                detail: format!("m0*w_dom0 = {} not divisible by l0 = {}", prod0, self.w.l[0]),
            });
        }
        let c = prod0 / u64::from(self.w.l[0]);
        for i in 0..3 {
            let lhs = u64::from(m[i]) * u64::from(w_dom.l[i]);
            if lhs != c * u64::from(self.w.l[i]) {
                return Err(FolError::DegreeIncompatible {
                    detail: format!(
                        "m{i}*w_dom{i} = {lhs} != {c}*l{i} = {}",
                        c * u64::from(self.w.l[i])
                    ),
                });
            }
        }
        let mut a = [QHPoly::zero(), QHPoly::zero(), QHPoly::zero()];
        for i in 0..3 {
            let comp = self.a[i].subst_powers(m);
            let mut e = [0u32; 3];
            e[i] = m[i] - 1;
            a[i] = comp.mul_mono(&GaussRat::from_int(m[i] as i64), &e);
        }
        Ok((OneForm::new(w_dom, a), c as u32))
    }

    pub fn scale(&self, c: &GaussRat) -> OneForm {
        OneForm::new(self.w, [self.a[0].scale(c), self.a[1].scale(c), self.a[2].scale(c)])
    }

    pub fn add(&self, other: &OneForm) -> OneForm {
        assert_eq!(self.w, other.w, "weight mismatch");
        OneForm::new(
            self.w,
            [
                &self.a[0] + &other.a[0],
                &self.a[1] + &other.a[1],
                &self.a[2] + &other.a[2],
            ],
        )
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for i in 0..3 {
            if self.a[i].is_zero() {
                continue;
            }
            parts.push(format!("({})*dx{}", self.a[i].to_text(), i));
        }
        parts.join(" + ")
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on P{}", self.to_text(), self.w)
    }
}

impl TwoForm {
    pub fn is_zero(&self) -> bool {
        self.c01.is_zero() && self.c02.is_zero() && self.c12.is_zero()
    }

    /// Common degree d with deg C_jk = d - l_j - l_k, when consistent.
    pub fn degree(&self) -> Result<i64> {
        let wl = [self.w.l[0] as i64, self.w.l[1] as i64, self.w.l[2] as i64];
        let mut d: Option<i64> = None;
        for (p, lj, lk, name) in [
            (&self.c01, wl[0], wl[1], "dx0^dx1"),
            (&self.c02, wl[0], wl[2], "dx0^dx2"),
            (&self.c12, wl[1], wl[2], "dx1^dx2"),
        ] {
            if p.is_zero() {
                continue;
            }
            let di = p.quasi_degree(&wl).ok_or(FolError::NotQuasiHomogeneous {
                which: name.to_string(),
            })? + lj + lk;
            match d {
                None => d = Some(di),
                Some(prev) if prev == di => {}
                Some(prev) => {
                    return Err(FolError::DegreeIncompatible {
                        detail: format!("{} gives {} but an earlier component gives {}", name, di, prev),
                    })
                }
            }
        }
        d.ok_or(FolError::ZeroForm)
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (p, name) in [
            (&self.c01, "dx0^dx1"),
            (&self.c02, "dx0^dx2"),
            (&self.c12, "dx1^dx2"),
        ] {
            if !p.is_zero() {
                parts.push(format!("({})*{}", p.to_text(), name));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl VectorField {
    pub fn new(w: WeightVector, b: [QHPoly; 3]) -> Self {
        VectorField { w, b }
    }

    /// The radial field R = sum l_i x_i d/dx_i.
    pub fn radial(w: WeightVector) -> Self {
        let b = [
            QHPoly::var(0).scale(&GaussRat::from_int(w.l[0] as i64)),
            QHPoly::var(1).scale(&GaussRat::from_int(w.l[1] as i64)),
            QHPoly::var(2).scale(&GaussRat::from_int(w.l[2] as i64)),
        ];
        VectorField::new(w, b)
    }

    /// w = i_X i_R Omega with the orientation fixed by
    /// i_R Omega = l0 x0 dx1^dx2 - l1 x1 dx0^dx2 + l2 x2 dx0^dx1.
    /// Componentwise:
    ///   A0 = l1 x1 B2 - l2 x2 B1
    ///   A1 = l2 x2 B0 - l0 x0 B2
    ///   A2 = l0 x0 B1 - l1 x1 B0
    pub fn to_one_form(&self) -> OneForm {
        let l = |i: usize| GaussRat::from_int(self.w.l[i] as i64);
        let lx = |i: usize| {
            let mut e = [0u32; 3];
            e[i] = 1;
            QHPoly::mono(l(i), e)
        };
        let a0 = &(&lx(1) * &self.b[2]) - &(&lx(2) * &self.b[1]);
        let a1 = &(&lx(2) * &self.b[0]) - &(&lx(0) * &self.b[2]);
        let a2 = &(&lx(0) * &self.b[1]) - &(&lx(1) * &self.b[0]);
        OneForm::new(self.w, [a0, a1, a2])
    }

    /// Pairing i_X w = sum B_i A_i.
    pub fn contract(&self, form: &OneForm) -> QHPoly {
        assert_eq!(self.w, form.w, "weight mismatch");
        let mut s = QHPoly::zero();
        for i in 0..3 {
            s = &s + &(&self.b[i] * &form.a[i]);
        }
        s
    }
}

/// All exponent triples of weighted degree n, ascending lex.
pub fn monomials_of_degree(w: &WeightVector, n: i64) -> Vec<Exps> {
    let mut out = Vec::new();
    if n < 0 {
        return out;
    }
    let l = [w.l[0] as i64, w.l[1] as i64, w.l[2] as i64];
    let mut e0 = 0i64;
    while e0 * l[0] <= n {
        let rem0 = n - e0 * l[0];
        let mut e1 = 0i64;
        while e1 * l[1] <= rem0 {
            let rem1 = rem0 - e1 * l[1];
            if rem1 % l[2] == 0 {
                out.push([e0 as u32, e1 as u32, (rem1 / l[2]) as u32]);
            }
            e1 += 1;
        }
        e0 += 1;
    }
    out
}

/// Dimension data for the space of degree-d one-forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FolDims {
    /// Monomial counts for the three coefficient spaces.
    pub coeff_dims: [usize; 3],
    /// Rank of the radial-contraction constraint.
    pub constraint_rank: usize,
    /// Dimension of the solution space.
    pub dim: usize,
}

struct FolSpace {
    monos: [Vec<Exps>; 3],
    /// Rows of the constraint matrix, one per monomial of degree d.
    matrix: Vec<Vec<GaussRat>>,
}

fn fol_space(w: &WeightVector, d: i64) -> FolSpace {
    let monos = [
        monomials_of_degree(w, d - w.l[0] as i64),
        monomials_of_degree(w, d - w.l[1] as i64),
        monomials_of_degree(w, d - w.l[2] as i64),
    ];
    let targets = monomials_of_degree(w, d);
    let tindex: std::collections::BTreeMap<Exps, usize> =
        targets.iter().enumerate().map(|(k, e)| (*e, k)).collect();
    let ncols: usize = monos.iter().map(|m| m.len()).sum();
    let mut matrix = vec![vec![GaussRat::zero(); ncols]; targets.len()];
    let mut col = 0;
    for i in 0..3 {
        for e in &monos[i] {
            let mut t = *e;
            t[i] += 1;
            let row = tindex[&t];
            matrix[row][col] = &matrix[row][col] + &GaussRat::from_int(w.l[i] as i64);
            col += 1;
        }
    }
    FolSpace { monos, matrix }
}

/// Basis of the space of one-forms of degree d: coefficients
/// quasi-homogeneous of degree d - l_i with i_R w = 0. Deterministic:
/// monomials ascend lexicographically and the kernel comes from the
/// reduced echelon form.
pub fn basis_fol(w: &WeightVector, d: i64) -> Vec<OneForm> {
    let space = fol_space(w, d);
    let kernel = kernel_basis(space.matrix);
    let mut out = Vec::new();
    for v in kernel {
        let mut a = [QHPoly::zero(), QHPoly::zero(), QHPoly::zero()];
        let mut col = 0;
        for i in 0..3 {
            for e in &space.monos[i] {
                if !v[col].is_zero() {
                    a[i] = &a[i] + &QHPoly::mono(v[col].clone(), *e);
                }
                col += 1;
            }
        }
        out.push(OneForm::new(*w, a));
    }
    out
}

pub fn section_dims(w: &WeightVector, d: i64) -> FolDims {
    let space = fol_space(w, d);
    let coeff_dims = [space.monos[0].len(), space.monos[1].len(), space.monos[2].len()];
    let total: usize = coeff_dims.iter().sum();
    let r = crate::linalg::rank(space.matrix);
    FolDims {
        coeff_dims,
        constraint_rank: r,
        dim: total - r,
    }
}
