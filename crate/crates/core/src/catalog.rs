//! Built-in foliation families on P(l0, l1, l2): the normal forms in
//! low normal degree, the examples realizing the sharp degree bounds,
//! and the counting tools used alongside them (Frobenius numbers,
//! weighted Bezout products, degree bounds, line searches).
//!
//! Constructors validate their arithmetic side conditions and report
//! the violated condition by name. Genericity assumptions that are not
//! decidable over Q(i) (Z-linear independence of the beta parameters)
//! are documented but not enforced.

use crate::chart::{homogenize, ChartForm};
use crate::error::{FolError, Result};
use crate::foliation::{singular_points_chart, Foliation, ProjPoint};
use crate::forms::OneForm;
use crate::linalg::rank;
use crate::poly::QHPoly;
use crate::roots::gauss_roots;
use crate::scalar::GaussRat;
use crate::weights::{reduce_weights, WeightVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;
use std::collections::BTreeMap;

fn x(i: usize) -> QHPoly {
    QHPoly::var(i)
}

fn q(n: i64) -> GaussRat {
    GaussRat::from_int(n)
}

fn ls(w: &WeightVector) -> [i64; 3] {
    [w.l[0] as i64, w.l[1] as i64, w.l[2] as i64]
}

fn param(detail: String) -> FolError {
    FolError::Parameter { detail }
}

fn mono(e: [u32; 3]) -> QHPoly {
    QHPoly::mono(GaussRat::one(), e)
}

/// l_j x_j dx_i - l_i x_i dx_j: the fibration by the ratio of the two
/// coordinates, of normal degree l_i + l_j. Every member of the pencil
/// s x_i^{l_j} - t x_j^{l_i} is invariant.
pub fn rational_fibration(w: WeightVector, i: usize, j: usize) -> Result<Foliation> {
    if i >= 3 || j >= 3 || i == j {
        return Err(param(format!("({i}, {j}) must be two distinct coordinate indices")));
    }
    let l = ls(&w);
    let mut a = [QHPoly::zero(), QHPoly::zero(), QHPoly::zero()];
    a[i] = x(j).scale(&q(l[j]));
    a[j] = x(i).scale(&q(-l[i]));
    Foliation::new(OneForm::new(w, a))
}

/// (d - l0) G dx0 - l0 x0 dG with G = x2 x0^i + x1^{j+1}, the rational
/// family in degree d = (i+1) l0 + l2 = (j+1) l1 + l0; both x0 and G
/// are invariant.
pub fn rational_3(w: WeightVector, i: u32, j: u32) -> Result<Foliation> {
    let [l0, l1, l2] = ls(&w);
    if i < 1 || j < 1 {
        return Err(param(format!("exponents (i, j) = ({i}, {j}) must both be at least 1")));
    }
    let d = (i as i64 + 1) * l0 + l2;
    let d1 = (j as i64 + 1) * l1 + l0;
    if d != d1 {
        return Err(param(format!("(i+1) l0 + l2 = {d} differs from (j+1) l1 + l0 = {d1}")));
    }
    let g = &(x(2) * x(0).pow(i)) + &x(1).pow(j + 1);
    let a0 = &g.scale(&q(d - l0)) - &mono([i, 0, 1]).scale(&q(i as i64 * l0));
    let a1 = mono([1, j, 0]).scale(&q(-l0 * (j as i64 + 1)));
    let a2 = mono([i + 1, 0, 0]).scale(&q(-l0));
    Foliation::new(OneForm::new(w, [a0, a1, a2]))
}

/// The second branch in degree d = l1 + l2 on P(1, l1, l2): the
/// rational-3 shape with i = l1 - 1 and j l1 + 1 = l2.
pub fn rational_4b(w: WeightVector) -> Result<Foliation> {
    let [l0, l1, l2] = ls(&w);
    if l0 != 1 || l1 <= l0 || l2 <= l1 {
        return Err(param(format!("weights {w} must satisfy 1 = l0 < l1 < l2")));
    }
    if (l2 - 1) % l1 != 0 {
        return Err(param(format!("l2 - 1 = {} is not a multiple of l1 = {l1}", l2 - 1)));
    }
    rational_3(w, l1 as u32 - 1, ((l2 - 1) / l1) as u32)
}

/// The closed logarithmic form a x1 x2 dx0 + b x0 x2 dx1 + c x0 x1 dx2
/// with a l0 + b l1 + c l2 = 0 and a, b, c all nonzero; degree |l|.
fn log_closed(w: WeightVector, a: &GaussRat, b: &GaussRat, c: &GaussRat) -> Result<Foliation> {
    let [l0, l1, l2] = ls(&w);
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(param("residues a, b, c must all be nonzero".to_string()));
    }
    let balance = &(&(a * &q(l0)) + &(b * &q(l1))) + &(c * &q(l2));
    if !balance.is_zero() {
        return Err(param(format!("a l0 + b l1 + c l2 = {} must vanish", balance.to_text())));
    }
    let a0 = (x(1) * x(2)).scale(a);
    let a1 = (x(0) * x(2)).scale(b);
    let a2 = (x(0) * x(1)).scale(c);
    Foliation::new(OneForm::new(w, [a0, a1, a2]))
}

/// Logarithmic form with poles on the three coordinate curves. On top
/// of the residue conditions of the family, every representable pair
/// i, j >= 1 with i l0 + j l1 = l2 must satisfy a + i c != 0; the
/// failing parameters give a form conjugate to the log-2 family with
/// those exponents and are rejected.
pub fn log_1(w: WeightVector, a: &GaussRat, b: &GaussRat, c: &GaussRat) -> Result<Foliation> {
    let [l0, l1, l2] = ls(&w);
    let mut i = 1i64;
    while i * l0 + l1 <= l2 {
        if (l2 - i * l0) % l1 == 0 {
            let j = (l2 - i * l0) / l1;
            if (a + &(c * &q(i))).is_zero() {
                return Err(param(format!(
                    "a + {i} c = 0 with {i} l0 + {j} l1 = l2; these residues give a form conjugate to log-2 with (i, j) = ({i}, {j})"
                )));
            }
        }
        i += 1;
    }
    log_closed(w, a, b, c)
}

/// (l1 x0^i x1^{j+1} - i x1 x2) dx0 - (l0 x0^{i+1} x1^j + j x0 x2) dx1
/// + x0 x1 dx2 with i >= 1, j >= 0 and i l0 + j l1 = l2; degree |l|.
/// Both coordinate lines x0 and x1 are invariant.
pub fn log_2(w: WeightVector, i: u32, j: u32) -> Result<Foliation> {
    let [l0, l1, l2] = ls(&w);
    if i < 1 {
        return Err(param(format!("exponent i = {i} must be at least 1")));
    }
    if i as i64 * l0 + j as i64 * l1 != l2 {
        return Err(param(format!("i l0 + j l1 = {} differs from l2 = {l2}", i as i64 * l0 + j as i64 * l1)));
    }
    let a0 = &mono([i, j + 1, 0]).scale(&q(l1)) - &(x(1) * x(2)).scale(&q(i as i64));
    let a1 = &mono([i + 1, j, 0]).scale(&q(-l0)) - &(x(0) * x(2)).scale(&q(j as i64));
    let a2 = x(0) * x(1);
    Foliation::new(OneForm::new(w, [a0, a1, a2]))
}

/// (l2 x0^{l1} x2 - l1 x1 x2) dx0 + x0 x2 dx1 - x0^{l1+1} dx2 on
/// P(1, l1, l2) with 1 < l1 < l2; degree |l|. The curves x0 and x2 are
/// invariant.
pub fn log_3(w: WeightVector) -> Result<Foliation> {
    let [l0, l1, l2] = ls(&w);
    if l0 != 1 || l1 <= l0 || l2 <= l1 {
        return Err(param(format!("weights {w} must satisfy 1 = l0 < l1 < l2")));
    }
    let a0 = &mono([l1 as u32, 0, 1]).scale(&q(l2)) - &(x(1) * x(2)).scale(&q(l1));
    let a1 = x(0) * x(2);
    let a2 = mono([l1 as u32 + 1, 0, 0]).scale(&q(-1));
    Foliation::new(OneForm::new(w, [a0, a1, a2]))
}

fn special_weights(k: u32) -> Result<WeightVector> {
    if k < 1 {
        return Err(param(format!("weight k = {k} must be positive")));
    }
    Ok(WeightVector::new(1, 1, k))
}

/// (k+1) F dx0 - x0 dF with F = x0 x2 + x1^{k+1} on P(1, 1, k); degree
/// k + 2, singular only at [0:0:1], with x0 and F invariant.
pub fn special_a(k: u32) -> Result<Foliation> {
    let w = special_weights(k)?;
    let ki = k as i64;
    let a0 = &(x(0) * x(2)).scale(&q(ki)) + &x(1).pow(k + 1).scale(&q(ki + 1));
    let a1 = (x(0) * x(1).pow(k)).scale(&q(-(ki + 1)));
    let a2 = x(0).pow(2).scale(&q(-1));
    Foliation::new(OneForm::new(w, [a0, a1, a2]))
}

/// (k x0 x2 - x1 x2) dx0 + x0 x2 dx1 - x0^2 dx2 on P(1, 1, k); degree
/// k + 2, singular at [0:1:0] and [0:0:1], with x0 and x2 invariant.
pub fn special_b(k: u32) -> Result<Foliation> {
    let w = special_weights(k)?;
    let a0 = &(x(0) * x(2)).scale(&q(k as i64)) - &(x(1) * x(2));
    let a1 = x(0) * x(2);
    let a2 = x(0).pow(2).scale(&q(-1));
    Foliation::new(OneForm::new(w, [a0, a1, a2]))
}

/// (x0^k x1 - k x1 x2) dx0 - x0^{k+1} dx1 + x0 x1 dx2 on P(1, 1, k);
/// degree k + 2, singular at [0:1:0] and [0:0:1], with both lines x0
/// and x1 invariant.
pub fn special_c(k: u32) -> Result<Foliation> {
    let w = special_weights(k)?;
    let a0 = &(x(0).pow(k) * x(1)) - &(x(1) * x(2)).scale(&q(k as i64));
    let a1 = x(0).pow(k + 1).scale(&q(-1));
    let a2 = x(0) * x(1);
    Foliation::new(OneForm::new(w, [a0, a1, a2]))
}

/// (x0^i x1^{k-i+1} - i x1 x2) dx0 - (x0^{i+1} x1^{k-i} + (k-i) x0 x2)
/// dx1 + x0 x1 dx2 with 0 < i < k; degree k + 2 on P(1, 1, k), all
/// three vertices singular, lines x0 and x1 invariant.
pub fn special_d(k: u32, i: u32) -> Result<Foliation> {
    let w = special_weights(k)?;
    if i < 1 || i >= k {
        return Err(param(format!("exponent i = {i} must satisfy 0 < i < k = {k}")));
    }
    let a0 = &mono([i, k - i + 1, 0]) - &(x(1) * x(2)).scale(&q(i as i64));
    let a1 = (&mono([i + 1, k - i, 0]) + &(x(0) * x(2)).scale(&q((k - i) as i64))).scale(&q(-1));
    let a2 = x(0) * x(1);
    Foliation::new(OneForm::new(w, [a0, a1, a2]))
}

/// The logarithmic form a x1 x2 dx0 + b x0 x2 dx1 + c x0 x1 dx2 on
/// P(1, 1, k) with a + b + c k = 0; degree k + 2, all three vertices
/// singular, with the two lines and the degree-k curve x2 invariant.
pub fn special_e(k: u32, a: &GaussRat, b: &GaussRat, c: &GaussRat) -> Result<Foliation> {
    log_closed(special_weights(k)?, a, b, c)
}

/// x0 x1 x2 G (lambda l1 l2 dx0/x0 + mu l0 l2 dx1/x1 + gamma l0 l1
/// dx2/x2 - sigma dG/G) with G = x0^{l1 l2} + x1^{l0 l2} + x2^{l0 l1}
/// and sigma = lambda + mu + gamma; degree l0 l1 l2 + |l|. The four
/// polar curves x0, x1, x2, G are invariant. Nonzero residues keep the
/// form saturated; the stronger genericity used to kill separatrices
/// off the polar locus (Z-linear independence of the residues) has no
/// rational witnesses and is not checked.
pub fn beta(w: WeightVector, lambda: &GaussRat, mu: &GaussRat, gamma: &GaussRat) -> Result<Foliation> {
    let sigma = &(lambda + mu) + gamma;
    for (name, v) in [("lambda", lambda), ("mu", mu), ("gamma", gamma), ("sigma", &sigma)] {
        if v.is_zero() {
            return Err(param(format!("residue {name} must be nonzero")));
        }
    }
    let e = |a: u32, b: u32| -> Result<u32> {
        a.checked_mul(b).ok_or_else(|| param("weight product overflows the exponent range".to_string()))
    };
    let m = [e(w.l[1], w.l[2])?, e(w.l[0], w.l[2])?, e(w.l[0], w.l[1])?];
    let g = &(&mono([m[0], 0, 0]) + &mono([0, m[1], 0])) + &mono([0, 0, m[2]]);
    let residues = [lambda, mu, gamma];
    let mut a = [QHPoly::zero(), QHPoly::zero(), QHPoly::zero()];
    for i in 0..3 {
        let (j, k) = WeightVector::others(i);
        let mut pole = [0u32; 3];
        pole[i] = m[i];
        let bracket = &g.scale(residues[i]) - &QHPoly::mono(sigma.clone(), pole);
        a[i] = (&(x(j) * x(k)) * &bracket).scale(&q(m[i] as i64));
    }
    Foliation::new(OneForm::new(w, a))
}

/// The beta family on the standard plane with residues (1, 1, -1);
/// pulling it back along x_i -> x_i^{l_j l_k} recovers beta on
/// P(l0, l1, l2) times the obvious monomial.
pub fn omega_p2() -> Foliation {
    beta(WeightVector::std(), &q(1), &q(1), &q(-1)).expect("fixed nonzero residues")
}

/// -k x2 (x2 - x0 x1^{k-1}) dx0 + k x0 x2 (x1^{k-1} - x0 x1^{k-2}) dx1
/// + x0 (x2 - x1^k) dx2 on P(1, 1, k), k >= 2: degree 2k + 1 with
/// singular set {[1:0:0], [0:1:0], [1:1:1]} and no invariant curve
/// through [1:1:1].
pub fn delta(k: u32) -> Result<Foliation> {
    if k < 2 {
        return Err(param(format!("k = {k} must be at least 2")));
    }
    let w = WeightVector::new(1, 1, k);
    let ki = k as i64;
    let a0 = (&(x(2) * x(2)) - &(x(0) * x(1).pow(k - 1) * x(2))).scale(&q(-ki));
    let a1 = (x(0) * x(2) * (&x(1).pow(k - 1) - &(x(0) * x(1).pow(k - 2)))).scale(&q(ki));
    let a2 = x(0) * (&x(2) - &x(1).pow(k));
    Foliation::new(OneForm::new(w, [a0, a1, a2]))
}

/// Minimal homogenization of the affine form (x1^{l2} - 1) x0^{j0-1}
/// dx0 - a (x0^{l2} - 1) x1^{j1-1} dx1 read in the chart at the third
/// vertex; requires 1 <= j0, j1 <= l2, the congruence j0 l0 = j1 l1
/// mod l2, and a nonreal parameter a. No invariant curve of the result
/// passes through [0:0:1].
pub fn eta(w: WeightVector, j0: u32, j1: u32, a: &GaussRat) -> Result<Foliation> {
    let [l0, l1, l2] = ls(&w);
    if j0 < 1 || j0 as i64 > l2 || j1 < 1 || j1 as i64 > l2 {
        return Err(param(format!("exponents (j0, j1) = ({j0}, {j1}) must lie in 1..={l2}")));
    }
    if (j0 as i64 * l0 - j1 as i64 * l1).rem_euclid(l2) != 0 {
        return Err(param(format!("j0 l0 = {} and j1 l1 = {} differ mod l2 = {l2}", j0 as i64 * l0, j1 as i64 * l1)));
    }
    if a.is_real() {
        return Err(param("parameter a must have a nonzero imaginary part".to_string()));
    }
    let ca = &mono([j0 - 1, l2 as u32, 0]) - &mono([j0 - 1, 0, 0]);
    let cb = (&mono([l2 as u32, j1 - 1, 0]) - &mono([0, j1 - 1, 0])).scale(&-a.clone());
    let cf = ChartForm { w, chart: 2, a: ca, b: cb };
    let (form, d) = homogenize(&cf)?;
    let f = Foliation::new(form)?;
    debug_assert_eq!(f.d, d);
    Ok(f)
}

/// One family instance per tag, with its parameters embedded; used by
/// the command line to build examples uniformly.
#[derive(Clone, Debug, PartialEq)]
pub enum NormalForm {
    Rational1(WeightVector),
    Rational2(WeightVector),
    Rational3 { w: WeightVector, i: u32, j: u32 },
    Rational4a(WeightVector),
    Rational4b(WeightVector),
    Log1 { w: WeightVector, a: GaussRat, b: GaussRat, c: GaussRat },
    Log2 { w: WeightVector, i: u32, j: u32 },
    Log3(WeightVector),
    SpecialA { k: u32 },
    SpecialB { k: u32 },
    SpecialC { k: u32 },
    SpecialD { k: u32, i: u32 },
    SpecialE { k: u32, a: GaussRat, b: GaussRat, c: GaussRat },
    Beta { w: WeightVector, lambda: GaussRat, mu: GaussRat, gamma: GaussRat },
    OmegaP2,
    Delta { k: u32 },
    Eta { w: WeightVector, j0: u32, j1: u32, a: GaussRat },
}

impl NormalForm {
    pub fn tag(&self) -> &'static str {
        match self {
            NormalForm::Rational1(_) => "rational-1",
            NormalForm::Rational2(_) => "rational-2",
            NormalForm::Rational3 { .. } => "rational-3",
            NormalForm::Rational4a(_) => "rational-4a",
            NormalForm::Rational4b(_) => "rational-4b",
            NormalForm::Log1 { .. } => "log-1",
            NormalForm::Log2 { .. } => "log-2",
            NormalForm::Log3(_) => "log-3",
            NormalForm::SpecialA { .. } => "special-a",
            NormalForm::SpecialB { .. } => "special-b",
            NormalForm::SpecialC { .. } => "special-c",
            NormalForm::SpecialD { .. } => "special-d",
            NormalForm::SpecialE { .. } => "special-e",
            NormalForm::Beta { .. } => "beta",
            NormalForm::OmegaP2 => "omega-p2",
            NormalForm::Delta { .. } => "delta",
            NormalForm::Eta { .. } => "eta",
        }
    }

    pub fn build(&self) -> Result<Foliation> {
        match self {
            NormalForm::Rational1(w) => rational_fibration(*w, 0, 1),
            NormalForm::Rational2(w) => rational_fibration(*w, 0, 2),
            NormalForm::Rational3 { w, i, j } => rational_3(*w, *i, *j),
            NormalForm::Rational4a(w) => rational_fibration(*w, 1, 2),
            NormalForm::Rational4b(w) => rational_4b(*w),
            NormalForm::Log1 { w, a, b, c } => log_1(*w, a, b, c),
            NormalForm::Log2 { w, i, j } => log_2(*w, *i, *j),
            NormalForm::Log3(w) => log_3(*w),
            NormalForm::SpecialA { k } => special_a(*k),
            NormalForm::SpecialB { k } => special_b(*k),
            NormalForm::SpecialC { k } => special_c(*k),
            NormalForm::SpecialD { k, i } => special_d(*k, *i),
            NormalForm::SpecialE { k, a, b, c } => special_e(*k, a, b, c),
            NormalForm::Beta { w, lambda, mu, gamma } => beta(*w, lambda, mu, gamma),
            NormalForm::OmegaP2 => Ok(omega_p2()),
            NormalForm::Delta { k } => delta(*k),
            NormalForm::Eta { w, j0, j1, a } => eta(*w, *j0, *j1, a),
        }
    }
}

/// One valid instance of every family; the expected normal degrees are
/// pinned in the tests.
pub fn presets() -> Vec<NormalForm> {
    let w = WeightVector::new(1, 2, 3);
    vec![
        NormalForm::Rational1(w),
        NormalForm::Rational2(w),
        NormalForm::Rational3 { w, i: 3, j: 2 },
        NormalForm::Rational4a(w),
        NormalForm::Rational4b(WeightVector::new(1, 2, 5)),
        NormalForm::Log1 { w, a: q(1), b: q(-2), c: q(1) },
        NormalForm::Log2 { w, i: 1, j: 1 },
        NormalForm::Log3(w),
        NormalForm::SpecialA { k: 2 },
        NormalForm::SpecialB { k: 2 },
        NormalForm::SpecialC { k: 2 },
        NormalForm::SpecialD { k: 3, i: 1 },
        NormalForm::SpecialE { k: 2, a: q(2), b: q(2), c: q(-2) },
        NormalForm::Beta { w, lambda: q(1), mu: q(1), gamma: q(-1) },
        NormalForm::OmegaP2,
        NormalForm::Delta { k: 2 },
        NormalForm::Eta { w: WeightVector::new(1, 1, 2), j0: 2, j1: 2, a: GaussRat::i() },
    ]
}

/// Largest integer not of the form a x + b y with x, y >= 0, for
/// coprime positive a, b: the value a b - a - b.
pub fn frobenius(a: i64, b: i64) -> Result<i64> {
    if a < 1 || b < 1 {
        return Err(param(format!("({a}, {b}) must be positive")));
    }
    if a.gcd(&b) != 1 {
        return Err(param(format!("({a}, {b}) must be coprime")));
    }
    Ok(a * b - a - b)
}

/// Nonnegative solution of a x + b y = n with the smallest x, for
/// coprime positive a, b. Every n past the Frobenius number is
/// representable.
pub fn represent(a: i64, b: i64, n: i64) -> Result<Option<(i64, i64)>> {
    frobenius(a, b)?;
    let mut xv = 0;
    while a * xv <= n {
        if (n - a * xv) % b == 0 {
            return Ok(Some((xv, (n - a * xv) / b)));
        }
        xv += 1;
    }
    Ok(None)
}

/// Degree thresholds past which a generic foliation has no invariant
/// algebraic curve, with the sharp threshold on P(1, 1, k) alongside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBounds {
    /// l0 l1 l2 + l0 l1 + 2 l2.
    pub general: i64,
    /// Threshold for foliations invariant under the product of the
    /// three cyclic weight groups: general - 2.
    pub group_invariant: i64,
    /// Sharp threshold 2k + 1 on P(1, 1, k) for k >= 2.
    pub special: Option<i64>,
    /// Four-term threshold computed from the reduced weights; for non
    /// coprime weights it applies to normal degrees scale * d.
    pub reduced: i64,
    /// Degree scale of the reduction isomorphism; 1 for pairwise
    /// coprime weights.
    pub scale: i64,
}

pub fn jouanolou_bounds(w: &WeightVector) -> DegreeBounds {
    let [l0, l1, l2] = ls(w);
    let general = l0 * l1 * l2 + l0 * l1 + 2 * l2;
    let special = if l0 == 1 && l1 == 1 && l2 >= 2 { Some(2 * l2 + 1) } else { None };
    let red = reduce_weights(w);
    let [r0, r1, r2] = ls(&red.reduced);
    DegreeBounds {
        general,
        group_invariant: general - 2,
        special,
        reduced: r0 * r1 * r2 + r0 * r1 + r0 * r2 + r1 * r2,
        scale: red.scale as i64,
    }
}

/// Threshold of generic curve absence on the Hirzebruch surface F_k in
/// bidegree (a, b): b >= 3 and a >= k b + 2.
pub fn hirzebruch_bound(a: i64, b: i64, k: i64) -> bool {
    b >= 3 && a >= k * b + 2
}

/// Intersection number of curves of degrees n1 and n2 on P(l0, l1, l2):
/// n1 n2 / (l0 l1 l2).
pub fn weighted_bezout(w: &WeightVector, n1: i64, n2: i64) -> Result<BigRational> {
    if n1 <= 0 || n2 <= 0 {
        return Err(param(format!("degrees ({n1}, {n2}) must be positive")));
    }
    let [l0, l1, l2] = ls(w);
    Ok(BigRational::new(BigInt::from(n1) * BigInt::from(n2), BigInt::from(l0 * l1 * l2)))
}

/// F * (l_b x_b dx_a - l_a x_a dx_b); contracts radially to zero
/// termwise.
fn monomial_rotation(w: &WeightVector, fac: QHPoly, ai: usize, bi: usize) -> OneForm {
    let l = ls(w);
    let mut a = [QHPoly::zero(), QHPoly::zero(), QHPoly::zero()];
    a[ai] = &fac * &x(bi).scale(&q(l[bi]));
    a[bi] = &fac * &x(ai).scale(&q(-l[ai]));
    OneForm::new(*w, a)
}

fn positive_rep(a: i64, b: i64, d: i64) -> Result<(u32, u32)> {
    match represent(a, b, d - a - b)? {
        Some((i, j)) => Ok((i as u32 + 1, j as u32 + 1)),
        None => Err(param(format!("{d} has no positive representation by ({a}, {b})"))),
    }
}

fn nonneg_rep(a: i64, b: i64, n: i64) -> Result<(u32, u32)> {
    match represent(a, b, n)? {
        Some((i, j)) => Ok((i as u32, j as u32)),
        None => Err(param(format!("{n} has no nonnegative representation by ({a}, {b})"))),
    }
}

/// Two degree-d forms whose evaluations stay independent at p, for p in
/// the four dense orbits of the coordinate automorphisms, together with
/// the rank of the evaluation pair at p. Needs d > l1 l2 so that the
/// required exponents are representable.
pub fn independence_forms(w: &WeightVector, d: i64, p: &ProjPoint) -> Result<(OneForm, OneForm, usize)> {
    let [l0, l1, l2] = ls(w);
    if d <= l1 * l2 {
        return Err(param(format!("degree {d} must exceed l1 l2 = {}", l1 * l2)));
    }
    let reps = [[1, 1, 1], [0, 1, 1], [1, 0, 1], [1, 1, 0]];
    let mut which = None;
    for (t, coords) in reps.iter().enumerate() {
        let rp = ProjPoint::new(*w, [q(coords[0]), q(coords[1]), q(coords[2])])?;
        if p.same_point(&rp) {
            which = Some((t, *coords));
            break;
        }
    }
    let (orbit, coords) = which.ok_or_else(|| {
        FolError::Unsupported("independence forms are defined on the four dense orbit representatives".to_string())
    })?;
    let alpha = || -> Result<OneForm> {
        let (i, j) = positive_rep(l1, l2, d)?;
        Ok(monomial_rotation(w, mono([0, i - 1, j - 1]), 1, 2))
    };
    let beta_f = || -> Result<OneForm> {
        let (i, j) = positive_rep(l0, l1, d)?;
        Ok(monomial_rotation(w, mono([i - 1, j - 1, 0]), 0, 1))
    };
    let (f1, f2) = match orbit {
        0 => (alpha()?, beta_f()?),
        1 => {
            let (i, j) = nonneg_rep(l1, l2, d - l0)?;
            let second = if i >= 1 {
                monomial_rotation(w, mono([0, i - 1, j]), 1, 0)
            } else {
                monomial_rotation(w, mono([0, i, j - 1]), 0, 2)
            };
            (alpha()?, second)
        }
        2 => {
            let (gi, gj) = positive_rep(l0, l2, d)?;
            let gamma = monomial_rotation(w, mono([gi - 1, 0, gj - 1]), 0, 2);
            let (i, j) = nonneg_rep(l0, l2, d - l1)?;
            let second = if i >= 1 {
                monomial_rotation(w, mono([i - 1, 0, j]), 0, 1)
            } else {
                monomial_rotation(w, mono([i, 0, j - 1]), 1, 2)
            };
            (gamma, second)
        }
        _ => {
            let (i, j) = nonneg_rep(l0, l1, d - l2)?;
            let second = if i >= 1 {
                monomial_rotation(w, mono([i - 1, j, 0]), 0, 2)
            } else {
                monomial_rotation(w, mono([i, j - 1, 0]), 1, 2)
            };
            (beta_f()?, second)
        }
    };
    let pt = [q(coords[0]), q(coords[1]), q(coords[2])];
    let rows: Vec<Vec<GaussRat>> = [&f1, &f2]
        .iter()
        .map(|f| (0..3).map(|i| f.a[i].eval(&pt)).collect())
        .collect();
    let r = rank(rows);
    Ok((f1, f2, r))
}

/// Case tags of the saturated degree k+2 classification on P(1, 1, k).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpecialCase {
    A,
    B,
    C,
    D,
    E,
    Unclassified,
}

/// Recognition evidence: which vertices are singular, whether any
/// singularity sits off the vertex set, and which coordinate curves
/// are invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialEvidence {
    pub case: SpecialCase,
    pub singular_vertices: Vec<usize>,
    /// False when a singular point off the vertices was found, or when
    /// some singularities live in a proper extension of Q(i).
    pub vertex_only: bool,
    pub line_x0_invariant: bool,
    pub line_x1_invariant: bool,
    pub curve_x2_invariant: bool,
}

/// Recognize which of the five degree k+2 cases a saturated foliation
/// on P(1, 1, k) belongs to, by its singular vertices and invariant
/// coordinate curves. Vertex-normalized representatives only: inputs
/// with singularities away from the vertices come back Unclassified
/// instead of being conjugated into position.
pub fn classify_special(f: &Foliation) -> Result<SpecialEvidence> {
    let l = ls(&f.w);
    if l[0] != 1 || l[1] != 1 {
        return Err(param(format!("weights {} must be (1, 1, k)", f.w)));
    }
    if f.d != l[2] + 2 {
        return Err(param(format!("normal degree {} must equal k + 2 = {}", f.d, l[2] + 2)));
    }
    if !f.saturated {
        return Err(param("classification needs a saturated form".to_string()));
    }
    let origin = GaussRat::zero();
    let mut singular_vertices = Vec::new();
    for i in 0..3 {
        // p_i is singular iff the chart pair vanishes at the cover origin
        let (a0, b0) = f.chart(i).eval(&origin, &origin);
        if a0.is_zero() && b0.is_zero() {
            singular_vertices.push(i);
        }
    }
    let mut vertex_only = true;
    for i in 0..3 {
        let sols = singular_points_chart(f, i)?;
        if sols.residual > 0 {
            vertex_only = false;
        }
        for (sx, sy) in &sols.solutions {
            let pt = ProjPoint::from_chart(f.w, i, sx, sy);
            if pt.vertex_index().is_none() {
                vertex_only = false;
            }
        }
    }
    let inv = [f.is_invariant(&x(0)), f.is_invariant(&x(1)), f.is_invariant(&x(2))];
    let case = if !vertex_only {
        SpecialCase::Unclassified
    } else {
        match (singular_vertices.as_slice(), inv) {
            ([2], [true, false, false]) => SpecialCase::A,
            ([1, 2], [true, false, true]) => SpecialCase::B,
            ([1, 2], [true, true, false]) => SpecialCase::C,
            ([0, 1, 2], [true, true, false]) => SpecialCase::D,
            ([0, 1, 2], [true, true, true]) => SpecialCase::E,
            _ => SpecialCase::Unclassified,
        }
    };
    Ok(SpecialEvidence {
        case,
        singular_vertices,
        vertex_only,
        line_x0_invariant: inv[0],
        line_x1_invariant: inv[1],
        curve_x2_invariant: inv[2],
    })
}

/// Invariant members of the line pencil x1 = s x0 on P(1, 1, k), plus
/// the vertical line x0. The slope condition is exact: s is invariant
/// iff it is a common root of every coefficient bucket of the two
/// restriction conditions, so `slopes` lists all Q(i)-rational
/// invariant slopes and `residual` is nonconstant exactly when
/// invariant slopes exist in a proper extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineSearch {
    /// Both conditions vanish identically: every line of the pencil is
    /// invariant.
    pub all_lines: bool,
    pub slopes: Vec<GaussRat>,
    /// Monic; carries the invariant slopes outside Q(i) in slot 1.
    pub residual: QHPoly,
    /// Whether x0 itself is invariant.
    pub vertical: bool,
}

impl LineSearch {
    pub fn any(&self) -> bool {
        self.all_lines || self.vertical || !self.slopes.is_empty() || !self.residual.is_constant()
    }
}

/// Substitute x1 = s x0, storing s in slot 1: the image of a term
/// x0^e0 x1^e1 x2^e2 is s^e1 x0^{e0+e1} x2^e2. Sound because the two
/// line weights are 1.
fn slope_subst(p: &QHPoly) -> QHPoly {
    QHPoly::from_terms(p.terms().map(|(e, c)| ([e[0] + e[1], e[1], e[2]], c.clone())))
}

pub fn find_invariant_line(f: &Foliation) -> Result<LineSearch> {
    if f.w.l[0] != 1 || f.w.l[1] != 1 {
        return Err(param(format!("the pencil x1 = s x0 needs weights (1, 1, k), got {}", f.w)));
    }
    // The line is invariant iff both coefficients of the wedge with
    // d(x1 - s x0) vanish after the substitution.
    let cond1 = &slope_subst(&f.omega.a[0]) + &slope_subst(&f.omega.a[1]).mul_mono(&GaussRat::one(), &[0, 1, 0]);
    let cond2 = slope_subst(&f.omega.a[2]);
    let vertical = f.is_invariant(&x(0));
    if cond1.is_zero() && cond2.is_zero() {
        return Ok(LineSearch { all_lines: true, slopes: vec![], residual: QHPoly::one(), vertical });
    }
    let mut buckets: BTreeMap<(u32, u32), QHPoly> = BTreeMap::new();
    for cond in [&cond1, &cond2] {
        for (e, c) in cond.terms() {
            let entry = buckets.entry((e[0], e[2])).or_insert_with(QHPoly::zero);
            *entry = &*entry + &QHPoly::mono(c.clone(), [0, e[1], 0]);
        }
    }
    let h = QHPoly::gcd_many(buckets.values());
    if h.is_constant() {
        return Ok(LineSearch { all_lines: false, slopes: vec![], residual: QHPoly::one(), vertical });
    }
    let gr = gauss_roots(&h, 1)?;
    let slopes: Vec<GaussRat> = gr.roots.into_iter().map(|(s, _)| s).collect();
    debug_assert!(slopes
        .iter()
        .all(|s| f.is_invariant(&(&x(1) - &x(0).scale(s)))));
    Ok(LineSearch { all_lines: false, slopes, residual: gr.residual, vertical })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor::milnor_global;

    fn brat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn fibrations_have_invariant_fibers() {
        for (wl, i, j) in [((1u32, 2u32, 3u32), 0usize, 1usize), ((1, 2, 3), 0, 2), ((1, 2, 3), 1, 2), ((2, 3, 5), 0, 1)] {
            let w = WeightVector::new(wl.0, wl.1, wl.2);
            let f = rational_fibration(w, i, j).unwrap();
            assert_eq!(f.d, (w.l[i] + w.l[j]) as i64);
            assert!(f.saturated);
            assert!(f.is_invariant(&x(i)));
            assert!(f.is_invariant(&x(j)));
            let k = 3 - i - j;
            assert!(!f.is_invariant(&x(k)));
            // generic fiber x_i^{l_j} - x_j^{l_i}
            let fiber = &x(i).pow(w.l[j]) - &x(j).pow(w.l[i]);
            assert!(f.is_invariant(&fiber));
        }
        assert!(rational_fibration(WeightVector::std(), 1, 1).is_err());
    }

    #[test]
    fn rational_3_and_4b() {
        let w = WeightVector::new(1, 2, 3);
        let f = rational_3(w, 3, 2).unwrap();
        assert_eq!(f.d, 7);
        assert!(f.saturated);
        assert!(f.is_invariant(&x(0)));
        let g = &(x(2) * x(0).pow(3)) + &x(1).pow(3);
        assert!(f.is_invariant(&g));
        assert!(!f.is_invariant(&x(1)));
        assert!(!f.is_invariant(&x(2)));
        // degree mismatch between the two exponent conditions
        assert!(matches!(rational_3(w, 2, 1), Err(FolError::Parameter { .. })));
        assert!(matches!(rational_3(w, 0, 1), Err(FolError::Parameter { .. })));

        let w45 = WeightVector::new(1, 2, 5);
        let f4 = rational_4b(w45).unwrap();
        assert_eq!(f4.d, 7);
        assert_eq!(f4, rational_3(w45, 1, 2).unwrap());
        assert!(rational_4b(WeightVector::new(2, 3, 5)).is_err());
        assert!(rational_4b(WeightVector::new(1, 2, 4)).is_err());
    }

    #[test]
    fn log_families() {
        let w = WeightVector::new(1, 2, 3);
        let f1 = log_1(w, &q(1), &q(-2), &q(1)).unwrap();
        assert_eq!(f1.d, 6);
        assert!(f1.saturated);
        for i in 0..3 {
            assert!(f1.is_invariant(&x(i)));
        }
        assert_eq!(milnor_global(&w, 6), brat(11, 6));

        let f2 = log_2(w, 1, 1).unwrap();
        assert_eq!(f2.d, 6);
        assert!(f2.saturated);
        assert!(f2.is_invariant(&x(0)));
        assert!(f2.is_invariant(&x(1)));
        assert!(!f2.is_invariant(&x(2)));

        let f3 = log_3(w).unwrap();
        assert_eq!(f3.d, 6);
        assert!(f3.saturated);
        assert!(f3.is_invariant(&x(0)));
        assert!(f3.is_invariant(&x(2)));
        assert!(!f3.is_invariant(&x(1)));
    }

    #[test]
    fn log_1_rejects_parameters_conjugate_to_log_2() {
        let w = WeightVector::new(1, 2, 3);
        // i = j = 1 is the only representable pair; a + c = 0 trips it
        let err = log_1(w, &q(1), &q(1), &q(-1)).unwrap_err();
        match err {
            FolError::Parameter { detail } => assert!(detail.contains("log-2"), "{detail}"),
            other => panic!("unexpected error {other}"),
        }
        assert!(log_1(w, &q(0), &q(3), &q(-2)).is_err());
        assert!(log_1(w, &q(1), &q(1), &q(1)).is_err());
    }

    #[test]
    fn special_families_singularities_and_invariant_curves() {
        for k in 2..=3u32 {
            let ki = k as i64;
            let fa = special_a(k).unwrap();
            assert_eq!(fa.d, ki + 2);
            assert!(fa.saturated);
            assert!(fa.is_invariant(&x(0)));
            assert!(!fa.is_invariant(&x(1)));
            assert!(!fa.is_invariant(&x(2)));
            let level = &(x(0) * x(2)) + &x(1).pow(k + 1);
            assert!(fa.is_invariant(&level));

            let fb = special_b(k).unwrap();
            assert!(fb.is_invariant(&x(0)));
            assert!(!fb.is_invariant(&x(1)));
            assert!(fb.is_invariant(&x(2)));

            let fc = special_c(k).unwrap();
            assert!(fc.is_invariant(&x(0)));
            assert!(fc.is_invariant(&x(1)));
            assert!(!fc.is_invariant(&x(2)));

            let fd = special_d(k, 1).unwrap();
            assert!(fd.is_invariant(&x(0)));
            assert!(fd.is_invariant(&x(1)));
            assert!(!fd.is_invariant(&x(2)));

            let fe = special_e(k, &q(ki), &q(ki), &q(-2)).unwrap();
            for i in 0..3 {
                assert!(fe.is_invariant(&x(i)));
            }
            // the milnor count of the family degree
            assert_eq!(milnor_global(&fa.w, ki + 2), brat(2 * ki + 1, ki));
        }
        assert!(special_d(3, 0).is_err());
        assert!(special_d(3, 3).is_err());
        assert!(special_e(2, &q(1), &q(1), &q(1)).is_err());
    }

    #[test]
    fn classify_special_recognizes_each_family() {
        let cases = [
            (special_a(2).unwrap(), SpecialCase::A, vec![2usize]),
            (special_b(2).unwrap(), SpecialCase::B, vec![1, 2]),
            (special_c(2).unwrap(), SpecialCase::C, vec![1, 2]),
            (special_d(3, 1).unwrap(), SpecialCase::D, vec![0, 1, 2]),
            (special_e(2, &q(2), &q(2), &q(-2)).unwrap(), SpecialCase::E, vec![0, 1, 2]),
        ];
        for (f, expect, vertices) in cases {
            let ev = classify_special(&f).unwrap();
            assert_eq!(ev.case, expect, "{ev:?}");
            assert_eq!(ev.singular_vertices, vertices);
            assert!(ev.vertex_only);
        }
        // a perturbed log form with singular points off the vertices
        let w = WeightVector::new(1, 1, 2);
        let a0 = &(x(1) * x(2)) + &x(1).pow(3);
        let a1 = &(x(0) * x(2)) - &(x(0) * x(1).pow(2));
        let a2 = (x(0) * x(1)).scale(&q(-1));
        let f = Foliation::new(OneForm::new(w, [a0, a1, a2])).unwrap();
        assert_eq!(f.d, 4);
        assert!(f.saturated);
        let ev = classify_special(&f).unwrap();
        assert_eq!(ev.case, SpecialCase::Unclassified);
        assert!(!ev.vertex_only);
        // hypothesis violations
        assert!(classify_special(&delta(2).unwrap()).is_err());
        assert!(classify_special(&rational_fibration(WeightVector::new(1, 2, 3), 0, 1).unwrap()).is_err());
    }

    #[test]
    fn beta_matches_its_projective_pullback() {
        let w = WeightVector::new(1, 2, 3);
        let f = beta(w, &q(1), &q(1), &q(-1)).unwrap();
        assert_eq!(f.d, 12);
        assert!(f.saturated);
        let g = &(&mono([6, 0, 0]) + &mono([0, 3, 0])) + &mono([0, 0, 2]);
        for c in [x(0), x(1), x(2), g] {
            assert!(f.is_invariant(&c));
        }
        assert!(!f.is_invariant(&(&mono([6, 0, 0]) + &mono([0, 3, 0]))));

        let (pulled, scale) = omega_p2().omega.pullback_powers(&[6, 3, 2], w).unwrap();
        assert_eq!(scale, 6);
        for i in 0..3 {
            assert_eq!(pulled.a[i], f.omega.a[i].mul_mono(&GaussRat::one(), &[5, 2, 1]));
        }

        assert!(beta(w, &q(0), &q(1), &q(1)).is_err());
        // sigma = 0 leaves the polar curve as a common factor
        assert!(beta(w, &q(1), &q(1), &q(-2)).is_err());
    }

    #[test]
    fn delta_and_eta_from_the_catalog() {
        let f = delta(2).unwrap();
        assert_eq!(f.d, 5);
        assert!(f.saturated);
        assert!(delta(1).is_err());

        let e = eta(WeightVector::new(1, 1, 2), 2, 2, &GaussRat::i()).unwrap();
        assert_eq!(e.d, 6);
        assert!(e.saturated);
        // degree bookkeeping of the minimal extension: the larger of
        // j0 l0 and j1 l1, plus the cross weight product, plus l2
        let e2 = eta(WeightVector::new(1, 2, 3), 1, 2, &GaussRat::i()).unwrap();
        assert_eq!(e2.d, 2 * 2 + 1 * 3 + 3);
        assert!(e2.saturated);

        assert!(eta(WeightVector::new(1, 2, 3), 1, 1, &GaussRat::i()).is_err());
        assert!(eta(WeightVector::new(1, 2, 3), 0, 1, &GaussRat::i()).is_err());
        assert!(eta(WeightVector::new(1, 1, 2), 2, 2, &q(3)).is_err());
    }

    #[test]
    fn presets_build_with_stated_degrees() {
        let expected: &[(&str, i64)] = &[
            ("rational-1", 3),
            ("rational-2", 4),
            ("rational-3", 7),
            ("rational-4a", 5),
            ("rational-4b", 7),
            ("log-1", 6),
            ("log-2", 6),
            ("log-3", 6),
            ("special-a", 4),
            ("special-b", 4),
            ("special-c", 4),
            ("special-d", 5),
            ("special-e", 4),
            ("beta", 12),
            ("omega-p2", 4),
            ("delta", 5),
            ("eta", 6),
        ];
        let built: Vec<(&str, i64)> = presets()
            .iter()
            .map(|nf| {
                let f = nf.build().unwrap();
                assert!(f.saturated, "{} not saturated", nf.tag());
                (nf.tag(), f.d)
            })
            .collect();
        assert_eq!(built, expected);
    }

    #[test]
    fn frobenius_matches_brute_force() {
        assert_eq!(frobenius(3, 5).unwrap(), 7);
        assert_eq!(frobenius(1, 9).unwrap(), -1);
        assert!(frobenius(4, 6).is_err());
        assert!(frobenius(0, 3).is_err());
        assert_eq!(represent(3, 5, 8).unwrap(), Some((1, 1)));
        assert_eq!(represent(3, 5, 7).unwrap(), None);

        let representable = |a: i64, b: i64, n: i64| (0..=n / a).any(|i| (n - a * i) % b == 0);
        for a in 1..=20i64 {
            for b in 1..=20i64 {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let g = frobenius(a, b).unwrap();
                for n in 0..=(a * b) {
                    let rep = represent(a, b, n).unwrap();
                    assert_eq!(rep.is_some(), representable(a, b, n));
                    if let Some((i, j)) = rep {
                        assert_eq!(a * i + b * j, n);
                    }
                    if n > g {
                        assert!(rep.is_some(), "({a},{b}): {n} past the Frobenius number");
                    }
                }
                assert!(g < 0 || !representable(a, b, g));
            }
        }
    }

    #[test]
    fn degree_bound_instances() {
        for k in 1..=5i64 {
            let b = jouanolou_bounds(&WeightVector::new(1, 1, k as u32));
            assert_eq!(b.general, 3 * k + 1);
            assert_eq!(b.group_invariant, 3 * k - 1);
            assert_eq!(b.special, if k >= 2 { Some(2 * k + 1) } else { None });
            assert_eq!(b.scale, 1);
        }
        let b = jouanolou_bounds(&WeightVector::new(2, 3, 5));
        assert_eq!(b.general, 46);
        assert_eq!(b.special, None);
        let r = jouanolou_bounds(&WeightVector::new(2, 2, 2));
        assert_eq!(r.scale, 2);
        assert_eq!(r.reduced, 4);

        assert!(!hirzebruch_bound(3, 1, 2));
        assert!(!hirzebruch_bound(8, 2, 2));
        assert!(hirzebruch_bound(9, 3, 2));
        assert!(!hirzebruch_bound(7, 3, 2));
    }

    #[test]
    fn weighted_bezout_instances() {
        assert_eq!(weighted_bezout(&WeightVector::new(1, 1, 3), 1, 3).unwrap(), brat(1, 1));
        assert_eq!(weighted_bezout(&WeightVector::std(), 1, 1).unwrap(), brat(1, 1));
        assert_eq!(weighted_bezout(&WeightVector::new(1, 2, 3), 6, 6).unwrap(), brat(6, 1));
        assert_eq!(weighted_bezout(&WeightVector::new(1, 1, 2), 1, 1).unwrap(), brat(1, 2));
        assert!(weighted_bezout(&WeightVector::std(), 0, 1).is_err());
    }

    #[test]
    fn independence_forms_rank_two_on_the_dense_orbits() {
        let w = WeightVector::new(1, 1, 2);
        let p = ProjPoint::new(w, [q(1), q(1), q(1)]).unwrap();
        let (f1, f2, r) = independence_forms(&w, 3, &p).unwrap();
        assert_eq!(r, 2);
        assert_eq!(f1.degree().unwrap(), 3);
        assert_eq!(f2.degree().unwrap(), 3);

        // the nonnegative fallback shape is required here: 7 - 1 = 6
        // has no strictly positive representation by (2, 3)
        let w = WeightVector::new(1, 2, 3);
        for coords in [[1, 1, 1], [0, 1, 1], [1, 0, 1], [1, 1, 0]] {
            let p = ProjPoint::new(w, [q(coords[0]), q(coords[1]), q(coords[2])]).unwrap();
            let (f1, f2, r) = independence_forms(&w, 7, &p).unwrap();
            assert_eq!(r, 2, "rank at {coords:?}");
            assert_eq!(f1.degree().unwrap(), 7);
            assert_eq!(f2.degree().unwrap(), 7);
            assert!(f1.contract_radial().is_zero());
            assert!(f2.contract_radial().is_zero());
        }

        let dense = ProjPoint::new(w, [q(1), q(1), q(1)]).unwrap();
        assert!(independence_forms(&w, 6, &dense).is_err());
        let vertex = ProjPoint::vertex(w, 2);
        assert!(independence_forms(&w, 7, &vertex).is_err());
    }

    #[test]
    fn line_search_on_known_families() {
        let fib = rational_fibration(WeightVector::new(1, 1, 2), 0, 1).unwrap();
        let s = find_invariant_line(&fib).unwrap();
        assert!(s.all_lines);
        assert!(s.vertical);

        let f = delta(2).unwrap();
        let s = find_invariant_line(&f).unwrap();
        assert!(!s.all_lines);
        assert!(s.slopes.is_empty());
        assert!(s.residual.is_constant());
        assert!(s.vertical);
        assert!(s.any());

        let fe = special_e(2, &q(2), &q(2), &q(-2)).unwrap();
        let s = find_invariant_line(&fe).unwrap();
        assert_eq!(s.slopes, vec![GaussRat::zero()]);
        assert!(s.vertical);

        assert!(find_invariant_line(&rational_fibration(WeightVector::new(1, 2, 3), 0, 1).unwrap()).is_err());
    }

    #[test]
    fn milnor_values_at_the_family_degrees() {
        let w = WeightVector::new(1, 2, 3);
        assert_eq!(milnor_global(&w, 3), brat(1, 3));
        assert_eq!(milnor_global(&w, 4), brat(1, 2));
        assert_eq!(milnor_global(&w, 5), brat(1, 1));
        assert_eq!(milnor_global(&w, 6), brat(11, 6));
    }
}
