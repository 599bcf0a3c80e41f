//! Picard-lattice arithmetic on the Hirzebruch surface F_k and the
//! index formulas for foliations of bidegree (a, b).
//!
//! Pic(F_k) = Z F + Z E with the fiber class F and the negative
//! section E: E.E = -k, F.F = 0, F.E = 1. A foliation on F_k enters
//! either directly through the bidegree (a, b) of its normal bundle
//! aF + bE, or as the pullback of a foliation on P(1, 1, k) under the
//! minimal resolution, in which case the bidegree is determined by the
//! degree d and the behaviour at the k-fold vertex.

use serde::Serialize;

use crate::error::{FolError, Result};
use crate::foliation::Foliation;

/// A divisor class m F + n E on F_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorClass {
    pub k: i64,
    /// Coefficient of the fiber class F.
    pub m: i64,
    /// Coefficient of the section class E.
    pub n: i64,
}

fn param(detail: String) -> FolError {
    FolError::Parameter { detail }
}

fn fit(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| param("lattice value overflows i64".to_string()))
}

impl DivisorClass {
    pub fn new(k: i64, m: i64, n: i64) -> Result<Self> {
        if k < 1 {
            return Err(param(format!("surface index k = {k} must be at least 1")));
        }
        Ok(DivisorClass { k, m, n })
    }

    /// The fiber class F.
    pub fn fiber(k: i64) -> Result<Self> {
        Self::new(k, 1, 0)
    }

    /// The section class E with E.E = -k.
    pub fn section(k: i64) -> Result<Self> {
        Self::new(k, 0, 1)
    }

    pub fn self_intersection(&self) -> Result<i64> {
        intersect(self, self)
    }
}

/// Intersection number on Pic(F_k): (m1 F + n1 E).(m2 F + n2 E) =
/// m1 n2 + m2 n1 - k n1 n2.
pub fn intersect(c1: &DivisorClass, c2: &DivisorClass) -> Result<i64> {
    if c1.k != c2.k {
        return Err(param(format!(
            "intersection needs one lattice, got k = {} and k = {}",
            c1.k, c2.k
        )));
    }
    let (m1, n1) = (c1.m as i128, c1.n as i128);
    let (m2, n2) = (c2.m as i128, c2.n as i128);
    fit(m1 * n2 + m2 * n1 - c1.k as i128 * n1 * n2)
}

/// Tangency index of a foliation with normal class N along a reduced
/// irreducible curve of class C and Euler characteristic chi:
/// Tang = N.C - chi. A negative value is incompatible with C being
/// non-invariant, so it forces invariance.
pub fn tangency_fiber(n: &DivisorClass, c: &DivisorClass, chi: i64) -> Result<i64> {
    Ok(intersect(n, c)? - chi)
}

/// The vanishing-theorem count Z along an invariant curve C with
/// self-intersection c_self: N.C = C^2 + Z, so Z = N.C - c_self.
pub fn vanishing_relation(n: &DivisorClass, c: &DivisorClass, c_self: i64) -> Result<i64> {
    Ok(intersect(n, c)? - c_self)
}

/// N.C > 0. For N = aF + bE and an effective C = mF + nE this is
/// n(a - bk) + bm > 0, which holds whenever b >= 3, a >= bk + 2,
/// m > 0 and n >= 0; an invariant curve disjoint from the singular set
/// would need N.C = C^2 + Z = 0, so positivity puts a singular point
/// on every invariant curve in that range.
pub fn positive_pairing(n: &DivisorClass, c: &DivisorClass) -> Result<bool> {
    Ok(intersect(n, c)? > 0)
}

/// Bidegree of the pullback to F_k of a foliation of degree d on
/// P(1, 1, k) with algebraic multiplicity r at the k-fold vertex:
/// N = d F + ((d - e)/k) E where e = r - k when the exceptional curve
/// is invariant and e = r otherwise. Fails when k does not divide
/// d - e (no such foliation exists on the surface).
pub fn pullback_bidegree(d: i64, r: i64, e_invariant: bool, k: i64) -> Result<DivisorClass> {
    if k < 1 {
        return Err(param(format!("surface index k = {k} must be at least 1")));
    }
    let e = if e_invariant { r - k } else { r };
    if (d - e) % k != 0 {
        return Err(FolError::DegreeIncompatible {
            detail: format!("d - e = {} is not divisible by k = {k}", d - e),
        });
    }
    DivisorClass::new(k, d, (d - e) / k)
}

/// Transversality of the pulled-back foliation with the ruling: holds
/// exactly when e = d - 2k, equivalently when the section coefficient
/// of the normal class, N.F, equals 2.
pub fn riccati_condition(d: i64, e: i64, k: i64) -> bool {
    e == d - 2 * k
}

/// The branch of the low-bidegree analysis that forces an invariant
/// curve on every foliation of bidegree (a, b), when one applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum ForcedInvariantCurve {
    /// a < bk + 2: a non-invariant E would have tangency
    /// a - bk - 2 >= 0, so E is invariant. Carries the negative value.
    Section { tangency: i64 },
    /// b = 0 (and a >= 2): the foliation is the rational fibration and
    /// every fiber is invariant.
    Fibration,
    /// 0 < b <= 2 with a >= bk + 2: the index sum N^2 = b(2a - bk) is
    /// positive, so a singular point exists, and the fiber through it
    /// has tangency b - 2 <= 0, hence is invariant.
    FiberThroughSingularity { index_sum: i64, tangency: i64 },
}

/// Decides whether every foliation of bidegree (a, b) on F_k is forced
/// to carry an invariant curve, and by which mechanism. Returns None
/// exactly when b >= 3 and a >= bk + 2, the range where a generic
/// foliation has no invariant curve at all.
pub fn hircurve_predicate(a: i64, b: i64, k: i64) -> Result<Option<ForcedInvariantCurve>> {
    if k < 1 {
        return Err(param(format!("surface index k = {k} must be at least 1")));
    }
    if b < 0 {
        return Err(param(format!("bidegree coefficient b = {b} must be nonnegative")));
    }
    let bk = b as i128 * k as i128;
    let tang_e = a as i128 - bk - 2;
    if tang_e < 0 {
        return Ok(Some(ForcedInvariantCurve::Section { tangency: fit(tang_e)? }));
    }
    if b == 0 {
        return Ok(Some(ForcedInvariantCurve::Fibration));
    }
    if b <= 2 {
        let index_sum = fit(b as i128 * (2 * a as i128 - bk))?;
        return Ok(Some(ForcedInvariantCurve::FiberThroughSingularity {
            index_sum,
            tangency: b - 2,
        }));
    }
    Ok(None)
}

/// Vertex data of a pulled-back foliation: degree, algebraic
/// multiplicity at the k-fold vertex, and the saturation exponent
/// along the exceptional curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PullbackOrigin {
    pub d: i64,
    pub r: i64,
    pub e: i64,
}

/// A foliation on F_k known through its normal class, optionally
/// together with the P(1, 1, k) foliation it pulls back from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HirzebruchFoliation {
    pub k: i64,
    pub normal: DivisorClass,
    pub origin: Option<PullbackOrigin>,
}

impl HirzebruchFoliation {
    pub fn bidegree(k: i64, a: i64, b: i64) -> Result<Self> {
        Ok(HirzebruchFoliation { k, normal: DivisorClass::new(k, a, b)?, origin: None })
    }

    pub fn pullback(d: i64, r: i64, e_invariant: bool, k: i64) -> Result<Self> {
        let normal = pullback_bidegree(d, r, e_invariant, k)?;
        let e = if e_invariant { r - k } else { r };
        Ok(HirzebruchFoliation { k, normal, origin: Some(PullbackOrigin { d, r, e }) })
    }

    /// Lattice data of the pullback of a foliation on P(1, 1, k),
    /// reading the multiplicity and the exceptional invariance off the
    /// chart at the k-fold vertex.
    pub fn from_foliation(f: &Foliation) -> Result<Self> {
        let rep = f.riccati()?;
        let hf = Self::pullback(rep.d, rep.r, rep.exceptional_invariant, rep.k)?;
        debug_assert_eq!(hf.is_riccati(), rep.riccati);
        Ok(hf)
    }

    pub fn a(&self) -> i64 {
        self.normal.m
    }

    pub fn b(&self) -> i64 {
        self.normal.n
    }

    /// N.F = 2, the transversality criterion with the ruling.
    pub fn is_riccati(&self) -> bool {
        self.normal.n == 2
    }

    pub fn forced_curve(&self) -> Result<Option<ForcedInvariantCurve>> {
        hircurve_predicate(self.a(), self.b(), self.k)
    }
}
