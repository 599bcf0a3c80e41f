//! Affine charts of the weighted plane and the resolution of the
//! cyclic singularity at the third vertex of P(1, 1, k).
//!
//! Chart U_i is the quotient of C^2 by mu_{l_i} acting with exponents
//! (l_j, l_k) on the remaining coordinates. A one-form restricts to
//! a dx_j + b dx_k by setting x_i = 1; the grading survives as the
//! quasi-homogeneous slicing in which dx_j carries weight l_j.

use crate::error::{FolError, Result};
use crate::forms::OneForm;
use crate::poly::QHPoly;
use crate::scalar::GaussRat;
use crate::weights::WeightVector;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct ChartForm {
    pub w: WeightVector,
    /// Which coordinate was set to 1.
    pub chart: usize,
    /// Coefficient of dx_j (j < k the other two indices); uses slots j, k.
    pub a: QHPoly,
    /// Coefficient of dx_k.
    pub b: QHPoly,
}

/// One quasi-homogeneous layer of a chart form. The key already
/// includes the differential weights: a term x^p y^q dx_j sits in
/// degree p l_j + q l_k + l_j.
pub type ChartSlices = BTreeMap<i64, (QHPoly, QHPoly)>;

impl OneForm {
    /// Restriction to chart U_i (set x_i = 1).
    pub fn restrict_chart(&self, i: usize) -> ChartForm {
        assert!(i < 3);
        let (j, k) = WeightVector::others(i);
        let one = GaussRat::one();
        ChartForm {
            w: self.w,
            chart: i,
            a: self.a[j].set_var(i, &one),
            b: self.a[k].set_var(i, &one),
        }
    }
}

impl ChartForm {
    pub fn vars(&self) -> (usize, usize) {
        WeightVector::others(self.chart)
    }

    pub fn group_order(&self) -> u32 {
        self.w.l[self.chart]
    }

    pub fn cover_weights(&self) -> (i64, i64) {
        let (j, k) = self.vars();
        (self.w.l[j] as i64, self.w.l[k] as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn weight_array(&self) -> [i64; 3] {
        let mut wl = [0i64; 3];
        let (j, k) = self.vars();
        wl[j] = self.w.l[j] as i64;
        wl[k] = self.w.l[k] as i64;
        wl
    }

    /// Slices keyed by quasi-degree including the differential weight.
    pub fn slices(&self) -> ChartSlices {
        let wl = self.weight_array();
        let (j, k) = self.vars();
        let mut out: ChartSlices = BTreeMap::new();
        for (d, p) in self.a.slices(&wl) {
            out.entry(d + wl[j]).or_insert_with(|| (QHPoly::zero(), QHPoly::zero())).0 = p;
        }
        for (d, p) in self.b.slices(&wl) {
            out.entry(d + wl[k]).or_insert_with(|| (QHPoly::zero(), QHPoly::zero())).1 = p;
        }
        out
    }

    /// The algebraic multiplicity at the chart origin: the lowest
    /// occupied slice degree.
    pub fn min_degree(&self) -> Option<i64> {
        self.slices().keys().next().copied()
    }

    /// Every slice of the restriction of a degree-d form is congruent
    /// to d modulo the group order.
    pub fn check_congruence(&self, d: i64) -> Result<()> {
        let m = self.group_order() as i64;
        for s in self.slices().keys() {
            if (s - d).rem_euclid(m) != 0 {
                return Err(FolError::ChartCongruence {
                    detail: format!("slice {} vs degree {} mod {}", s, d, m),
                });
            }
        }
        Ok(())
    }

    /// Evaluate (a, b) at a point of the chart cover.
    pub fn eval(&self, x: &GaussRat, y: &GaussRat) -> (GaussRat, GaussRat) {
        let (j, k) = self.vars();
        let mut pt = [GaussRat::zero(), GaussRat::zero(), GaussRat::zero()];
        pt[j] = x.clone();
        pt[k] = y.clone();
        (self.a.eval(&pt), self.b.eval(&pt))
    }

    pub fn to_text(&self) -> String {
        let (j, k) = self.vars();
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        if !self.a.is_zero() {
            parts.push(format!("({})*dx{}", self.a.to_text(), j));
        }
        if !self.b.is_zero() {
            parts.push(format!("({})*dx{}", self.b.to_text(), k));
        }
        parts.join(" + ")
    }
}

impl fmt::Display for ChartForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for ChartForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U{} of P{}: {}", self.chart, self.w, self.to_text())
    }
}

/// Rebuild the minimal ambient one-form restricting to the given chart
/// data. Returns the form and its degree. The degree is the largest
/// occupied slice, bumped by the group order when the top slice pairs
/// nontrivially with the cover radial field (otherwise the x_i-division
/// producing the third coefficient would fail).
pub fn homogenize(cf: &ChartForm) -> Result<(OneForm, i64)> {
    if cf.is_zero() {
        return Err(FolError::ZeroForm);
    }
    let slices = cf.slices();
    let (j, k) = cf.vars();
    let li = cf.group_order() as i64;
    let keys: Vec<i64> = slices.keys().copied().collect();
    for s in &keys {
        if (s - keys[0]).rem_euclid(li) != 0 {
            return Err(FolError::ChartCongruence {
                detail: format!("slices {} and {} differ mod {}", keys[0], s, li),
            });
        }
    }
    let s_max = *keys.last().unwrap();
    let (a_top, b_top) = &slices[&s_max];
    let lj = GaussRat::from_int(cf.w.l[j] as i64);
    let lk = GaussRat::from_int(cf.w.l[k] as i64);
    let mut ej = [0u32; 3];
    ej[j] = 1;
    let mut ek = [0u32; 3];
    ek[k] = 1;
    let pairing = &a_top.mul_mono(&lj, &ej) + &b_top.mul_mono(&lk, &ek);
    let d = if pairing.is_zero() { s_max } else { s_max + li };
    let mut aa = QHPoly::zero();
    let mut bb = QHPoly::zero();
    for (s, (a_s, b_s)) in &slices {
        let m = ((d - s) / li) as u32;
        let mut ei = [0u32; 3];
        ei[cf.chart] = m;
        aa = &aa + &a_s.mul_mono(&GaussRat::one(), &ei);
        bb = &bb + &b_s.mul_mono(&GaussRat::one(), &ei);
    }
    let num = &aa.mul_mono(&lj, &ej) + &bb.mul_mono(&lk, &ek);
    let mut a = [QHPoly::zero(), QHPoly::zero(), QHPoly::zero()];
    a[j] = aa;
    a[k] = bb;
    if !num.is_zero() {
        let mut ei = [0u32; 3];
        ei[cf.chart] = 1;
        let divisor = QHPoly::mono(GaussRat::from_int(li), ei);
        a[cf.chart] = -num.div_exact(&divisor).ok_or_else(|| FolError::DivisionFailed {
            detail: "homogenization remainder is not divisible by the chart coordinate".to_string(),
        })?;
    }
    let form = OneForm::new(cf.w, a);
    debug_assert!(form.contract_radial().is_zero());
    Ok((form, d))
}

/// Data at the third vertex of P(1, 1, k): multiplicity, invariance of
/// the exceptional curve of the minimal resolution, and the vanishing
/// order e along it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalData {
    /// Lowest occupied slice degree of the chart form at the vertex.
    pub r: i64,
    /// Whether the exceptional curve is invariant: the lowest slice
    /// pairs nontrivially with the radial field.
    pub invariant: bool,
    /// Vanishing order along the exceptional curve: r - k when
    /// invariant, r otherwise. Negative values are allowed.
    pub e: i64,
}

/// One chart of the resolved surface. Slot 0 is the coordinate cutting
/// the exceptional curve, slot 1 the coordinate along it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlowupChart {
    pub side: usize,
    /// Coefficient of d(slot0) of the saturated pullback.
    pub p: QHPoly,
    /// Coefficient of d(slot1).
    pub q: QHPoly,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlowupPullback {
    /// Vanishing order along the exceptional curve, in integer units
    /// (the fractional x^(s/k) exponents all shift by multiples of k).
    pub e: i64,
    pub charts: [BlowupChart; 2],
}

fn require_vertex_chart(cf: &ChartForm) -> Result<u32> {
    let k = cf.w.l[2];
    if cf.w.l[0] != 1 || cf.w.l[1] != 1 || cf.chart != 2 {
        return Err(FolError::Unsupported(format!(
            "resolution data needs the third chart of P(1,1,k); got chart {} of P{}",
            cf.chart, cf.w
        )));
    }
    Ok(k)
}

impl ChartForm {
    /// Multiplicity, invariance and exceptional order at the vertex.
    pub fn exceptional_data(&self) -> Result<ExceptionalData> {
        let k = require_vertex_chart(self)? as i64;
        if self.is_zero() {
            return Err(FolError::ZeroForm);
        }
        let slices = self.slices();
        let (&r, (a_r, b_r)) = slices.iter().next().unwrap();
        let pairing = &(&QHPoly::var(0) * a_r) + &(&QHPoly::var(1) * b_r);
        let invariant = !pairing.is_zero();
        let e = if invariant { r - k } else { r };
        Ok(ExceptionalData { r, invariant, e })
    }

    /// Pull back to both charts of the resolution and saturate along
    /// the exceptional curve. The per-slice contributions are, with
    /// P_s(y) = a_s(1,y) + y b_s(1,y) and Q_s(x) = x a_s(x,1) + b_s(x,1):
    ///   side 0: x^(s/k - 1) [ (1/k) P_s(y) dx + x b_s(1,y) dy ]
    ///   side 1: y^(s/k - 1) [ (1/k) Q_s(x) dy + y a_s(x,1) dx ]
    /// so the vanishing order e is the least of s - k over slices with
    /// P_s (resp. Q_s) nonzero and s over slices with the transverse
    /// coefficient nonzero. Both sides always agree on e, and e matches
    /// the multiplicity rule of `exceptional_data`.
    pub fn blowup_pullback(&self) -> Result<BlowupPullback> {
        let k = require_vertex_chart(self)?;
        if self.is_zero() {
            return Err(FolError::ZeroForm);
        }
        let ki = k as i64;
        let inv_k = GaussRat::from_ratio(1, k as i64);
        let one = GaussRat::one();
        let slices = self.slices();
        let mut sides: Vec<BlowupChart> = Vec::new();
        let mut orders = [0i64; 2];
        for side in 0..2 {
            // per-slice data: (s, exceptional coefficient, transverse coefficient)
            let mut rows: Vec<(i64, QHPoly, QHPoly)> = Vec::new();
            for (&s, (a_s, b_s)) in &slices {
                let (exc, trans) = if side == 0 {
                    let a1 = a_s.set_var(0, &one);
                    let b1 = b_s.set_var(0, &one);
                    let p_s = &a1 + &(&QHPoly::var(1) * &b1);
                    (p_s, b1)
                } else {
                    let a1 = a_s.set_var(1, &one).subst(0, &QHPoly::var(1));
                    let b1 = b_s.set_var(1, &one).subst(0, &QHPoly::var(1));
                    let q_s = &(&QHPoly::var(1) * &a1) + &b1;
                    (q_s, a1)
                };
                rows.push((s, exc, trans));
            }
            let mut e: Option<i64> = None;
            for (s, exc, trans) in &rows {
                if !exc.is_zero() {
                    e = Some(e.map_or(s - ki, |v: i64| v.min(s - ki)));
                }
                if !trans.is_zero() {
                    e = Some(e.map_or(*s, |v: i64| v.min(*s)));
                }
            }
            let e = e.expect("nonzero form has an occupied slice");
            debug_assert_eq!((e - rows[0].0).rem_euclid(ki), 0);
            let mut p = QHPoly::zero();
            let mut q = QHPoly::zero();
            for (s, exc, trans) in &rows {
                if !exc.is_zero() {
                    let m = ((s - ki - e) / ki) as u32;
                    p = &p + &exc.scale(&inv_k).mul_mono(&one, &[m, 0, 0]);
                }
                if !trans.is_zero() {
                    let m = ((s - e) / ki) as u32;
                    q = &q + &trans.mul_mono(&one, &[m, 0, 0]);
                }
            }
            orders[side] = e;
            sides.push(BlowupChart { side, p, q });
        }
        assert_eq!(orders[0], orders[1], "both resolution charts see the same order along E");
        let charts: [BlowupChart; 2] = [sides.remove(0), sides.remove(0)];
        Ok(BlowupPullback { e: orders[0], charts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: usize) -> QHPoly {
        QHPoly::var(v)
    }

    fn pencil_form() -> OneForm {
        // x1 dx0 - x0 dx1 on P(1,1,2), the fibration of degree 2
        OneForm::new(WeightVector::new(1, 1, 2), [x(1), -x(0), QHPoly::zero()])
    }

    #[test]
    fn restrict_and_slices() {
        let cf = pencil_form().restrict_chart(2);
        assert_eq!(cf.a, x(1));
        assert_eq!(cf.b, -x(0));
        let s = cf.slices();
        assert_eq!(s.len(), 1);
        assert!(s.contains_key(&2));
        assert_eq!(cf.min_degree(), Some(2));
        cf.check_congruence(2).unwrap();
        assert!(cf.check_congruence(3).is_err());
    }

    #[test]
    fn restriction_slices_match_degree_residue() {
        // a degree-4 form on P(1,1,2) with x2-dependence
        let w = WeightVector::new(1, 1, 2);
        // A0 = x1 x2, A1 = x0 x2, A2 = -x0 x1 (radial pairing vanishes)
        let f = OneForm::new(w, [&x(1) * &x(2), &x(0) * &x(2), -(&x(0) * &x(1))]);
        assert_eq!(f.validate().unwrap(), 4);
        let cf = f.restrict_chart(2);
        // the single occupied slice 2 is congruent to 4 mod 2
        cf.check_congruence(4).unwrap();
        assert_eq!(cf.min_degree(), Some(2));
    }

    #[test]
    fn exceptional_data_fibration_vs_dicritical_free() {
        // fibration: lowest slice pairs to zero, E not invariant
        let cf = pencil_form().restrict_chart(2);
        let d = cf.exceptional_data().unwrap();
        assert_eq!(d.r, 2);
        assert!(!d.invariant);
        assert_eq!(d.e, 2);

        // a = x1, b = x0 pairs to 2 x0 x1: E invariant, e = r - k = 0
        let w = WeightVector::new(1, 1, 2);
        let f = OneForm::new(w, [&x(1) * &x(2), &x(0) * &x(2), -(&x(0) * &x(1))]);
        let cf = f.restrict_chart(2);
        let d = cf.exceptional_data().unwrap();
        assert_eq!(d.r, 2);
        assert!(d.invariant);
        assert_eq!(d.e, 0);
    }

    #[test]
    fn blowup_of_fibration() {
        let cf = pencil_form().restrict_chart(2);
        let bp = cf.blowup_pullback().unwrap();
        assert_eq!(bp.e, 2);
        // side 0: P_2 = y - y = 0, transverse b(1,y) = -1: just -dy
        assert!(bp.charts[0].p.is_zero());
        assert_eq!(bp.charts[0].q, QHPoly::from_int(-1));
        // side 1: Q_2 = 0, transverse a = 1: dx'
        assert!(bp.charts[1].p.is_zero());
        assert_eq!(bp.charts[1].q, QHPoly::one());
    }

    #[test]
    fn blowup_of_invariant_case() {
        let w = WeightVector::new(1, 1, 2);
        let f = OneForm::new(w, [&x(1) * &x(2), &x(0) * &x(2), -(&x(0) * &x(1))]);
        let cf = f.restrict_chart(2);
        let bp = cf.blowup_pullback().unwrap();
        assert_eq!(bp.e, 0);
        // side 0: P_2 = 2y gives p = (1/2)(2y) = y; transverse b(1,y) = 1
        // picks up x^(2-0)/2 = x, so q = x
        assert_eq!(bp.charts[0].p, x(1));
        assert_eq!(bp.charts[0].q, x(0));
        // side 1 is symmetric
        assert_eq!(bp.charts[1].p, x(1));
        assert_eq!(bp.charts[1].q, x(0));
        // the rule-based order agrees with the scan
        assert_eq!(bp.e, cf.exceptional_data().unwrap().e);
    }

    #[test]
    fn homogenize_round_trip() {
        let w = WeightVector::new(1, 1, 2);
        for form in [
            pencil_form(),
            OneForm::new(w, [&x(1) * &x(2), &x(0) * &x(2), -(&x(0) * &x(1))]),
        ] {
            let cf = form.restrict_chart(2);
            let (rebuilt, d) = homogenize(&cf).unwrap();
            assert_eq!(d, form.validate().unwrap());
            let back = rebuilt.restrict_chart(2);
            assert_eq!(back.a, cf.a);
            assert_eq!(back.b, cf.b);
            assert_eq!(rebuilt.a[0], form.a[0]);
            assert_eq!(rebuilt.a[1], form.a[1]);
            assert_eq!(rebuilt.a[2], form.a[2]);
        }
    }

    #[test]
    fn homogenize_detects_congruence_breaks() {
        let w = WeightVector::new(1, 1, 2);
        let cf = ChartForm {
            w,
            chart: 2,
            a: &x(1) + &QHPoly::one(), // slices 1 and 2 mixed
            b: QHPoly::zero(),
        };
        assert!(matches!(homogenize(&cf), Err(FolError::ChartCongruence { .. })));
    }

    #[test]
    fn homogenize_from_another_chart() {
        // chart 0 of the fibration: a = -1 (dx1 coefficient), b = 0
        let cf = pencil_form().restrict_chart(0);
        assert_eq!(cf.a, QHPoly::from_int(-1));
        assert!(cf.b.is_zero());
        let (rebuilt, d) = homogenize(&cf).unwrap();
        assert_eq!(d, 2);
        let expect = pencil_form();
        assert_eq!(rebuilt.a, expect.a);
        assert_eq!(rebuilt.w, expect.w);
    }
}
