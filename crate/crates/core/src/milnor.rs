//! Milnor numbers: the closed global formula and exact local
//! intersection multiplicities computed on chart covers.
//!
//! The local number at a cover zero is read off as the vanishing order
//! of an eliminating resultant after a shear from a fixed sequence.
//! A shear is accepted only when the restriction of the pair to the
//! shifted line has a monomial gcd (no other zeros share the line) and
//! at least one leading coefficient survives at the origin; those two
//! conditions make the vanishing order equal the intersection number,
//! so a returned value is always correct and exhaustion is an error.

use crate::error::{FolError, Result};
use crate::foliation::{ChartSolutions, Foliation, ProjPoint};
use crate::linalg::resultant;
use crate::poly::QHPoly;
use crate::scalar::GaussRat;
use crate::weights::WeightVector;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// (l0l1 + l0l2 + l1l2 + (d - |l|) d) / (l0 l1 l2): the total Milnor
/// mass of a saturated degree-d foliation.
pub fn milnor_global(w: &WeightVector, d: i64) -> BigRational {
    let [l0, l1, l2] = [w.l[0] as i64, w.l[1] as i64, w.l[2] as i64];
    let num = l0 * l1 + l0 * l2 + l1 * l2 + (d - (l0 + l1 + l2)) * d;
    BigRational::new(BigInt::from(num), BigInt::from(l0 * l1 * l2))
}

/// Shear parameters tried in order; chosen small and rational-first so
/// reports stay readable, with Gaussian entries for pairs that align
/// zeros along every rational direction.
const SHEARS: [(i64, i64); 16] = [
    (0, 0),
    (1, 0),
    (-1, 0),
    (2, 0),
    (-2, 0),
    (3, 0),
    (-3, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (1, -1),
    (4, 0),
    (-4, 0),
    (2, 1),
    (5, 0),
    (-5, 0),
];

/// Intersection multiplicity of the pair (a, b) at the common zero
/// (x0, y0), where a and b are coprime polynomials in the variable
/// slots vx, vy. Errors with ShearExhausted instead of ever returning
/// a wrong value.
pub fn local_multiplicity(
    a: &QHPoly,
    b: &QHPoly,
    vx: usize,
    vy: usize,
    x0: &GaussRat,
    y0: &GaussRat,
) -> Result<u32> {
    let tx = QHPoly::var(vx) + QHPoly::constant(x0.clone());
    let ty = QHPoly::var(vy) + QHPoly::constant(y0.clone());
    let at = a.subst(vx, &tx).subst(vy, &ty);
    let bt = b.subst(vx, &tx).subst(vy, &ty);
    let origin = [GaussRat::zero(), GaussRat::zero(), GaussRat::zero()];
    debug_assert!(at.eval(&origin).is_zero() && bt.eval(&origin).is_zero());
    for (re, im) in SHEARS {
        let t = GaussRat::from_parts(re, im);
        let line = QHPoly::var(vx) + QHPoly::var(vy).scale(&t);
        let ash = at.subst(vx, &line);
        let bsh = bt.subst(vx, &line);
        // restriction to the line x = 0; its gcd must cut out the
        // origin alone
        let fa = ash.set_var(vx, &GaussRat::zero());
        let fb = bsh.set_var(vx, &GaussRat::zero());
        let h = fa.gcd(&fb);
        if h.is_zero() || h.num_terms() != 1 {
            continue;
        }
        // at least one leading y-coefficient must survive at x = 0,
        // otherwise the resultant picks up a spurious order
        let lca = ash.coeffs_in(vy).pop().unwrap_or_else(QHPoly::zero);
        let lcb = bsh.coeffs_in(vy).pop().unwrap_or_else(QHPoly::zero);
        if lca.set_var(vx, &GaussRat::zero()).is_zero()
            && lcb.set_var(vx, &GaussRat::zero()).is_zero()
        {
            continue;
        }
        let r = resultant(&ash, &bsh, vy);
        if r.is_zero() {
            continue;
        }
        let ord = r
            .terms()
            .map(|(e, _)| e[vx])
            .min()
            .expect("nonzero polynomial has a term");
        return Ok(ord);
    }
    Err(FolError::ShearExhausted)
}

/// One deduplicated singular point with its cover multiplicity and the
/// value it contributes on the quotient surface.
#[derive(Clone, Debug)]
pub struct MilnorEntry {
    pub point: ProjPoint,
    /// Chart whose cover carried the computation.
    pub chart: usize,
    /// Intersection multiplicity upstairs.
    pub cover_multiplicity: u32,
    /// Downstairs value: divided by l_i at the vertex p_i, unchanged at
    /// free orbits.
    pub local: BigRational,
}

#[derive(Clone, Debug)]
pub struct MilnorReport {
    pub entries: Vec<MilnorEntry>,
    /// Per-chart counts of cover zeros outside Q(i); the regions
    /// overlap, so these are bookkeeping per chart, not a partition.
    pub residuals: [u32; 3],
    /// Sum of the entry contributions.
    pub total: BigRational,
    /// Value of the closed formula, for comparison.
    pub global: BigRational,
}

impl MilnorReport {
    /// True when every cover zero of every chart was enumerated; then
    /// total = global is the exactness check.
    pub fn complete(&self) -> bool {
        self.residuals.iter().all(|&r| r == 0)
    }
}

/// Assemble local Milnor data from per-chart solution lists. Points
/// seen in several charts are counted once, from the lowest chart
/// index. Pairwise coprime weights keep the cover action free away
/// from chart origins, so the quotient rule applies only at vertices.
pub fn milnor_report(f: &Foliation, charts: &[ChartSolutions; 3]) -> Result<MilnorReport> {
    if !f.w.is_pairwise_coprime() {
        return Err(FolError::Unsupported(
            "milnor assembly needs pairwise coprime weights".to_string(),
        ));
    }
    if !f.saturated {
        return Err(FolError::Unsupported(
            "milnor assembly needs a saturated foliation".to_string(),
        ));
    }
    let mut entries: Vec<MilnorEntry> = Vec::new();
    for i in 0..3 {
        debug_assert_eq!(charts[i].chart, i);
        let cf = f.chart(i);
        let (vx, vy) = cf.vars();
        for (x0, y0) in &charts[i].solutions {
            let p = ProjPoint::from_chart(f.w, i, x0, y0);
            if entries.iter().any(|e| e.point.same_point(&p)) {
                continue;
            }
            let m = local_multiplicity(&cf.a, &cf.b, vx, vy, x0, y0)?;
            let at_vertex = x0.is_zero() && y0.is_zero();
            let denom = if at_vertex { f.w.l[i] as i64 } else { 1 };
            let local = BigRational::new(BigInt::from(m), BigInt::from(denom));
            entries.push(MilnorEntry { point: p, chart: i, cover_multiplicity: m, local });
        }
    }
    let total: BigRational = entries
        .iter()
        .fold(BigRational::zero(), |acc, e| acc + e.local.clone());
    let residuals = [charts[0].residual, charts[1].residual, charts[2].residual];
    let global = milnor_global(&f.w, f.d);
    Ok(MilnorReport { entries, residuals, total, global })
}
