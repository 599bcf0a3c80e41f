//! Exact-arithmetic toolkit for holomorphic foliations on weighted
//! projective planes P(l0, l1, l2) and on Hirzebruch surfaces.
//!
//! Everything is computed over Q(i) with arbitrary-precision rationals;
//! there is no floating point and no numerical tolerance anywhere.

pub mod catalog;
pub mod certificates;
pub mod chart;
pub mod error;
pub mod foliation;
pub mod forms;
pub mod hirzebruch;
pub mod linalg;
pub mod milnor;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod weights;

pub use catalog::{
    beta, classify_special, delta, eta, find_invariant_line, frobenius, hirzebruch_bound,
    independence_forms, jouanolou_bounds, log_1, log_2, log_3, omega_p2, presets, rational_3,
    rational_4b, rational_fibration, represent, special_a, special_b, special_c, special_d,
    special_e, weighted_bezout, DegreeBounds, LineSearch, NormalForm, SpecialCase,
    SpecialEvidence,
};
pub use certificates::{
    certify_absence, curve_space_basis, extactic_matrix_at, extactic_polynomial,
    foliation_hash, AbsenceCertificate, CertifyOutcome, CurveSpaceBasis, RatPair,
};
pub use chart::{homogenize, BlowupChart, BlowupPullback, ChartForm, ExceptionalData};
pub use error::FolError;
pub use foliation::{
    chart_solutions, singular_points_chart, ChartSolutions, Foliation, ProjPoint, RiccatiReport,
};
pub use forms::{basis_fol, monomials_of_degree, section_dims, FolDims, OneForm, TwoForm, VectorField};
pub use hirzebruch::{
    hircurve_predicate, intersect, positive_pairing, pullback_bidegree, riccati_condition,
    tangency_fiber, vanishing_relation, DivisorClass, ForcedInvariantCurve, HirzebruchFoliation,
    PullbackOrigin,
};
pub use milnor::{local_multiplicity, milnor_global, milnor_report, MilnorEntry, MilnorReport};
pub use poly::QHPoly;
pub use roots::{gauss_roots, rational_roots, GaussRoots, RootError};
pub use scalar::GaussRat;
pub use weights::{reduce_weights, WeightReduction, WeightVector};
