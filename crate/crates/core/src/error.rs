//! Crate-wide error type. Every failure mode is explicit; no routine
//! silently degrades to an approximation.

use crate::roots::RootError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FolError {
    #[error("weight vectors differ: {0} vs {1}")]
    WeightMismatch(String, String),

    #[error("component {which} is not quasi-homogeneous for the given weights")]
    NotQuasiHomogeneous { which: String },

    #[error("components have incompatible degrees: {detail}")]
    DegreeIncompatible { detail: String },

    #[error("radial contraction is nonzero: {0}")]
    RadialContractionNonzero(String),

    #[error("one-form is identically zero")]
    ZeroForm,

    #[error("chart data violates the group congruence: {detail}")]
    ChartCongruence { detail: String },

    #[error("polynomial division failed: {detail}")]
    DivisionFailed { detail: String },

    #[error("family parameter violates a side condition: {detail}")]
    Parameter { detail: String },

    #[error(transparent)]
    Root(#[from] RootError),

    #[error("no shear in the fixed trial sequence separates the fibers")]
    ShearExhausted,

    #[error("local contributions cannot be attributed: {detail}")]
    ResidualAttribution { detail: String },

    #[error("singular locus is not zero-dimensional: a curve of singularities contains {witness}")]
    NotZeroDimensional { witness: String },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, FolError>;
