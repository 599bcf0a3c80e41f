//! JSON report envelope shared by every subcommand.
//!
//! All rational numbers are serialized as decimal-free "p/q" strings
//! and Gaussian rationals as {"re", "im"} pairs of such strings, so
//! reports carry exact values only.

use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use wpfol_core::{FolError, GaussRat};

use crate::parse::ParseError;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<[u32; 3]>,
    pub inputs: Value,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorPayload>,
    /// Always true: there is no floating point anywhere.
    pub exact: bool,
    pub tool_version: &'static str,
}

#[derive(Serialize)]
pub struct ErrorPayload {
    pub code: String,
    pub message: String,
}

/// A failed subcommand: a machine-readable code plus a human message.
#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: "usage", message: message.into() }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError { code: "io", message: message.into() }
    }
}

impl From<FolError> for CliError {
    fn from(e: FolError) -> Self {
        let code = match &e {
            FolError::WeightMismatch(..) => "weight_mismatch",
            FolError::NotQuasiHomogeneous { .. } => "not_quasi_homogeneous",
            FolError::DegreeIncompatible { .. } => "degree_incompatible",
            FolError::RadialContractionNonzero(..) => "radial_contraction_nonzero",
            FolError::ZeroForm => "zero_form",
            FolError::ChartCongruence { .. } => "chart_congruence",
            FolError::DivisionFailed { .. } => "division_failed",
            FolError::Parameter { .. } => "parameter",
            FolError::Root(..) => "root",
            FolError::ShearExhausted => "shear_exhausted",
            FolError::ResidualAttribution { .. } => "residual_attribution",
            FolError::NotZeroDimensional { .. } => "not_zero_dimensional",
            FolError::Unsupported(..) => "unsupported",
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError { code: "parse", message: e.to_string() }
    }
}

pub fn rational_json(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

pub fn gauss_json(c: &GaussRat) -> Value {
    let (re, im) = c.to_string_pair();
    json!({ "re": re, "im": im })
}
