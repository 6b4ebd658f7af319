//! Verification harness: exact replay of reductions, numeric cross-checks
//! against the quadrature oracle, and seeded random suites.
//!
//! Every check yields a [`VerificationReport`]; failures are reports, not
//! errors. Errors are reserved for inputs the check cannot be run on.

mod checks;
mod random;
mod suites;

use serde::Serialize;

pub use checks::{
    lauricella_identity_sides, verify_lauricella, verify_lauricella_definite,
    verify_lauricella_with, verify_orbit, verify_reduction_exact, verify_reduction_numeric,
    worked_example_column, worked_example_polynomial,
};
pub use suites::{
    canonical_suite, negative_controls, numeric_suite, property_suite, reduction_suite, run_suite,
    Suite, SuiteSummary,
};

/// Default tolerance of the numeric channel.
pub const NUMERIC_TOLERANCE: f64 = 1e-9;

/// Tolerance of the Lauricella identity check.
pub const LAURICELLA_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

/// Exact residuals are printed polynomials (`"0"` on success); numeric ones
/// are relative errors.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Residual {
    Exact(String),
    Numeric(f64),
}

/// Outcome of one verification case.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub case: String,
    pub mode: Mode,
    pub pass: bool,
    pub residual: Residual,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Negative control: `pass` means the corruption was detected.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub control: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerificationReport {
    pub(crate) fn exact(case: impl Into<String>, residual: String) -> Self {
        VerificationReport {
            case: case.into(),
            mode: Mode::Exact,
            pass: residual == "0",
            residual: Residual::Exact(residual),
            tolerance: None,
            seed: None,
            control: false,
            detail: None,
        }
    }

    pub(crate) fn numeric(case: impl Into<String>, residual: f64, tol: f64) -> Self {
        VerificationReport {
            case: case.into(),
            mode: Mode::Numeric,
            pass: residual <= tol,
            residual: Residual::Numeric(residual),
            tolerance: Some(tol),
            seed: None,
            control: false,
            detail: None,
        }
    }

    pub(crate) fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub(crate) fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Turns a check on corrupted input into a control that passes iff the
    /// check failed.
    pub(crate) fn into_control(mut self) -> Self {
        self.pass = !self.pass;
        self.control = true;
        self
    }

    /// One JSON object, no trailing newline.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub(crate) fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}
