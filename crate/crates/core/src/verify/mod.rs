//! Residual harness, independence checks, jet reconciliation and the
//! reduction-of-order oracle, with machine-readable reports.

mod checks;
mod grid;
pub mod linalg;
mod report;
mod suite;

pub use checks::{
    annihilation_check, independence_check, nontriviality_bound, reduction_of_order_oracle, residual_check,
    scaled_residual,
};
pub use grid::{Grid, GridError, Spacing};
pub use report::{BoundRecord, CheckRecord, OracleRecord, Status, Summary, SuiteReport, VerificationReport};
pub use suite::{run_subject, run_suite, sup_relative_diff, Subject, SuiteOptions, AI_ZERO};
