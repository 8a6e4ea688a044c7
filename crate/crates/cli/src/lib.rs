//! Front end for `catalan-core`: exact values, integral evaluations,
//! verification sweeps and identity checks.
//!
//! Exit codes: 0 success, 2 domain or usage error, 3 enumeration limit,
//! 4 quadrature non-convergence, 5 a check failed.

pub mod args;
pub mod commands;
pub mod report;

pub use args::Cli;
pub use commands::{run, sweep, CliError};
pub use report::{Metadata, ReportDocument, VerificationRow};
