//! Command-line front end for the spin-star model: trajectory sweeps with any
//! of the three engines, the reference figure data, and the validation suite.

pub mod csv;
mod error;
pub mod figure;
pub mod svg;
pub mod sweep;
pub mod validate;

pub use error::{CliError, Result};

/// Process exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Some validation check failed.
pub const EXIT_VALIDATION: i32 = 1;
/// Bad arguments or an exceeded engine cap.
pub const EXIT_USAGE: i32 = 2;
