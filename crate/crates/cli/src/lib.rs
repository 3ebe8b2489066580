//! Verification suites over tkk-core with line-delimited JSON reports, plus
//! the pieces behind the `tkk` command-line tool.

pub mod identities;
pub mod report;
pub mod reproduce;
pub mod suites;

pub use report::{Params, Report, Status};
pub use reproduce::{reproduce, ReproError};
pub use suites::{run_suite, Suite, SuiteError};
