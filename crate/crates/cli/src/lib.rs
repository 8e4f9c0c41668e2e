//! Command-line surface for the `gt` toolkit.

pub mod args;
pub mod commands;
mod error;
pub mod report;
pub mod spec;

pub use args::Cli;
pub use commands::run;
pub use error::{CliError, CliResult};
pub use report::{Report, Verdict};
pub use spec::{parse_group_spec, GroupSpec, Provenance};
