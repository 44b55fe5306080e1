//! `bisym`: command-line surface over the bisymmetric-triple catalog, the
//! Casimir/Einstein solvers, and the Kowalski diagonal fibrations.
//!
//! Subcommands: `list` (enumerate the catalog), `table` (regenerate a
//! result table side-by-side with the tabulated expectations), `solve`
//! (full solution set for one instance), `verify` (recompute every
//! eigenvalue and report discrepancies, optionally arbitrated by the
//! numeric oracle).
//!
//! Exit codes: 0 clean, 1 unexplained mismatch, 2 usage error, 3
//! unsupported request.

pub mod allowlist;
pub mod commands;
pub mod output;

pub use allowlist::{AllowEntry, Allowlist, Authority};
pub use output::{Format, OutputDocument};

/// Command failures that map to dedicated exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad selector, label, or parameters → exit 2.
    #[error("{0}")]
    Usage(String),
    /// Valid request outside the supported envelope → exit 3.
    #[error("{0}")]
    Unsupported(String),
}

/// Rendered result of a command plus the cleanliness verdict that drives
/// the exit code (exit 1 when `clean` is false).
#[derive(Debug)]
pub struct CommandOutput {
    pub docs: Vec<OutputDocument>,
    pub clean: bool,
}

impl CommandOutput {
    pub fn clean(docs: Vec<OutputDocument>) -> Self {
        Self { docs, clean: true }
    }
}
