//! Root systems of compact simple Lie algebras, in the ambient coordinates
//! used throughout the eigenvalue catalog.
//!
//! Conventions:
//! * The A family is kept in its ambient space: `su_n` lives in ℝⁿ with
//!   roots `e_i − e_j` (no projection onto the trace-zero hyperplane).
//! * The E series lives in ℝ⁸ (E6 and E7 as explicit subsets of the E8
//!   ambient space), F4 in ℝ⁴, G2 in ℝ³.
//! * Root coordinates are integers or half-integers; internally every
//!   coordinate is stored doubled, as an exact `i64`.
//! * Squared lengths are Killing-normalized: the highest root θ satisfies
//!   `|θ|² = 1/h*` with `h*` the dual Coxeter number.
//! * Positivity is lexicographic on ambient coordinates.  All catalog
//!   quantities are independent of this choice (checked by property tests).

mod build;
mod family;
mod root;
mod string;
mod subset;
mod system;

pub use family::{Family, LieFamily};
pub use root::Root;
pub use string::d_coefficient;
pub use subset::RootSubset;
pub use system::RootSystem;

use thiserror::Error;

/// Errors from root-system construction and queries.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("rank {rank} out of bounds for family {family:?}")]
    RankOutOfBounds { family: Family, rank: usize },
    #[error("vector {0} is not a root of this system")]
    NotARoot(Root),
    #[error("root string along the root's own line: phi = ±alpha = {0}")]
    StringAlongSelf(Root),
    #[error("subset {name} is not closed under negation (missing {missing})")]
    NotNegationClosed { name: String, missing: Root },
}

pub type Result<T> = std::result::Result<T, RootSystemError>;
