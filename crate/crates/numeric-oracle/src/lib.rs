//! Independent floating-point arbitration for the exact Casimir engine.
//!
//! A compact real form of each (small-rank) root system's algebra is built
//! from exact Chevalley structure constants, the Killing form is computed
//! from ad-traces and normalized to `−I`, and Casimir operators of
//! negation-closed root subsets become negated sums of squared ad-matrices.
//! Restricting such an operator to the span of a horizontal subset and
//! clustering its eigenvalues gives an oracle value that never touches the
//! string-combinatorics route.
//!
//! Construction is self-validating: the Jacobi identity and the Killing
//! normalization must hold to 10⁻⁹ or the build fails.
//!
//! ```
//! use numeric_oracle::CompactForm;
//! use root_systems::{LieFamily, Root, RootSubset, RootSystem};
//!
//! let sys = RootSystem::build(LieFamily::g2());
//! let form = CompactForm::build(&sys).unwrap();
//! assert!(form.jacobi_residual() <= 1e-9);
//!
//! // The long-root su₂ fiber acts with the scalar 1/8 on the horizontal
//! // space (the eight root planes outside k = su₂ ⊕ su₂).
//! let fiber = RootSubset::symmetrized("R_p", [Root::from_ints(&[2, -1, -1])]);
//! let other = RootSubset::symmetrized("R_k2", [Root::e_minus_e(3, 2, 3)]);
//! let horiz = RootSubset::new(
//!     "R_n",
//!     sys.roots()
//!         .iter()
//!         .filter(|r| !fiber.contains(r) && !other.contains(r))
//!         .cloned(),
//! )
//! .unwrap();
//! let res = form.casimir_check(&fiber, false, &horiz).unwrap();
//! assert_eq!(res.clusters.len(), 1);
//! assert!((res.clusters[0].0 - 0.125).abs() < 1e-9);
//! ```

mod chevalley;
mod compact;

pub use chevalley::Chevalley;
pub use compact::{CompactForm, NumericCasimirResult};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("compact-form construction failed: {0}")]
    Construction(String),
    #[error("Jacobi identity residual {0:.3e} exceeds 1e-9")]
    JacobiResidual(f64),
    #[error("Killing normalization residual {0:.3e} exceeds 1e-9")]
    KillingResidual(f64),
    #[error("Casimir restriction leaks outside the target span by {0:.3e}")]
    RestrictionLeakage(f64),
}

pub type Result<T> = std::result::Result<T, OracleError>;
