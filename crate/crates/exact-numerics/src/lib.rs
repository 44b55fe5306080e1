//! Exact arithmetic substrate for the adapted-metric computations.
//!
//! Everything downstream (root systems, Casimir eigenvalues, Einstein
//! equations) is exact-first: rationals are arbitrary-precision and kept in
//! lowest terms, square roots are represented symbolically as quadratic surds
//! `p + q√d` with a square-free radicand, and polynomial root finding is done
//! by exact Sturm-sequence isolation with bisection refinement.  Floating
//! values only ever appear as advisory approximations attached to certified
//! enclosures.
//!
//! ```
//! use exact_numerics::{rat, sqrt_exact, QuadSurd};
//!
//! // √(49/81) collapses to the rational 7/9 ...
//! assert_eq!(sqrt_exact(&rat(49, 81)).unwrap(), QuadSurd::from_rational(rat(7, 9)));
//! // ... while √(11/18) stays irrational: (1/6)√22.
//! let s = sqrt_exact(&rat(11, 18)).unwrap();
//! assert_eq!(s, QuadSurd::new(rat(0, 1), rat(1, 6), 22u32.into()));
//! ```

mod poly;
mod roots;
mod surd;

use num_bigint::BigInt;
use thiserror::Error;

pub use poly::RatPolynomial;
pub use roots::{count_real_roots, isolate_real_roots, Domain, IsolatedRoot, SturmChain};
pub use surd::{sqrt_exact, QuadSurd};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (maintained by `num_rational`).
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for small rationals.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactError {
    /// `sqrt_exact` of a negative rational; callers use this to detect a
    /// negative discriminant.
    #[error("square root of negative rational {0}")]
    NegativeRadicand(Rational),
    /// Arithmetic combining two surds over different radicands.  The closed
    /// forms this crate serves never mix radicands, so this always indicates
    /// a logic error upstream.
    #[error("mixed surd radicands {0} and {1}")]
    MixedRadicands(BigInt, BigInt),
    /// Division by an exactly-zero value.
    #[error("exact division by zero")]
    DivisionByZero,
    /// Root isolation requested on the zero polynomial.
    #[error("cannot isolate roots of the zero polynomial")]
    ZeroPolynomial,
}

pub type Result<T> = std::result::Result<T, ExactError>;
