//! Solvers for the Einstein adapted-metric equations on homogeneous
//! fibrations `G/L → G/K` with symmetric fibers, driven entirely by the
//! exact Casimir eigenvalue data in an [`EigenvalueReport`].
//!
//! * [`solve_binormal`] — binormal metrics `B|_p ⊕ X·B|_n` via the quadratic
//!   `(γ+2c_{l,p})X² − (1+2c_{k,n})X + (1−γ+2b) = 0` (for two symmetric fiber
//!   summands this requires `γ₁ = γ₂`; otherwise the compatibility condition
//!   forces `X = 1/√2`, which is irrational, hence nonexistence).
//! * [`solve_circle_bundle`] — one-dimensional fibers, where the equation is
//!   linear and `X = (2+m)/(m(1+2c_{k,n}))`.
//! * [`solve_type2_fiber_einstein`] — two fiber summands with `γ₂ = γ₁` or
//!   `γ₂ = 1−γ₁`: all closed quadratic branches, exact surds.
//! * [`solve_type2_general`] — two fiber summands over an irreducible base:
//!   resultant elimination to a quartic, certified real-root isolation,
//!   back-substitution, Ricci verification.
//! * [`ricci_verify`] — the master check every emitted solution passes.
//! * [`einstein_base_fiber_constraints`] — the ratio constraints forced on
//!   `μ_j` (base Einstein) and `λ_a` (fiber Einstein).

mod binormal;
mod constraints;
mod ricci;
mod type2;
mod value;

pub use binormal::{solve_binormal, solve_circle_bundle, BinormalOutcome};
pub use constraints::{einstein_base_fiber_constraints, Constraints, RatioConstraint};
pub use ricci::{ricci_verify, RicciReport};
pub use type2::{
    solve_type2_fiber_einstein, solve_type2_general, FiberEinsteinOutcome, GammaRelation,
    GeneralOutcome,
};
pub use value::{MetricParams, Value};

use exact_numerics::Rational;
use num_traits::Zero;
use thiserror::Error;

/// Floating comparison tolerance for non-exact solutions.
pub const TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("{key}: C_p is not scalar on the horizontal summands (fiber {fiber})")]
    NonScalar { key: String, fiber: usize },
    #[error("{key}: metric coefficients must be positive")]
    NonPositiveMetric { key: String },
    #[error("{key}: malformed input: {reason}")]
    Shape { key: String, reason: String },
    #[error("{key}: elimination degenerated to the zero polynomial")]
    DegenerateElimination { key: String },
    #[error(transparent)]
    Exact(#[from] exact_numerics::ExactError),
}

pub type Result<T> = std::result::Result<T, SolverError>;

/// Which closed-form (or elimination) branch produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `X₁ = … = X_s = X` from the binormal quadratic.
    Binormal,
    /// One-dimensional fiber, linear equation.
    CircleBundle,
    /// `γ₂ = γ₁`, non-binormal branch with `2γX₁X₂ = 1−γ`.
    EqualGamma,
    /// `γ₂ = 1−γ₁`, fiber-Einstein branch with `X₂ = γ₁X₁/(1−γ₁)`.
    FiberEinstein,
    /// `γ₂ = 1−γ₁`, complementary branch with `X₂ = 1/(2X₁)`.
    ComplementaryGamma,
    /// Quartic elimination of the full two-unknown system.
    General,
}

/// Discriminant formulas, each reported with its exact rational value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscriminantKind {
    /// `Δ = (1+2c_{k,n})² − 4(γ+2c_{l,p})(1−γ+2b)`.
    Binormal,
    /// `Δ′ = 1 − 2γ(1−γ+2b)` (symmetric fiber, `c_{k,n} = 1/2`).
    BinormalSymmetric,
    /// `D = (1−γ) − 2γ(2b₁+1−γ)(2b₂+1−γ)` for the equal-γ branch.
    EqualGamma,
    /// `D = 1 − 4b₁γ₁ − 4b₂(1−γ₁) − 2γ₁(1−γ₁)` for the fiber-Einstein branch.
    FiberEinstein,
    /// `D = 1 − 2(2b₂+γ₁)(2b₁+1−γ₁)` for the complementary branch.
    ComplementaryGamma,
}

/// Sign and provenance of a quadratic branch's discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantReport {
    pub value: Rational,
    pub kind: DiscriminantKind,
}

impl DiscriminantReport {
    pub fn sign(&self) -> i32 {
        if self.value.is_zero() {
            0
        } else if self.value > Rational::zero() {
            1
        } else {
            -1
        }
    }

    /// Real solutions this branch contributes: positive → 2, zero → 1,
    /// negative → 0.
    pub fn real_solutions(&self) -> usize {
        match self.sign() {
            1 => 2,
            0 => 1,
            _ => 0,
        }
    }
}

/// Verification status flags of one solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolutionFlags {
    /// All `X_a` equal.
    pub binormal: bool,
    /// The restriction to the fiber is itself Einstein (`γ₁X₁ = γ₂X₂` for
    /// two symmetric fiber summands; automatic for irreducible fibers).
    pub fiber_einstein: bool,
    /// The projected base metric is Einstein (automatic for irreducible
    /// symmetric bases; equal horizontal eigenvalues otherwise).
    pub base_einstein: bool,
    /// `X_a = 1` for all `a` — the metric induced by `B` itself.
    pub standard: bool,
}

/// One Einstein adapted metric, in the normalized presentation `μ = 1`,
/// `λ_a = 1/X_a` (equivalently `X_a = μ/λ_a`).
#[derive(Debug, Clone)]
pub struct EinsteinSolution {
    /// Fibration identifier (catalog key).
    pub key: String,
    /// `X_a = μ/λ_a` per fiber summand.
    pub x: Vec<Value>,
    /// The normalized metric coefficients.
    pub metric: MetricParams,
    pub flags: SolutionFlags,
    /// The common Ricci quotient `Ric/g`.
    pub einstein_ratio: Value,
    /// Discriminant of the producing quadratic branch, when there is one.
    pub discriminant: Option<DiscriminantReport>,
    pub branch: Branch,
}

impl EinsteinSolution {
    /// Builds a solution from its `X` values, verifying it along the way.
    /// Returns `None` when any component is non-positive, `Err` when the
    /// candidate fails the Ricci check (an internal inconsistency).
    pub(crate) fn checked(
        report: &casimir_engine::EigenvalueReport,
        x: Vec<Value>,
        branch: Branch,
        discriminant: Option<DiscriminantReport>,
    ) -> Result<Option<Self>> {
        if x.iter().any(|v| !v.is_positive()) {
            return Ok(None);
        }
        let metric = MetricParams::from_x(&x);
        let check = ricci_verify(report, &metric)?;
        if !check.is_einstein {
            return Err(SolverError::Shape {
                key: report.key.clone(),
                reason: format!(
                    "candidate {:?} from branch {branch:?} fails the Ricci check",
                    x.iter().map(Value::to_f64).collect::<Vec<_>>()
                ),
            });
        }
        let binormal = x.windows(2).all(|w| w[0].approx_eq(&w[1], TOL));
        let fiber_einstein = if report.s() < 2 {
            true
        } else {
            let g1x1 = weighted(&x[0], &report.gamma[0]);
            let g2x2 = weighted(&x[1], &report.gamma[1]);
            g1x1.approx_eq(&g2x2, TOL)
        };
        // All base summands share μ; the projected base metric is Einstein
        // exactly when the horizontal Ricci quotients of the *base* standard
        // metric agree, i.e. when the totals Σ_a b_a^j coincide across j.
        let base_einstein = base_is_einstein(report);
        let one = Rational::from_integer(1.into());
        let standard = x.iter().all(|v| v.as_rational() == Some(&one));
        let einstein_ratio = check.einstein_ratio();
        Ok(Some(EinsteinSolution {
            key: report.key.clone(),
            x,
            metric,
            flags: SolutionFlags {
                binormal,
                fiber_einstein,
                base_einstein,
                standard,
            },
            einstein_ratio,
            discriminant,
            branch,
        }))
    }
}

fn weighted(x: &Value, g: &Rational) -> Value {
    match x {
        Value::Exact(s) => Value::Exact(s.scale(g)),
        other => Value::Approx(other.to_f64() * num_traits::ToPrimitive::to_f64(g).unwrap()),
    }
}

/// Whether the base metric `μB|_n` projected from a binormal horizontal part
/// is Einstein: always for an irreducible base, and for several summands
/// exactly when the `r_j − b^j/2`-quotients coincide, which with `c_{k,j}`
/// constant reduces to equal totals `b^j = Σ_a b_a^j`.
fn base_is_einstein(report: &casimir_engine::EigenvalueReport) -> bool {
    if report.n_count() <= 1 {
        return true;
    }
    let totals: Vec<Option<Rational>> = (0..report.n_count())
        .map(|j| {
            let mut acc = Rational::zero();
            for a in 0..report.s() {
                acc += report.b[a][j].clone()?;
            }
            Some(acc)
        })
        .collect();
    let same_ck = report.c_k.windows(2).all(|w| w[0] == w[1]);
    same_ck && totals.windows(2).all(|w| w[0] == w[1] && w[0].is_some())
}
