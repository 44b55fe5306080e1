//! Einstein equations for two symmetric fiber summands over an irreducible
//! symmetric base: closed quadratic branches for the special γ-relations,
//! and resultant elimination to a quartic in the general case.

use crate::binormal::{quadratic_roots, solve_binormal, BinormalOutcome};
use crate::value::Value;
use crate::{
    Branch, DiscriminantKind, DiscriminantReport, EinsteinSolution, Result, SolverError,
};
use casimir_engine::EigenvalueReport;
use exact_numerics::{
    isolate_real_roots, rat, Domain, QuadSurd, RatPolynomial, Rational,
};
use num_traits::Zero;

/// Relation between the two fiber Casimir eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaRelation {
    /// `γ₂ = γ₁` (includes `γ₁ = γ₂ = 1/2`, where the complementary
    /// relation holds simultaneously but contributes no new branch).
    Equal,
    /// `γ₂ = 1 − γ₁` with `γ₁ ≠ 1/2`.
    Complementary,
    /// Neither relation; only the general elimination applies.
    Other,
}

/// All solutions reachable through the closed quadratic branches.
#[derive(Debug)]
pub struct FiberEinsteinOutcome {
    pub relation: GammaRelation,
    /// Discriminants of every branch examined, in branch order.
    pub discriminants: Vec<DiscriminantReport>,
    pub solutions: Vec<EinsteinSolution>,
}

fn scalar_b(report: &EigenvalueReport, a: usize) -> Result<Rational> {
    let first = report.b[a][0].clone().ok_or_else(|| SolverError::NonScalar {
        key: report.key.clone(),
        fiber: a,
    })?;
    if report.b[a].iter().any(|v| v.as_ref() != Some(&first)) {
        return Err(SolverError::NonScalar {
            key: report.key.clone(),
            fiber: a,
        });
    }
    Ok(first)
}

fn check_shape(report: &EigenvalueReport) -> Result<(Rational, Rational, Rational, Rational)> {
    if report.s() != 2 {
        return Err(SolverError::Shape {
            key: report.key.clone(),
            reason: format!("expected 2 fiber summands, found {}", report.s()),
        });
    }
    if report.c_k.iter().any(|c| *c != rat(1, 2)) {
        return Err(SolverError::Shape {
            key: report.key.clone(),
            reason: "base must be symmetric (c_{k,n} = 1/2)".into(),
        });
    }
    let b1 = scalar_b(report, 0)?;
    let b2 = scalar_b(report, 1)?;
    Ok((report.gamma[0].clone(), report.gamma[1].clone(), b1, b2))
}

fn push_unique(solutions: &mut Vec<EinsteinSolution>, sol: EinsteinSolution) {
    let dup = solutions.iter().any(|s| {
        s.x.len() == sol.x.len()
            && s.x
                .iter()
                .zip(&sol.x)
                .all(|(a, b)| a.approx_eq(b, crate::TOL))
    });
    if !dup {
        solutions.push(sol);
    }
}

/// Solves the full Einstein system for two symmetric fiber summands when
/// `γ₂ = γ₁` or `γ₂ = 1 − γ₁`, where every branch closes to a quadratic and
/// all solutions are exact quadratic surds.
///
/// * `γ₂ = γ₁ = γ`: the two fiber equations factor as
///   `(X₁ − X₂)(2γX₁X₂ − (1 − γ)) = 0`, giving the binormal branch and the
///   branch `2γ(2b₂+1−γ)X₁² − 2(1−γ)X₁ + (1−γ)(2b₁+1−γ) = 0`,
///   `X₂ = (1−γ)/(2γX₁)`.
/// * `γ₂ = 1 − γ₁`: the fiber equations factor into `X₂ = γ₁X₁/(1−γ₁)`
///   (fiber-Einstein branch, `2γ₁X₁² − 2X₁ + (2b₁ + 2b₂(1−γ₁)/γ₁ + 1−γ₁) = 0`)
///   and `X₂ = 1/(2X₁)` (`2(γ₁+2b₂)X₁² − 2X₁ + (2b₁+1−γ₁) = 0`).
///
/// Returns `relation = Other` with no branches when neither relation holds.
pub fn solve_type2_fiber_einstein(report: &EigenvalueReport) -> Result<FiberEinsteinOutcome> {
    let (g1, g2, b1, b2) = check_shape(report)?;
    let one = rat(1, 1);
    let two = rat(2, 1);

    let mut discriminants = Vec::new();
    let mut solutions: Vec<EinsteinSolution> = Vec::new();

    if g1 == g2 {
        let g = g1;
        // Binormal branch.
        if let BinormalOutcome::Solved {
            discriminant,
            solutions: binormal,
            ..
        } = solve_binormal(report)?
        {
            discriminants.push(discriminant);
            for sol in binormal {
                push_unique(&mut solutions, sol);
            }
        }
        // Non-binormal branch: 2γX₁X₂ = 1 − γ.
        let omg = &one - &g;
        let a_coef = &two * &g * (&two * &b2 + &omg);
        let m_coef = &two * &omg;
        let c_coef = &omg * (&two * &b1 + &omg);
        let d = &omg - &two * &g * (&two * &b1 + &omg) * (&two * &b2 + &omg);
        let disc = DiscriminantReport {
            value: d,
            kind: DiscriminantKind::EqualGamma,
        };
        discriminants.push(disc.clone());
        let x2_of = |x1: &QuadSurd| -> Result<QuadSurd> {
            // X₂ = (1−γ)/(2γ) · 1/X₁
            let k = &omg / (&two * &g);
            Ok(QuadSurd::from_rational(k).checked_div(x1)?)
        };
        for x1 in quadratic_roots(&a_coef, &m_coef, &c_coef) {
            let x2 = x2_of(&x1)?;
            let x = vec![Value::Exact(x1), Value::Exact(x2)];
            if let Some(sol) =
                EinsteinSolution::checked(report, x, Branch::EqualGamma, Some(disc.clone()))?
            {
                push_unique(&mut solutions, sol);
            }
        }
        return Ok(FiberEinsteinOutcome {
            relation: GammaRelation::Equal,
            discriminants,
            solutions,
        });
    }

    if &g1 + &g2 == one {
        let omg = &one - &g1;
        // Fiber-Einstein branch: X₂ = γ₁X₁/(1−γ₁).
        let a_coef = &two * &g1;
        let m_coef = two.clone();
        let c_coef = &two * &b1 + &two * &b2 * &omg / &g1 + &omg;
        let d = &one - rat(4, 1) * &b1 * &g1 - rat(4, 1) * &b2 * &omg - &two * &g1 * &omg;
        let disc = DiscriminantReport {
            value: d,
            kind: DiscriminantKind::FiberEinstein,
        };
        discriminants.push(disc.clone());
        let slope = &g1 / &omg;
        for x1 in quadratic_roots(&a_coef, &m_coef, &c_coef) {
            let x2 = x1.scale(&slope);
            let x = vec![Value::Exact(x1), Value::Exact(x2)];
            if let Some(sol) =
                EinsteinSolution::checked(report, x, Branch::FiberEinstein, Some(disc.clone()))?
            {
                push_unique(&mut solutions, sol);
            }
        }
        // Complementary branch: X₂ = 1/(2X₁).
        let a_coef = &two * (&g1 + &two * &b2);
        let m_coef = two.clone();
        let c_coef = &two * &b1 + &omg;
        let d2 = &one - &two * (&g1 + &two * &b2) * (&two * &b1 + &omg);
        let disc2 = DiscriminantReport {
            value: d2,
            kind: DiscriminantKind::ComplementaryGamma,
        };
        discriminants.push(disc2.clone());
        let half = QuadSurd::from_rational(rat(1, 2));
        for x1 in quadratic_roots(&a_coef, &m_coef, &c_coef) {
            let x2 = half.checked_div(&x1)?;
            let x = vec![Value::Exact(x1), Value::Exact(x2)];
            if let Some(sol) = EinsteinSolution::checked(
                report,
                x,
                Branch::ComplementaryGamma,
                Some(disc2.clone()),
            )? {
                push_unique(&mut solutions, sol);
            }
        }
        return Ok(FiberEinsteinOutcome {
            relation: GammaRelation::Complementary,
            discriminants,
            solutions,
        });
    }

    Ok(FiberEinsteinOutcome {
        relation: GammaRelation::Other,
        discriminants,
        solutions,
    })
}

/// Result of the general two-unknown elimination.
#[derive(Debug)]
pub struct GeneralOutcome {
    /// The quartic in `X₁` obtained by eliminating `X₂` (primitive integer
    /// coefficients, sign normalized to a positive leading coefficient).
    pub quartic: RatPolynomial,
    pub solutions: Vec<EinsteinSolution>,
}

/// Solves the full Einstein system for two symmetric fiber summands over an
/// irreducible symmetric base without any assumption on `γ₁, γ₂`.
///
/// Setting `x = X₁`, the horizontal/fiber-1 equation is linear in `X₂`:
/// `A(x)·X₂ + B(x) = 0` with `A = 2γ₁x² − 2x + (2b₁+1−γ₁)`, `B = 2b₂x`.
/// Substituting `X₂ = −B/A` into the fiber-1/fiber-2 equation
/// `c₂X₂² + c₁X₂ + c₀ = 0` (`c₂ = −2γ₂x`, `c₁ = 2γ₁x² + (1−γ₁)`,
/// `c₀ = −(1−γ₂)x`) yields `c₂B² − c₁AB + c₀A² = 0`, which is divisible by
/// `x`; the quotient is a quartic. Its positive real roots are isolated with
/// Sturm chains, refined to width 10⁻¹², back-substituted, and each
/// candidate with `X₂ > 0` is certified by the Ricci check.
pub fn solve_type2_general(report: &EigenvalueReport) -> Result<GeneralOutcome> {
    let (g1, g2, b1, b2) = check_shape(report)?;
    let one = rat(1, 1);

    let poly_a = RatPolynomial::new(vec![
        rat(2, 1) * &b1 + &one - &g1,
        rat(-2, 1),
        rat(2, 1) * &g1,
    ]);
    let poly_b = RatPolynomial::new(vec![Rational::zero(), rat(2, 1) * &b2]);
    let c2 = RatPolynomial::new(vec![Rational::zero(), rat(-2, 1) * &g2]);
    let c1 = RatPolynomial::new(vec![&one - &g1, Rational::zero(), rat(2, 1) * &g1]);
    let c0 = RatPolynomial::new(vec![Rational::zero(), &g2 - &one]);

    let bb = &poly_b * &poly_b;
    let ab = &poly_a * &poly_b;
    let aa = &poly_a * &poly_a;
    let resultant = &(&(&c2 * &bb) - &(&c1 * &ab)) + &(&c0 * &aa);
    if resultant.is_zero() {
        return Err(SolverError::DegenerateElimination {
            key: report.key.clone(),
        });
    }
    // Every term carries a factor x; strip it.
    let (quartic, rem) = resultant.div_rem(&RatPolynomial::x());
    debug_assert!(rem.is_zero());
    let mut quartic = quartic.primitive();
    if quartic.leading().map(|l| *l < Rational::zero()).unwrap_or(false) {
        quartic = -quartic;
    }

    let roots = isolate_real_roots(&quartic.squarefree_part(), &Domain::Positive)?;
    let mut solutions = Vec::new();
    for root in roots {
        // Back-substitute X₂ = −B/A. A = 0 forces B = 0, possible only at
        // x = 0, so A is non-zero on every positive root.
        let (x1, x2) = if root.is_exact() {
            let m = root.midpoint();
            let a_val = poly_a.eval(&m);
            let x2 = -poly_b.eval(&m) / a_val;
            (Value::rational(m), Value::rational(x2))
        } else {
            let m = root.value();
            let x2 = -poly_b.eval_f64(m) / poly_a.eval_f64(m);
            (Value::Isolated(root), Value::Approx(x2))
        };
        if !x2.is_positive() {
            continue;
        }
        let x = vec![x1, x2];
        if let Some(sol) = EinsteinSolution::checked(report, x, Branch::General, None)? {
            solutions.push(sol);
        }
    }
    Ok(GeneralOutcome { quartic, solutions })
}
