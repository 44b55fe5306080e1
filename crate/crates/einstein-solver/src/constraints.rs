//! Necessary ratio constraints when the induced fiber or base metric is
//! required to be Einstein on its own.

use crate::{Result, SolverError};
use casimir_engine::EigenvalueReport;
use exact_numerics::{rat, sqrt_exact, QuadSurd, Rational};
use num_traits::Zero;

/// A forced shape of the metric coefficients on one side of the fibration.
#[derive(Debug, Clone)]
pub enum RatioConstraint {
    /// A single summand: any positive coefficient works.
    Unconstrained,
    /// `coefficient_i / coefficient_last` is pinned to the listed exact
    /// value for each summand `i` (the last entry is `1`).
    Ratios(Vec<QuadSurd>),
    /// The constraint degenerates (zero eigenvalue or non-scalar action).
    Degenerate(String),
}

/// Constraints on `μ_j` (base Einstein) and `λ_a` (fiber Einstein).
#[derive(Debug, Clone)]
pub struct Constraints {
    pub base: RatioConstraint,
    pub fiber: RatioConstraint,
}

/// Computes the coefficient ratios forced by requiring the projected base
/// metric `⊕_j μ_j B|_{n_j}` and the restricted fiber metric
/// `⊕_a λ_a B|_{p_a}` to be Einstein.
///
/// * Base: with symmetric `c_{k,j}` all equal, the Ricci quotients of the
///   base metric force `μ_i/μ_j = √(b^i/b^j)` where `b^j = Σ_a b_a^j`.
/// * Fiber: each symmetric summand is Einstein with quotient
///   `q_a/λ_a`, `q_a = ½(c_{l,a} + γ_a/2)`, so `λ_i/λ_j = q_i/q_j`.
pub fn einstein_base_fiber_constraints(report: &EigenvalueReport) -> Result<Constraints> {
    let base = if report.n_count() <= 1 {
        RatioConstraint::Unconstrained
    } else if report.c_k.windows(2).any(|w| w[0] != w[1]) {
        RatioConstraint::Degenerate("unequal c_{k,j} across base summands".into())
    } else {
        let totals: Vec<Option<Rational>> = (0..report.n_count())
            .map(|j| {
                let mut acc = Rational::zero();
                for a in 0..report.s() {
                    acc += report.b[a][j].clone()?;
                }
                Some(acc)
            })
            .collect();
        if totals.iter().any(Option::is_none) {
            RatioConstraint::Degenerate("non-scalar C_p on a base summand".into())
        } else {
            let totals: Vec<Rational> = totals.into_iter().map(Option::unwrap).collect();
            let last = totals.last().unwrap().clone();
            if last.is_zero() || totals.iter().any(|t| *t <= Rational::zero()) {
                RatioConstraint::Degenerate("vanishing b^j on a base summand".into())
            } else {
                let mut ratios = Vec::with_capacity(totals.len());
                for t in &totals {
                    let r = sqrt_exact(&(t / &last)).map_err(SolverError::Exact)?;
                    ratios.push(r);
                }
                RatioConstraint::Ratios(ratios)
            }
        }
    };

    let fiber = if report.s() <= 1 {
        RatioConstraint::Unconstrained
    } else {
        let q: Vec<Rational> = (0..report.s())
            .map(|a| (&report.c_l[a] + &report.gamma[a] / rat(2, 1)) / rat(2, 1))
            .collect();
        let last = q.last().unwrap().clone();
        if q.iter().any(|v| *v <= Rational::zero()) {
            RatioConstraint::Degenerate("vanishing fiber Einstein quotient".into())
        } else {
            RatioConstraint::Ratios(
                q.iter()
                    .map(|v| QuadSurd::from_rational(v / &last))
                    .collect(),
            )
        }
    };

    Ok(Constraints { base, fiber })
}
