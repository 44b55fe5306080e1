//! Ricci-quotient verification of adapted metrics.
//!
//! For `g = ⊕_a λ_a B|_{p_a} ⊕ μ B|_n` with symmetric fibers and a base on
//! which all summands share `μ`, the Ricci quotients `Ric/g` are
//!
//! * fiber summand `a`:  `(½(c_{l,a}+γ_a/2) + λ_a²(1−γ_a)/(4μ²)) / λ_a`,
//! * horizontal summand `j`:  `(r_j − (1/(2μ)) Σ_a λ_a b_a^j) / μ` with
//!   `r_j = ½(½ + c_{k,j})`,
//!
//! and the metric is Einstein exactly when all quotients agree.

use crate::value::{MetricParams, Value};
use crate::{SolverError, TOL};
use casimir_engine::EigenvalueReport;
use exact_numerics::{rat, QuadSurd, Rational};

/// Outcome of a Ricci check.
#[derive(Debug, Clone)]
pub struct RicciReport {
    /// `Ric/g` on each fiber summand.
    pub fiber_ratios: Vec<Value>,
    /// `Ric/g` on each horizontal summand.
    pub horizontal_ratios: Vec<Value>,
    /// All quotients equal (exactly for surd inputs, to 10⁻⁹ otherwise).
    pub is_einstein: bool,
    /// Whether the comparison was carried out in exact arithmetic.
    pub exact: bool,
}

impl RicciReport {
    /// The common Einstein quotient (first fiber ratio; meaningful when
    /// `is_einstein`).
    pub fn einstein_ratio(&self) -> Value {
        self.fiber_ratios[0].clone()
    }
}

fn q(r: &Rational) -> QuadSurd {
    QuadSurd::from_rational(r.clone())
}

/// Attempts the fully exact computation; `None` when inputs are non-exact or
/// live in incompatible quadratic fields.
fn try_exact(report: &EigenvalueReport, m: &MetricParams) -> Option<RicciReport> {
    let lambda: Vec<&QuadSurd> = m.lambda.iter().map(Value::as_exact).collect::<Option<_>>()?;
    let mu = m.mu.as_exact()?;
    let mu2 = mu.checked_mul(mu).ok()?;
    let four_mu2 = mu2.scale(&rat(4, 1));

    let mut fiber = Vec::with_capacity(report.s());
    for a in 0..report.s() {
        let qa = (&report.c_l[a] + &report.gamma[a] / rat(2, 1)) / rat(2, 1);
        let one_minus = rat(1, 1) - &report.gamma[a];
        let l2 = lambda[a].checked_mul(lambda[a]).ok()?;
        let term = l2.scale(&one_minus).checked_div(&four_mu2).ok()?;
        let num = q(&qa).checked_add(&term).ok()?;
        fiber.push(num.checked_div(lambda[a]).ok()?);
    }

    let mut horizontal = Vec::with_capacity(report.n_count());
    for j in 0..report.n_count() {
        let rj = (rat(1, 2) + &report.c_k[j]) / rat(2, 1);
        let mut acc = QuadSurd::zero();
        for a in 0..report.s() {
            let b = report.b[a][j].clone()?;
            acc = acc.checked_add(&lambda[a].scale(&b)).ok()?;
        }
        let half_mu = mu.scale(&rat(2, 1));
        let sub = acc.checked_div(&half_mu).ok()?;
        let num = q(&rj).checked_sub(&sub).ok()?;
        horizontal.push(num.checked_div(mu).ok()?);
    }

    let first = fiber[0].clone();
    let is_einstein = fiber.iter().chain(&horizontal).all(|v| *v == first);
    Some(RicciReport {
        fiber_ratios: fiber.into_iter().map(Value::Exact).collect(),
        horizontal_ratios: horizontal.into_iter().map(Value::Exact).collect(),
        is_einstein,
        exact: true,
    })
}

fn float(report: &EigenvalueReport, m: &MetricParams) -> Result<RicciReport, SolverError> {
    let to = |r: &Rational| num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN);
    let lambda: Vec<f64> = m.lambda.iter().map(Value::to_f64).collect();
    let mu = m.mu.to_f64();

    let mut fiber = Vec::with_capacity(report.s());
    for a in 0..report.s() {
        let qa = 0.5 * (to(&report.c_l[a]) + 0.5 * to(&report.gamma[a]));
        let one_minus = 1.0 - to(&report.gamma[a]);
        fiber.push((qa + lambda[a] * lambda[a] * one_minus / (4.0 * mu * mu)) / lambda[a]);
    }
    let mut horizontal = Vec::with_capacity(report.n_count());
    for j in 0..report.n_count() {
        let rj = 0.5 * (0.5 + to(&report.c_k[j]));
        let mut acc = 0.0;
        for a in 0..report.s() {
            let b = report.b[a][j]
                .as_ref()
                .ok_or_else(|| SolverError::NonScalar {
                    key: report.key.clone(),
                    fiber: a,
                })?;
            acc += lambda[a] * to(b);
        }
        horizontal.push((rj - acc / (2.0 * mu)) / mu);
    }
    let first = fiber[0];
    let is_einstein = fiber
        .iter()
        .chain(&horizontal)
        .all(|v| (v - first).abs() <= TOL);
    Ok(RicciReport {
        fiber_ratios: fiber.into_iter().map(Value::Approx).collect(),
        horizontal_ratios: horizontal.into_iter().map(Value::Approx).collect(),
        is_einstein,
        exact: false,
    })
}

/// Computes the Ricci quotients of `m` and decides whether it is Einstein.
///
/// Exact when every coefficient is an exact surd over one quadratic field;
/// falls back to floating point (tolerance 10⁻⁹) otherwise.
pub fn ricci_verify(report: &EigenvalueReport, m: &MetricParams) -> Result<RicciReport, SolverError> {
    if m.lambda.len() != report.s() {
        return Err(SolverError::Shape {
            key: report.key.clone(),
            reason: format!("{} λ's for {} fiber summands", m.lambda.len(), report.s()),
        });
    }
    if !m.mu.is_positive() || m.lambda.iter().any(|l| !l.is_positive()) {
        return Err(SolverError::NonPositiveMetric {
            key: report.key.clone(),
        });
    }
    for a in 0..report.s() {
        for j in 0..report.n_count() {
            if report.b[a][j].is_none() {
                return Err(SolverError::NonScalar {
                    key: report.key.clone(),
                    fiber: a,
                });
            }
        }
    }
    if let Some(exact) = try_exact(report, m) {
        return Ok(exact);
    }
    float(report, m)
}
