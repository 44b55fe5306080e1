//! Binormal metrics `B|_p ⊕ X·B|_n` and the one-dimensional-fiber case.

use crate::value::Value;
use crate::{
    Branch, DiscriminantKind, DiscriminantReport, EinsteinSolution, Result, SolverError,
};
use casimir_engine::EigenvalueReport;
use exact_numerics::{rat, sqrt_exact, QuadSurd, Rational};
use num_traits::Zero;

/// Result of the binormal Einstein equation on one fibration.
#[derive(Debug)]
pub enum BinormalOutcome {
    /// The system reduces to one quadratic in `X`; `complex_pairs` counts
    /// conjugate non-real root pairs (so `Δ < 0` gives `complex_pairs = 1`).
    Solved {
        discriminant: DiscriminantReport,
        solutions: Vec<EinsteinSolution>,
        complex_pairs: usize,
    },
    /// `C_{p_a}` acts non-scalarly on a horizontal summand; the binormal
    /// horizontal equation cannot hold.
    NonScalar { fiber: usize },
    /// Two fiber summands with `γ₁ ≠ γ₂`: compatibility of the two fiber
    /// equations forces `X = 1/√2`, which never satisfies the rational
    /// horizontal equation — no binormal Einstein metric exists.
    UnequalGamma { gamma: Vec<Rational> },
    /// The totals `b^j = Σ_a b_a^j` differ across base summands, so the
    /// horizontal equations are mutually inconsistent for a single `μ`.
    BaseObstruction { totals: Vec<Rational> },
}

impl BinormalOutcome {
    /// The solutions, empty for every obstruction variant.
    pub fn solutions(&self) -> &[EinsteinSolution] {
        match self {
            BinormalOutcome::Solved { solutions, .. } => solutions,
            _ => &[],
        }
    }

    pub fn discriminant(&self) -> Option<&DiscriminantReport> {
        match self {
            BinormalOutcome::Solved { discriminant, .. } => Some(discriminant),
            _ => None,
        }
    }
}

/// Exact roots `(m ± √Δ)/(2a)` of `a·X² − m·X + c = 0`; empty when `Δ < 0`,
/// a single root when `Δ = 0`.
pub(crate) fn quadratic_roots(a: &Rational, m: &Rational, c: &Rational) -> Vec<QuadSurd> {
    let delta = m * m - rat(4, 1) * a * c;
    if delta < Rational::zero() {
        return vec![];
    }
    let root = sqrt_exact(&delta).expect("non-negative radicand");
    let half = Rational::from_integer(1.into()) / (rat(2, 1) * a);
    let base = QuadSurd::from_rational(m.clone());
    let plus = base.checked_add(&root).unwrap().scale(&half);
    if delta.is_zero() {
        return vec![plus];
    }
    let minus = base.checked_sub(&root).unwrap().scale(&half);
    vec![plus, minus]
}

/// Solves the binormal Einstein equation
/// `(γ + 2c_{l,p})X² − (1 + 2c_{k,n})X + (1 − γ + 2b) = 0`
/// for the fibration described by `report`.
///
/// With symmetric fibers (`c_{l,p} = γ/2`) and a symmetric base
/// (`c_{k,n} = 1/2`) this is `2γX² − 2X + (1 − γ + 2b) = 0` with reduced
/// discriminant `Δ′ = 1 − 2γ(1 − γ + 2b)`, and the report records `Δ′`
/// rather than the unreduced `Δ = 4Δ′`.
pub fn solve_binormal(report: &EigenvalueReport) -> Result<BinormalOutcome> {
    let s = report.s();
    if s == 0 {
        return Err(SolverError::Shape {
            key: report.key.clone(),
            reason: "no fiber summands".into(),
        });
    }
    if report.gamma.windows(2).any(|w| w[0] != w[1]) {
        return Ok(BinormalOutcome::UnequalGamma {
            gamma: report.gamma.clone(),
        });
    }
    for a in 0..s {
        if report.b[a].iter().any(Option::is_none) {
            return Ok(BinormalOutcome::NonScalar { fiber: a });
        }
    }
    // b^j = Σ_a b_a^j must be constant across base summands; the common
    // value is the b of the reduced quadratic.
    let totals: Vec<Rational> = (0..report.n_count())
        .map(|j| {
            (0..s)
                .map(|a| report.b[a][j].clone().unwrap())
                .fold(Rational::zero(), |acc, v| acc + v)
        })
        .collect();
    if totals.windows(2).any(|w| w[0] != w[1]) || report.c_k.windows(2).any(|w| w[0] != w[1]) {
        return Ok(BinormalOutcome::BaseObstruction { totals });
    }
    let gamma = report.gamma[0].clone();
    let b = totals[0].clone();
    let c_l = report.c_l[0].clone();
    let c_k = report.c_k[0].clone();

    let a_coef = &gamma + rat(2, 1) * &c_l;
    let m_coef = rat(1, 1) + rat(2, 1) * &c_k;
    let c_coef = rat(1, 1) - &gamma + rat(2, 1) * &b;
    let delta = &m_coef * &m_coef - rat(4, 1) * &a_coef * &c_coef;

    // Symmetric fiber and base: report the reduced discriminant Δ′ = Δ/4.
    let symmetric = c_l == &gamma / rat(2, 1) && c_k == rat(1, 2);
    let discriminant = if symmetric {
        DiscriminantReport {
            value: rat(1, 1) - rat(2, 1) * &gamma * &c_coef,
            kind: DiscriminantKind::BinormalSymmetric,
        }
    } else {
        DiscriminantReport {
            value: delta.clone(),
            kind: DiscriminantKind::Binormal,
        }
    };

    let mut solutions = Vec::new();
    let mut complex_pairs = 0;
    if delta < Rational::zero() {
        complex_pairs = 1;
    } else {
        for root in quadratic_roots(&a_coef, &m_coef, &c_coef) {
            let x = vec![Value::Exact(root); s];
            if let Some(sol) =
                EinsteinSolution::checked(report, x, Branch::Binormal, Some(discriminant.clone()))?
            {
                solutions.push(sol);
            }
        }
    }
    Ok(BinormalOutcome::Solved {
        discriminant,
        solutions,
        complex_pairs,
    })
}

/// The unique binormal Einstein metric of a fibration with one-dimensional
/// fiber over a base with `dim n = m`:
/// `X = (2 + m)/(m(1 + 2c_{k,n}))`, hence `X = (2 + m)/(2m)` when the base
/// is symmetric (`c_{k,n} = 1/2`).
pub fn solve_circle_bundle(m: u64, c_kn: &Rational) -> Rational {
    let m = Rational::from_integer(m.into());
    (rat(2, 1) + &m) / (&m * (rat(1, 1) + rat(2, 1) * c_kn))
}
