//! Metric coefficients: exact quadratic surds where a closed form exists,
//! certified root enclosures (or reals derived from them) otherwise.

use exact_numerics::{IsolatedRoot, QuadSurd, Rational};
use num_traits::ToPrimitive;
use std::fmt;

/// One metric coefficient or solution component.
#[derive(Debug, Clone)]
pub enum Value {
    /// Exact element of a quadratic field (includes all rationals).
    Exact(QuadSurd),
    /// Certified enclosure of a simple real algebraic number, refined to a
    /// width of 10⁻¹².
    Isolated(IsolatedRoot),
    /// Real derived from an isolated root by back-substitution; accurate to
    /// roughly the enclosure width.
    Approx(f64),
}

impl Value {
    pub fn rational(r: Rational) -> Self {
        Value::Exact(QuadSurd::from_rational(r))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(s) => s.to_f64(),
            Value::Isolated(r) => r.value(),
            Value::Approx(x) => *x,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Value::Exact(s) => s.is_positive(),
            Value::Isolated(r) => r.low >= Rational::from_integer(0.into()) && r.value() > 0.0,
            Value::Approx(x) => *x > 0.0,
        }
    }

    /// The exact surd, when this value has one.
    pub fn as_exact(&self) -> Option<&QuadSurd> {
        match self {
            Value::Exact(s) => Some(s),
            _ => None,
        }
    }

    /// The exact rational, when this value is one.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.as_exact().and_then(|s| s.as_rational())
    }

    /// Numeric closeness (used when at least one side is non-exact).
    pub fn approx_eq(&self, other: &Value, tol: f64) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a == b,
            _ => (self.to_f64() - other.to_f64()).abs() <= tol,
        }
    }
}

impl From<QuadSurd> for Value {
    fn from(s: QuadSurd) -> Self {
        Value::Exact(s)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(s) => write!(f, "{s}"),
            Value::Isolated(r) => write!(f, "{:.4}", r.value()),
            Value::Approx(x) => write!(f, "{x:.4}"),
        }
    }
}

/// An adapted metric `⊕_a λ_a B|_{p_a} ⊕ μ B|_n` (base summands share `μ`;
/// non-binormal base directions are outside the solved class).
#[derive(Debug, Clone)]
pub struct MetricParams {
    pub lambda: Vec<Value>,
    pub mu: Value,
}

impl MetricParams {
    /// Normalized presentation from `X_a = μ/λ_a`: sets `μ = 1`, `λ_a = 1/X_a`.
    pub fn from_x(xs: &[Value]) -> Self {
        let one = QuadSurd::from_rational(Rational::from_integer(1.into()));
        let lambda = xs
            .iter()
            .map(|x| match x {
                Value::Exact(s) => Value::Exact(
                    one.checked_div(s).expect("metric coefficient must be non-zero"),
                ),
                other => Value::Approx(1.0 / other.to_f64()),
            })
            .collect();
        MetricParams {
            lambda,
            mu: Value::rational(Rational::from_integer(1.into())),
        }
    }

    /// Binormal metric `B|_p ⊕ X·B|_n`.
    pub fn binormal(s: usize, x: Value) -> Self {
        MetricParams {
            lambda: vec![Value::rational(Rational::from_integer(1.into())); s],
            mu: x,
        }
    }

    /// Multiplies every coefficient by a rational `t > 0` (homothety).
    pub fn scaled(&self, t: &Rational) -> Self {
        let tf = t.to_f64().unwrap_or(f64::NAN);
        let scale = |v: &Value| match v {
            Value::Exact(s) => Value::Exact(s.scale(t)),
            Value::Isolated(r) => Value::Approx(r.value() * tf),
            Value::Approx(x) => Value::Approx(x * tf),
        };
        MetricParams {
            lambda: self.lambda.iter().map(scale).collect(),
            mu: scale(&self.mu),
        }
    }
}
