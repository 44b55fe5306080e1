//! Einstein adapted metrics on Kowalski n-symmetric spaces.
//!
//! The space is the diagonal quotient `M = G₀ⁿ/ΔⁿG₀` for a compact simple
//! `G₀`, fibered over a product of two lower diagonal quotients,
//! `N = G₀^p/ΔᵖG₀ × G₀^q/ΔᵠG₀` with `p + q = n`.  All Casimir eigenvalues
//! on the isotropy modules are explicit rationals in `(n, p, q)`, so the
//! Einstein equations for adapted metrics `g_M(λ; μ₁, μ₂)` reduce to a
//! rational system in the two ratios `X_i = λ/μ_i`.
//!
//! This crate computes those eigenvalues, classifies binormal Einstein
//! metrics, solves the full adapted-metric system (standard solution plus a
//! unique nonstandard one for `n > 4`, obtained from a cubic with a
//! certified root enclosure), and implements the reduction lemma that
//! forces the per-summand coefficients `μ_{i,j}` of a finer adapted metric
//! to collapse to the pair `(μ₁, μ₂)`.
//!
//! Conventions: [`KowalskiSpace::solve`] works in the ratios `X_i = λ/μ_i`
//! of the elimination, while [`KowalskiSpace::binormal_set`] reports the
//! classical normalization `X = μ/λ` (metric `B|𝔭 ⊕ X·B|𝔫`); the two are
//! reciprocal.

use exact_numerics::{
    isolate_real_roots, rat, sqrt_exact, Domain, QuadSurd, RatPolynomial, Rational,
};
use num_traits::{Signed, ToPrimitive, Zero};

/// Tolerance for floating-point Ricci verification of non-exact solutions.
pub const TOL: f64 = 1e-9;

/// Errors from shape validation and the form-reduction lemma.
#[derive(Debug, thiserror::Error)]
pub enum KowalskiError {
    #[error("invalid Kowalski shape (p, q) = ({p}, {q}): {reason}")]
    InvalidShape { p: i64, q: i64, reason: &'static str },
    #[error("form reduction: {0}")]
    FormInput(String),
    #[error(transparent)]
    Exact(#[from] exact_numerics::ExactError),
}

pub type Result<T> = std::result::Result<T, KowalskiError>;

/// The fibration `G₀ⁿ/ΔⁿG₀ → G₀^p/ΔᵖG₀ × G₀^q/ΔᵠG₀`, `p + q = n`,
/// `2 ≤ p ≤ q ≤ n − 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KowalskiSpace {
    n: i64,
    p: i64,
    q: i64,
}

/// Casimir eigenvalues of the isotropy decomposition
/// `𝔪 = 𝔭 ⊕ 𝔫₁ ⊕ 𝔫₂`, all exact rationals in `(n, p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KowalskiEigenvalues {
    /// Eigenvalue of `C_𝔩` on `𝔭` (and on all of `𝔤`): `1/n`.
    pub c_l_p: Rational,
    /// Eigenvalues of `C_𝔭` on `𝔫₁, 𝔫₂`: `q/(np)` and `p/(nq)`.
    pub b: [Rational; 2],
    /// Eigenvalues of `C_𝔨` on `𝔫₁, 𝔫₂`: `1/p` and `1/q`.
    pub c_k: [Rational; 2],
    /// Scalar of `Φ(C_𝔨·,·)` on `𝔭 × 𝔭`: `(p² + q²)/(npq)`.
    pub gamma: Rational,
    /// Scalars of `Φ(C_𝔫ᵢ·,·)` on `𝔭 × 𝔭`: `(p−1)q/(pn)` and `(q−1)p/(qn)`.
    pub c_n_p: [Rational; 2],
}

/// One solution ratio, exact when the algebra permits.
#[derive(Clone, Debug, PartialEq)]
pub enum KowalskiValue {
    Exact(Rational),
    Surd(QuadSurd),
    Approx(f64),
}

impl KowalskiValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            KowalskiValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            KowalskiValue::Surd(s) => s.to_f64(),
            KowalskiValue::Approx(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            KowalskiValue::Exact(r) => Some(r),
            _ => None,
        }
    }
}

impl std::fmt::Display for KowalskiValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KowalskiValue::Exact(r) => write!(f, "{r}"),
            KowalskiValue::Surd(s) => write!(f, "{s}"),
            KowalskiValue::Approx(x) => write!(f, "≈{x:.10}"),
        }
    }
}

/// An Einstein adapted metric `g_M(1; 1/X₁, 1/X₂)` in the ratios
/// `X_i = λ/μ_i`.
#[derive(Clone, Debug)]
pub struct KowalskiSolution {
    /// `(X₁, X₂)`.
    pub x: [KowalskiValue; 2],
    /// `X₁ = X₂ = 1`: the standard metric.
    pub standard: bool,
    /// `X₁ = X₂`: the metric is binormal for the fibration.
    pub binormal: bool,
    /// The projected base metric `g_N(μ₁, μ₂)` is itself Einstein.
    pub base_einstein: bool,
    /// Common Ricci quotient `E` for `λ = 1`.
    pub einstein_ratio: KowalskiValue,
}

/// The three Ricci quotients of `g_M(1; 1/X₁, 1/X₂)`: fiber direction `𝔭`
/// and the two horizontal blocks `𝔫₁, 𝔫₂`, each already normalized by the
/// metric coefficient so that Einstein means all three agree.
#[derive(Clone, Debug)]
pub struct RicciQuotients<T> {
    pub fiber: T,
    pub horizontal: [T; 2],
}

impl RicciQuotients<f64> {
    pub fn is_einstein(&self) -> bool {
        (self.horizontal[0] - self.fiber).abs() <= TOL
            && (self.horizontal[1] - self.fiber).abs() <= TOL
    }
}

impl RicciQuotients<Rational> {
    pub fn is_einstein(&self) -> bool {
        self.horizontal[0] == self.fiber && self.horizontal[1] == self.fiber
    }
}

/// Outcome of the per-summand form-reduction lemma.
#[derive(Clone, Debug, PartialEq)]
pub enum FormReduction {
    /// All summand coefficients agree per block: the metric is of the
    /// reduced form `g_M(λ; μ₁, μ₂)`.
    Reduced { mu1: Rational, mu2: Rational },
    /// The Casimir combination `P = Σ ν_{i,j} C_{𝔫_{i,j}}` fails to be
    /// block-scalar: `ν_{i,k} ≠ ν_{i,k+1}` for the given block `i ∈ {1, 2}`
    /// and index `k`, so the metric cannot be Einstein.
    Violation { block: usize, index: usize },
}

impl KowalskiSpace {
    /// Validates `2 ≤ p ≤ q`; with `n = p + q` this is equivalent to
    /// `2 ≤ p ≤ q ≤ n − 2` (and forces `n ≥ 4`).
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 2 {
            return Err(KowalskiError::InvalidShape {
                p,
                q,
                reason: "p must be at least 2 (p = 1 collapses a base factor)",
            });
        }
        if p > q {
            return Err(KowalskiError::InvalidShape {
                p,
                q,
                reason: "requires p ≤ q",
            });
        }
        Ok(KowalskiSpace { n: p + q, p, q })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// All Casimir eigenvalues of the decomposition, as exact rationals.
    pub fn eigenvalues(&self) -> KowalskiEigenvalues {
        let (n, p, q) = (self.n, self.p, self.q);
        KowalskiEigenvalues {
            c_l_p: rat(1, n),
            b: [rat(q, n * p), rat(p, n * q)],
            c_k: [rat(1, p), rat(1, q)],
            gamma: rat(p * p + q * q, n * p * q),
            c_n_p: [rat((p - 1) * q, p * n), rat((q - 1) * p, q * n)],
        }
    }

    /// The horizontal binormal equation on `𝔫_j` in `X = μ/λ`:
    /// `nX² − q(p+2)X + (pq + q − p) = 0` for `j = 1` and
    /// `nX² − p(q+2)X + (pq + p − q) = 0` for `j = 2`.  `X = 1` always
    /// solves both.
    pub fn binormal_quadratic(&self, j: usize) -> RatPolynomial {
        let (n, p, q) = (self.n, self.p, self.q);
        let (a, b) = match j {
            0 => (q * (p + 2), p * q + q - p),
            1 => (p * (q + 2), p * q + p - q),
            _ => panic!("horizontal block index must be 0 or 1"),
        };
        RatPolynomial::from_ints(&[b, -a, n])
    }

    /// Binormal Einstein metrics, as the set of ratios `X = μ/λ` for the
    /// scalar product `B|𝔭 ⊕ X·B|𝔫`.  For `p ≠ q` the off-diagonal Einstein
    /// equation `δ₁₂^𝔨 (1 − X) = δ₁₂^𝔩` forces `X = 1` (the standard
    /// metric); for `p = q` both horizontal quadratics degenerate to
    /// `4X² − (n+4)X + n = 0` with roots `{1, n/4}`.
    pub fn binormal_set(&self) -> Vec<Rational> {
        let ev = self.eigenvalues();
        if self.p != self.q {
            // δ₁₂^𝔨 = 1/p − 1/q ≠ 0 while δ₁₂^𝔩 = 0, so X = 1 is forced;
            // it solves both horizontal quadratics.
            let one = rat(1, 1);
            debug_assert!(self.binormal_quadratic(0).eval(&one).is_zero());
            debug_assert!(self.binormal_quadratic(1).eval(&one).is_zero());
            return vec![one];
        }
        debug_assert_eq!(ev.c_k[0], ev.c_k[1]);
        let quad = self.binormal_quadratic(0);
        debug_assert_eq!(quad, self.binormal_quadratic(1));
        let c = quad.coeffs();
        let (a2, a1, a0) = (c[2].clone(), c[1].clone(), c[0].clone());
        let disc = &a1 * &a1 - rat(4, 1) * &a2 * &a0;
        let root = sqrt_exact(&disc).expect("binormal discriminant (n − 4)² is a square");
        let root = root.as_rational().expect("(n − 4)² has a rational square root");
        let two_a = rat(2, 1) * &a2;
        let mut xs = vec![(-&a1 + root) / &two_a, (-&a1 - root) / &two_a];
        xs.sort();
        xs.dedup();
        xs.retain(|x| x.is_positive());
        xs
    }

    /// The elimination cubic for the nonstandard solution, in `Z = X₁`:
    /// `t(Z) = 4q²Z³ − 4q(n + pq + 2)Z² + n(q(q+2)(p+1) + n + 8)Z − (q+3)n²`.
    pub fn structure_cubic(&self) -> RatPolynomial {
        let (n, p, q) = (self.n, self.p, self.q);
        RatPolynomial::from_ints(&[
            -(q + 3) * n * n,
            n * (q * (q + 2) * (p + 1) + n + 8),
            -4 * q * (n + p * q + 2),
            4 * q * q,
        ])
    }

    /// Open interval `(n/(q(p+1)), n/q)` in which the radicand defining
    /// `X₂` is positive; the real root of the cubic lies strictly inside.
    pub fn nonstandard_interval(&self) -> (Rational, Rational) {
        let (n, p, q) = (self.n, self.p, self.q);
        (rat(n, q * (p + 1)), rat(n, q))
    }

    /// Discriminant `δ = (q+1)²p² − (q−1)(3q² + 4q − 8)p − (q−1)(3q² + 8q + 16)`
    /// of the derivative of the cubic (up to the positive factor `16q²`);
    /// it is negative for every valid shape, so the cubic is strictly
    /// monotone and has exactly one real root.
    pub fn derivative_discriminant(&self) -> Rational {
        let (p, q) = (self.p, self.q);
        rat(
            (q + 1) * (q + 1) * p * p
                - (q - 1) * (3 * q * q + 4 * q - 8) * p
                - (q - 1) * (3 * q * q + 8 * q + 16),
            1,
        )
    }

    /// Radicand of the back-substitution for `X₂` at `X₁ = α`:
    /// `(−q²(p+1)α² + nq(p+2)α − n²) / (p²(q−1))`.
    pub fn x2_squared(&self, alpha: &Rational) -> Rational {
        let (n, p, q) = (self.n, self.p, self.q);
        let num = rat(-q * q * (p + 1), 1) * alpha * alpha + rat(n * q * (p + 2), 1) * alpha
            - rat(n * n, 1);
        num / rat(p * p * (q - 1), 1)
    }

    /// The three Ricci quotients of `g_M(1; 1/X₁, 1/X₂)`, exactly.  The
    /// fiber quotient is `n/(4pq) + ((p−1)q/(4pn))X₁² + ((q−1)p/(4qn))X₂²`;
    /// the horizontal quotients are `X_i` times the block equations
    /// `−(q/(2np))X₁ + (p+2)/(4p)` and `−(p/(2nq))X₂ + (q+2)/(4q)`.
    pub fn ricci_quotients_exact(&self, x1: &Rational, x2: &Rational) -> RicciQuotients<Rational> {
        let (n, p, q) = (self.n, self.p, self.q);
        let fiber = rat(n, 4 * p * q)
            + rat((p - 1) * q, 4 * p * n) * x1 * x1
            + rat((q - 1) * p, 4 * q * n) * x2 * x2;
        let h1 = x1 * &(rat(-q, 2 * n * p) * x1 + rat(p + 2, 4 * p));
        let h2 = x2 * &(rat(-p, 2 * n * q) * x2 + rat(q + 2, 4 * q));
        RicciQuotients {
            fiber,
            horizontal: [h1, h2],
        }
    }

    /// Floating-point version of [`Self::ricci_quotients_exact`].
    pub fn ricci_quotients(&self, x1: f64, x2: f64) -> RicciQuotients<f64> {
        let (n, p, q) = (self.n as f64, self.p as f64, self.q as f64);
        let fiber = n / (4.0 * p * q)
            + (p - 1.0) * q / (4.0 * p * n) * x1 * x1
            + (q - 1.0) * p / (4.0 * q * n) * x2 * x2;
        let h1 = x1 * (-q / (2.0 * n * p) * x1 + (p + 2.0) / (4.0 * p));
        let h2 = x2 * (-p / (2.0 * n * q) * x2 + (q + 2.0) / (4.0 * q));
        RicciQuotients {
            fiber,
            horizontal: [h1, h2],
        }
    }

    /// Ratio `r₁/r₂ = (p+2)q/((q+2)p)` of the base Ricci quotients; the
    /// projected metric `g_N(μ₁, μ₂)` is Einstein exactly when
    /// `μ₁/μ₂ = X₂/X₁` equals this, which for an Einstein adapted metric
    /// happens precisely when `p = q` and the metric is binormal.
    pub fn base_ricci_ratio(&self) -> Rational {
        let (p, q) = (self.p, self.q);
        rat((p + 2) * q, (q + 2) * p)
    }

    fn base_einstein_at(&self, x: &[KowalskiValue; 2]) -> bool {
        let target = self.base_ricci_ratio();
        match (&x[0], &x[1]) {
            (KowalskiValue::Exact(a), KowalskiValue::Exact(b)) => b / a == target,
            _ => {
                let r = x[1].to_f64() / x[0].to_f64();
                (r - target.to_f64().unwrap()).abs() <= TOL
            }
        }
    }

    fn certified(&self, x: [KowalskiValue; 2]) -> Option<KowalskiSolution> {
        let one = rat(1, 1);
        let (ratio, einstein) = match (&x[0], &x[1]) {
            (KowalskiValue::Exact(a), KowalskiValue::Exact(b)) => {
                let r = self.ricci_quotients_exact(a, b);
                (KowalskiValue::Exact(r.fiber.clone()), r.is_einstein())
            }
            _ => {
                let r = self.ricci_quotients(x[0].to_f64(), x[1].to_f64());
                (KowalskiValue::Approx(r.fiber), r.is_einstein())
            }
        };
        if !einstein || x.iter().any(|v| v.to_f64() <= 0.0) {
            return None;
        }
        let standard = x[0].as_exact() == Some(&one) && x[1].as_exact() == Some(&one);
        let binormal = match (&x[0], &x[1]) {
            (KowalskiValue::Exact(a), KowalskiValue::Exact(b)) => a == b,
            _ => (x[0].to_f64() - x[1].to_f64()).abs() <= TOL,
        };
        let base_einstein = self.base_einstein_at(&x);
        Some(KowalskiSolution {
            standard,
            binormal,
            base_einstein,
            einstein_ratio: ratio,
            x,
        })
    }

    /// All Einstein adapted metrics of the form `g_M(λ; μ₁, μ₂)`, up to
    /// homothety, as ratios `X_i = λ/μ_i`.  Always contains the standard
    /// metric `X₁ = X₂ = 1` with Einstein quotient `1/4 + 1/(2n)`; for
    /// `n > 4` exactly one additional, nonstandard metric exists, with `X₁`
    /// the unique real root of [`Self::structure_cubic`] (inside
    /// [`Self::nonstandard_interval`]) and `X₂` the positive square root of
    /// [`Self::x2_squared`].
    pub fn solve(&self) -> Vec<KowalskiSolution> {
        let one = rat(1, 1);
        let mut out = Vec::new();
        let standard = self
            .certified([
                KowalskiValue::Exact(one.clone()),
                KowalskiValue::Exact(one.clone()),
            ])
            .expect("the standard metric is always Einstein");
        out.push(standard);

        // Nonstandard branch: the cubic is strictly monotone (its
        // derivative has negative discriminant), so it has exactly one real
        // root, lying inside the admissibility interval for X₂.
        debug_assert!(self.derivative_discriminant().is_negative());
        let mut cubic = self.structure_cubic();
        let (lo, hi) = self.nonstandard_interval();

        // Detect the exact rational roots that occur structurally: Z = 1
        // for n = 4 (the nonstandard branch collapses onto the standard
        // metric) and Z = 4/n for p = q (the nonstandard metric is the
        // binormal one).
        let mut exact_roots: Vec<Rational> = Vec::new();
        for cand in [one.clone(), rat(4, self.n)] {
            if cubic.eval(&cand).is_zero() {
                let linear = RatPolynomial::new(vec![-cand.clone(), one.clone()]);
                cubic = cubic.div_rem(&linear).0;
                exact_roots.push(cand);
            }
        }
        exact_roots.dedup();

        let mut alphas: Vec<KowalskiValue> = Vec::new();
        for r in exact_roots {
            if r != one && r > lo && r < hi {
                alphas.push(KowalskiValue::Exact(r));
            }
        }
        if cubic.degree().map_or(false, |d| d >= 1) {
            let roots = isolate_real_roots(&cubic, &Domain::Interval(lo.clone(), hi.clone()))
                .expect("cubic is nonzero");
            for root in roots {
                if root.is_exact() {
                    let r = root.low.clone();
                    if r != one && r > lo && r < hi {
                        alphas.push(KowalskiValue::Exact(r));
                    }
                } else {
                    alphas.push(KowalskiValue::Approx(root.value()));
                }
            }
        }

        for alpha in alphas {
            let x2 = match &alpha {
                KowalskiValue::Exact(a) => {
                    let sq = self.x2_squared(a);
                    if sq.is_negative() {
                        continue;
                    }
                    let root = sqrt_exact(&sq).expect("nonnegative radicand");
                    match root.as_rational() {
                        Some(r) => KowalskiValue::Exact(r.clone()),
                        None => KowalskiValue::Surd(root),
                    }
                }
                KowalskiValue::Approx(a) => {
                    let (n, p, q) = (self.n as f64, self.p as f64, self.q as f64);
                    let num = -q * q * (p + 1.0) * a * a + n * q * (p + 2.0) * a - n * n;
                    let val = num / (p * p * (q - 1.0));
                    if val < 0.0 {
                        continue;
                    }
                    KowalskiValue::Approx(val.sqrt())
                }
                KowalskiValue::Surd(_) => unreachable!("α is rational or isolated"),
            };
            if let Some(sol) = self.certified([alpha, x2]) {
                if !sol.standard {
                    out.push(sol);
                }
            }
        }
        out
    }
}

/// Component `k` (1-based, `k = 1..=m+1` within its block of size `m + 1`)
/// of the Casimir operator of the irreducible summand `𝔫_{i,j}`:
/// `1/(j(j+1))` for `k ≤ j`, `j/(j+1)` for `k = j + 1`, zero beyond.
pub fn summand_casimir_component(j: usize, k: usize) -> Rational {
    let (j, k) = (j as i64, k as i64);
    if k <= j {
        rat(1, j * (j + 1))
    } else if k == j + 1 {
        rat(j, j + 1)
    } else {
        Rational::zero()
    }
}

/// Casimir eigenvalues of the space ([`KowalskiSpace::eigenvalues`]).
pub fn kowalski_eigenvalues(s: &KowalskiSpace) -> KowalskiEigenvalues {
    s.eigenvalues()
}

/// Binormal Einstein metrics ([`KowalskiSpace::binormal_set`]).
pub fn kowalski_binormal(s: &KowalskiSpace) -> Vec<Rational> {
    s.binormal_set()
}

/// Full adapted-metric classification ([`KowalskiSpace::solve`]).
pub fn kowalski_solve(s: &KowalskiSpace) -> Vec<KowalskiSolution> {
    s.solve()
}

/// Reduction lemma for adapted metrics refined along the summand
/// decomposition `𝔫₁ = ⊕_{j<p} 𝔫_{1,j}`, `𝔫₂ = ⊕_{j<q} 𝔫_{2,j}`: an
/// Einstein metric requires `P = Σ ν_{i,j} C_{𝔫_{i,j}}` (with
/// `ν_{i,j} = 1/μ_{i,j}²`) to map `𝔭` into `𝔨`, i.e. all diagonal block
/// components `P_k` equal; the recursion
/// `P_{k+1} = P_k + ((k−1)/k)(ν_{i,k} − ν_{i,k−1})` then forces all `μ_{i,j}`
/// within a block to agree.  Returns the reduced pair or the first
/// violating index.
pub fn kowalski_form_reduction(
    s: &KowalskiSpace,
    mu1: &[Rational],
    mu2: &[Rational],
) -> Result<FormReduction> {
    let expect = |len: usize, got: usize, block: &str| -> Result<()> {
        if got != len {
            return Err(KowalskiError::FormInput(format!(
                "block {block} needs {len} coefficients, got {got}"
            )));
        }
        Ok(())
    };
    expect((s.p() - 1) as usize, mu1.len(), "n1")?;
    expect((s.q() - 1) as usize, mu2.len(), "n2")?;
    for mu in mu1.iter().chain(mu2) {
        if !mu.is_positive() {
            return Err(KowalskiError::FormInput(format!(
                "metric coefficients must be positive, got {mu}"
            )));
        }
    }

    for (block, mus) in [(1usize, mu1), (2usize, mu2)] {
        let m = mus.len();
        let nu: Vec<Rational> = mus.iter().map(|mu| rat(1, 1) / (mu * mu)).collect();
        // P_k = Σ_j ν_j · (k-th component of C_{𝔫_{block,j}}), k = 1..=m+1.
        let component = |k: usize| -> Rational {
            (1..=m)
                .map(|j| &nu[j - 1] * &summand_casimir_component(j, k))
                .sum()
        };
        let mut prev = component(1);
        for k in 2..=m + 1 {
            let cur = component(k);
            if cur != prev {
                // P_k ≠ P_{k−1} pinpoints ν_{k−1} ≠ ν_{k−2}.
                return Ok(FormReduction::Violation {
                    block,
                    index: k - 2,
                });
            }
            prev = cur;
        }
    }
    Ok(FormReduction::Reduced {
        mu1: mu1.first().cloned().unwrap_or_else(|| rat(1, 1)),
        mu2: mu2.first().cloned().unwrap_or_else(|| rat(1, 1)),
    })
}
