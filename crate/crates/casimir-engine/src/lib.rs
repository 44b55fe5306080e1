//! Casimir eigenvalues on isotropy modules via root-system combinatorics.
//!
//! Two complementary routes are implemented:
//! * `casimir_on_root`: the string formula `b^φ = ½ Σ_{α∈S⁺} d_{αφ}|α|²`,
//!   summed over the positive half of a negation-closed subset `S`, with the
//!   d-coefficient `d = q − p − 2pq` folding in both signs of α.
//! * `gamma_eigenvalue`: the dual-Coxeter formula `γ = h*(k)/(δ·h*(g))` for
//!   the Casimir of a maximal-rank symmetric subalgebra on its complement.
//!
//! Both are exact; the `numeric-oracle` crate independently arbitrates them
//! in floating point on small-rank instances.

use exact_numerics::{rat, Rational};
use num_traits::Zero;
use root_systems::{d_coefficient, Family, LieFamily, Root, RootSubset, RootSystem};
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum CasimirError {
    #[error("phi {0} lies inside the summing subset {1}")]
    PhiInsideSubset(Root, String),
    #[error(transparent)]
    RootSystem(#[from] root_systems::RootSystemError),
    #[error("delta {delta} inconsistent with the length structure of {g:?}")]
    InvalidDelta { g: Family, delta: u32 },
    #[error(
        "subset {subset}: eigenvalue not constant: {value_a} on {root_a} vs {value_b} on {root_b}"
    )]
    NotScalar {
        subset: String,
        root_a: Root,
        value_a: Rational,
        root_b: Root,
        value_b: Rational,
    },
}

pub type Result<T> = std::result::Result<T, CasimirError>;

/// The dual Coxeter numbers, one entry per family.
pub fn dual_coxeter_table() -> Vec<(&'static str, LieFamily, u64)> {
    vec![
        ("A_n", LieFamily::su(6), 6),
        ("B_n", LieFamily::so_odd(11), 9),
        ("C_n", LieFamily::sp(5), 6),
        ("D_n", LieFamily::so_even(12), 10),
        ("E6", LieFamily::e6(), 12),
        ("E7", LieFamily::e7(), 18),
        ("E8", LieFamily::e8(), 30),
        ("F4", LieFamily::f4(), 9),
        ("G2", LieFamily::g2(), 4),
    ]
}

/// Casimir eigenvalue of the module spanned by the root spaces of `subset`
/// acting on the root space of `phi`:
///
/// `b^φ = ½ Σ_{α ∈ subset⁺} d_{αφ} · |α|²`.
///
/// `phi` must lie outside the subset; the subset must be negation-closed
/// (guaranteed by `RootSubset`).
pub fn casimir_on_root(sys: &RootSystem, subset: &RootSubset, phi: &Root) -> Result<Rational> {
    if subset.contains(phi) {
        return Err(CasimirError::PhiInsideSubset(
            phi.clone(),
            subset.name().to_string(),
        ));
    }
    let mut acc = Rational::zero();
    for alpha in subset.positive() {
        let (p, q) = sys.root_string(phi, alpha)?;
        let d = d_coefficient(p, q);
        if d != 0 {
            acc += sys.norm2(alpha) * Rational::from(num_bigint::BigInt::from(d));
        }
    }
    Ok(acc * rat(1, 2))
}

/// Casimir eigenvalue on the root space of `phi` of a maximal-rank
/// subalgebra containing the full Cartan plus the root spaces of `subset`:
/// the Cartan contributes `|φ|²` on top of the string sum.
pub fn casimir_with_cartan(
    sys: &RootSystem,
    subset: &RootSubset,
    phi: &Root,
) -> Result<Rational> {
    Ok(sys.norm2(phi) + casimir_on_root(sys, subset, phi)?)
}

/// Casimir eigenvalue of the subalgebra spanned by the Cartan directions of
/// `subset` and its root spaces, acting on its *own* root space `phi` (the
/// adjoint action):
///
/// `2|φ|² + ½ Σ_{α ∈ subset⁺, α ≠ ±φ} d_{αφ}|α|²`.
///
/// The `±φ` pair contributes `|φ|²` on top of the Cartan term.  For a simple
/// ideal `k_a` of a maximal-rank subalgebra this evaluates `γ_a`, the
/// eigenvalue of `C_{k_a}` on any fiber summand inside `k_a`.
pub fn casimir_adjoint(sys: &RootSystem, subset: &RootSubset, phi: &Root) -> Result<Rational> {
    if !subset.contains(phi) {
        return Err(CasimirError::PhiInsideSubset(
            phi.clone(),
            format!("complement of {}", subset.name()),
        ));
    }
    let mut acc = Rational::zero();
    for alpha in subset.positive() {
        if alpha == phi || *alpha == -phi.clone() {
            continue;
        }
        let (p, q) = sys.root_string(phi, alpha)?;
        let d = d_coefficient(p, q);
        if d != 0 {
            acc += sys.norm2(alpha) * Rational::from(num_bigint::BigInt::from(d));
        }
    }
    Ok(acc * rat(1, 2) + sys.norm2(phi) * rat(2, 1))
}

/// Is every root of the family the same length?
pub fn is_simply_laced(f: &LieFamily) -> bool {
    matches!(
        f.family,
        Family::A | Family::D | Family::E6 | Family::E7 | Family::E8
    )
}

/// Squared ratio of long to short root lengths.
pub fn length_ratio(f: &LieFamily) -> u32 {
    match f.family {
        Family::B | Family::C | Family::F4 => 2,
        Family::G2 => 3,
        _ => 1,
    }
}

/// `γ = h*(k)/(δ·h*(g))`: the Casimir eigenvalue of a simple ideal `k` of a
/// maximal-rank symmetric subalgebra on its isotropy complement.
///
/// `delta` accounts for the index of the restricted root lengths: it must be
/// 1 when `g` is simply laced (or the embedding preserves the two-length
/// structure) and may otherwise equal the length ratio of `g`.
pub fn gamma_eigenvalue(g: &LieFamily, k: &LieFamily, delta: u32) -> Result<Rational> {
    let allowed = delta == 1 || delta == length_ratio(g);
    if !allowed || delta == 0 {
        return Err(CasimirError::InvalidDelta {
            g: g.family,
            delta,
        });
    }
    Ok(rat(
        k.dual_coxeter() as i64,
        (u64::from(delta) * g.dual_coxeter()) as i64,
    ))
}

/// The complete exact eigenvalue data of one fibration `G/L → G/K`: the
/// input consumed by the Einstein solvers.
///
/// Indices: `a` runs over fiber summands (`s = gamma.len()`), `j` over
/// horizontal summands.  For symmetric fibers `c_{l,a} = γ_a/2`, and on
/// symmetric bases `c_{k,j} = 1/2` for every `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueReport {
    /// Identifier of the fibration (catalog key).
    pub key: String,
    /// `γ_a`: eigenvalue of `C_{k_a}` on fiber summand `p_a`.
    pub gamma: Vec<Rational>,
    /// `c_{l,a}`: eigenvalue of `C_l` on `p_a`.
    pub c_l: Vec<Rational>,
    /// `b[a][j]`: eigenvalue of `C_{p_a}` on summand `n_j`, `None` when the
    /// operator is not scalar there.
    pub b: Vec<Vec<Option<Rational>>>,
    /// `c_{k,j}`: eigenvalue of `C_k` on `n_j`.
    pub c_k: Vec<Rational>,
    /// `c_{n_j,a} = |n_j|·b_a^{n_j} / |p_a|` (root counts on both sides).
    pub c_n: Vec<Vec<Rational>>,
    /// Whether `C_{p_a}` takes one constant value on all of `n`.
    pub scalar_on_n: Vec<bool>,
    /// Root counts `|R_{p_a}|`.
    pub fiber_sizes: Vec<usize>,
    /// Root counts `|R_{n_j}|`.
    pub summand_sizes: Vec<usize>,
}

impl EigenvalueReport {
    /// Number of fiber summands.
    pub fn s(&self) -> usize {
        self.gamma.len()
    }

    /// Number of horizontal summands.
    pub fn n_count(&self) -> usize {
        self.c_k.len()
    }

    /// The constant value of `C_{p_a}` on `n`, if it is scalar there.
    pub fn b_scalar(&self, a: usize) -> Option<Rational> {
        if !self.scalar_on_n[a] {
            return None;
        }
        self.b[a][0].clone()
    }

    /// The common `c_{k,n}` when `C_k` is scalar on all of `n`.
    pub fn c_k_scalar(&self) -> Option<Rational> {
        let first = self.c_k.first()?;
        self.c_k.iter().all(|v| v == first).then(|| first.clone())
    }

    /// Sum `Σ_a b_a` of the scalar fiber eigenvalues (Type II binormal `b`).
    pub fn b_total(&self) -> Option<Rational> {
        let mut acc = Rational::zero();
        for a in 0..self.s() {
            acc += self.b_scalar(a)?;
        }
        Some(acc)
    }
}

/// Per-summand scalar-eigenvalue report for the horizontal space.
#[derive(Debug, Clone)]
pub struct ScalarCheck {
    /// `per_summand[j][a]` = the constant value `b_a^{φ}` on summand `j`.
    pub per_summand: Vec<Vec<Rational>>,
    /// Whether positive `λ_a` exist with `Σ_a λ_a (b_a^{φ_1} − b_a^{φ_2}) = 0`
    /// for every pair of horizontal roots.
    pub exists_positive_combination: bool,
}

/// Computes `b_a^φ` for every root of every horizontal summand, verifying
/// constancy on each summand, and decides the positive-combination
/// condition (solved exactly; the catalog only needs `s ≤ 2` fibers).
pub fn scalar_check(
    sys: &RootSystem,
    fibers: &[RootSubset],
    summands: &[RootSubset],
) -> Result<ScalarCheck> {
    let mut per_summand = Vec::with_capacity(summands.len());
    for summand in summands {
        let mut values: Vec<Rational> = Vec::with_capacity(fibers.len());
        for fiber in fibers {
            let mut first: Option<(Root, Rational)> = None;
            for phi in summand.members() {
                let v = casimir_on_root(sys, fiber, phi)?;
                match &first {
                    None => first = Some((phi.clone(), v)),
                    Some((r0, v0)) => {
                        if v != *v0 {
                            return Err(CasimirError::NotScalar {
                                subset: format!("{} on {}", fiber.name(), summand.name()),
                                root_a: r0.clone(),
                                value_a: v0.clone(),
                                root_b: phi.clone(),
                                value_b: v,
                            });
                        }
                    }
                }
            }
            values.push(first.expect("summand must be non-empty").1);
        }
        per_summand.push(values);
    }
    let exists_positive_combination = positive_combination_exists(&per_summand);
    Ok(ScalarCheck {
        per_summand,
        exists_positive_combination,
    })
}

/// Decides whether positive `λ_a` exist with `Σ_a λ_a·d_a = 0` for every
/// difference vector `d` between two summands' eigenvalue tuples.
fn positive_combination_exists(per_summand: &[Vec<Rational>]) -> bool {
    let diffs: Vec<Vec<Rational>> = per_summand
        .iter()
        .flat_map(|x| {
            per_summand
                .iter()
                .map(|y| x.iter().zip(y).map(|(a, b)| a - b).collect::<Vec<_>>())
        })
        .filter(|d| d.iter().any(|v| !v.is_zero()))
        .collect();
    if diffs.is_empty() {
        return true;
    }
    let s = per_summand.first().map_or(0, Vec::len);
    match s {
        0 | 1 => false, // a single λ cannot kill a non-zero difference
        2 => {
            // λ₁d₁ + λ₂d₂ = 0 with λ > 0 requires d₁d₂ < 0 with one common
            // ratio across all difference vectors.
            let mut ratio: Option<Rational> = None;
            for d in &diffs {
                if d[0].is_zero() || d[1].is_zero() {
                    return false;
                }
                let r = -(&d[1] / &d[0]); // λ₁/λ₂
                if r <= Rational::zero() {
                    return false;
                }
                match &ratio {
                    None => ratio = Some(r),
                    Some(r0) if *r0 != r => return false,
                    _ => {}
                }
            }
            true
        }
        _ => unimplemented!("catalog fibers have at most two summands"),
    }
}
