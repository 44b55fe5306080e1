//! Recomputation of every catalog eigenvalue from root strings, plus the
//! structural identities that certify the computation:
//!
//! * `C_k = 1/2` on every horizontal root (symmetric-pair identity),
//! * `γ_a + Σ_j c_{n_j,a} = 1` with `c_{n_j,a} = Σ_{φ∈n_j⁺} b_a^φ / |R_{p_a}⁺|`
//!   (the trace of `C_{k_a}` over `k_a ⊕ n` equals `dim k_a`).

use crate::{Instance, Result};
use casimir_engine::{casimir_adjoint, casimir_on_root, casimir_with_cartan};
use exact_numerics::{rat, Rational};
use num_traits::{One, Zero};
use root_systems::{Root, RootSubset, RootSystem};
use std::collections::BTreeMap;

/// Distinct eigenvalues with multiplicities (root counts), largest value
/// first.  A scalar module yields a single cluster.
pub type Clusters = Vec<(Rational, usize)>;

/// A disagreement between the recomputed value and a tabulated one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    /// Instance key, e.g. `cpg22`.
    pub key: String,
    /// Which entry disagrees: `gamma[a]`, `b[a][j]`, or `b_table[a]`.
    pub site: String,
    pub published: String,
    pub computed: String,
}

/// Full recomputation report for one instance.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub key: String,
    /// `gamma[a]`: adjoint-Casimir clusters of ideal `a` over fiber `a`.
    pub gamma: Vec<Clusters>,
    /// `b[a][j]`: string-formula clusters of fiber `a` on summand `j`.
    pub b: Vec<Vec<Clusters>>,
    /// `C_k = 1/2` held on every horizontal root.
    pub c_k_is_half: bool,
    /// `γ_a + Σ_j c_{n_j,a} = 1` per fiber (requires scalar `γ_a`).
    pub gamma_identity: Vec<bool>,
    pub discrepancies: Vec<Discrepancy>,
}

fn cluster<I: IntoIterator<Item = Rational>>(values: I) -> Clusters {
    let mut map: BTreeMap<Rational, usize> = BTreeMap::new();
    for v in values {
        *map.entry(v).or_insert(0) += 1;
    }
    map.into_iter().rev().collect()
}

fn show_clusters(c: &Clusters) -> String {
    if c.len() == 1 {
        format!("{}", c[0].0)
    } else {
        let parts: Vec<String> = c.iter().map(|(v, m)| format!("{v} (×{m})")).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

fn eval_b(sys: &RootSystem, fiber: &RootSubset, summand: &RootSubset) -> Result<Clusters> {
    let mut values = Vec::with_capacity(summand.len());
    for phi in summand.members() {
        values.push(casimir_on_root(sys, fiber, phi)?);
    }
    Ok(cluster(values))
}

fn eval_gamma(sys: &RootSystem, ideal: &RootSubset, fiber: &RootSubset) -> Result<Clusters> {
    let mut values = Vec::with_capacity(fiber.len());
    for phi in fiber.members() {
        values.push(casimir_adjoint(sys, ideal, phi)?);
    }
    Ok(cluster(values))
}

/// Recomputes every eigenvalue of `inst` and compares against the tabulated
/// data, reporting per-entry discrepancies.
pub fn evaluate(inst: &Instance) -> Result<Evaluation> {
    let sys = &inst.system;
    let mut discrepancies = Vec::new();
    let mut push = |site: String, published: String, computed: String| {
        discrepancies.push(Discrepancy {
            key: inst.key.clone(),
            site,
            published,
            computed,
        });
    };

    // γ_a from the adjoint Casimir of the ideal.
    let mut gamma = Vec::new();
    for (a, (ideal, fiber)) in inst.ideals.iter().zip(&inst.fibers).enumerate() {
        let cl = eval_gamma(sys, ideal, fiber)?;
        let tab = &inst.published.gamma_table[a];
        if cl.len() != 1 || cl[0].0 != *tab {
            push(format!("gamma[{a}]"), format!("{tab}"), show_clusters(&cl));
        }
        gamma.push(cl);
    }

    // b_a^{n_j} from the string formula, root by root.
    let mut b = Vec::new();
    for (a, fiber) in inst.fibers.iter().enumerate() {
        let mut row = Vec::new();
        let mut seen: Vec<Rational> = Vec::new();
        for (j, summand) in inst.summands.iter().enumerate() {
            let cl = eval_b(sys, fiber, summand)?;
            let pub_v = &inst.published.b[a][j];
            if cl.len() != 1 || cl[0].0 != *pub_v {
                push(format!("b[{a}][{j}]"), format!("{pub_v}"), show_clusters(&cl));
            }
            for (v, _) in &cl {
                seen.push(v.clone());
            }
            row.push(cl);
        }
        seen.sort();
        seen.dedup();
        if seen != inst.published.b_table[a] {
            let fmt = |vs: &[Rational]| {
                let parts: Vec<String> = vs.iter().map(|v| format!("{v}")).collect();
                format!("{{{}}}", parts.join(", "))
            };
            push(
                format!("b_table[{a}]"),
                fmt(&inst.published.b_table[a]),
                fmt(&seen),
            );
        }
        b.push(row);
    }

    // C_k = 1/2 on every horizontal root.
    let half = rat(1, 2);
    let mut c_k_is_half = true;
    for summand in &inst.summands {
        for phi in summand.members() {
            if casimir_with_cartan(sys, &inst.r_k, phi)? != half {
                c_k_is_half = false;
            }
        }
    }

    // γ_a + Σ_j c_{n_j,a} = 1.
    let mut gamma_identity = Vec::new();
    for (a, fiber) in inst.fibers.iter().enumerate() {
        if gamma[a].len() != 1 {
            gamma_identity.push(false);
            continue;
        }
        let mut total = gamma[a][0].0.clone();
        let fiber_len = rat(fiber.len() as i64, 1);
        for row in &b[a] {
            let mut sum = Rational::zero();
            for (v, m) in row {
                sum += v * rat(*m as i64, 1);
            }
            total += sum / &fiber_len;
        }
        gamma_identity.push(total.is_one());
    }

    Ok(Evaluation {
        key: inst.key.clone(),
        gamma,
        b,
        c_k_is_half,
        gamma_identity,
        discrepancies,
    })
}

/// Scalar recomputed `b` values per (fiber, summand); errs if a module is
/// not scalar.  Convenience for feeding solvers.
pub fn scalar_b(ev: &Evaluation) -> Option<Vec<Vec<Rational>>> {
    ev.b
        .iter()
        .map(|row| {
            row.iter()
                .map(|cl| (cl.len() == 1).then(|| cl[0].0.clone()))
                .collect()
        })
        .collect()
}

/// The recomputed value of `b_a^φ` for a single root (exposed for spot
/// checks and oracle comparisons).
pub fn b_on_root(inst: &Instance, fiber_index: usize, phi: &Root) -> Result<Rational> {
    Ok(casimir_on_root(&inst.system, &inst.fibers[fiber_index], phi)?)
}
