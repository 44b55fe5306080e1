//! The assembled root system with Killing-normalized lengths.

use crate::build::{enumerate_roots, killing_factor};
use crate::{LieFamily, Result, Root, RootSystemError};
use exact_numerics::Rational;
use std::collections::HashSet;

/// A full root system: root set, length table, and positivity convention.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: LieFamily,
    roots: Vec<Root>,
    set: HashSet<Root>,
    kappa: Rational,
}

impl RootSystem {
    /// Enumerates the full root set of `family` and fixes the
    /// Killing-normalized length table.
    pub fn build(family: LieFamily) -> Self {
        let mut roots = enumerate_roots(&family);
        roots.sort();
        roots.dedup();
        assert_eq!(
            roots.len(),
            family.root_count(),
            "root count mismatch for {family:?}"
        );
        let set: HashSet<Root> = roots.iter().cloned().collect();
        let kappa = killing_factor(&family);
        let sys = Self {
            family,
            roots,
            set,
            kappa,
        };
        sys.validate();
        sys
    }

    fn validate(&self) {
        // Negation closure, and at most two length classes with the
        // Killing normalization pinned by the dual Coxeter number.
        let mut lengths: Vec<Rational> = Vec::new();
        for r in &self.roots {
            assert!(self.set.contains(&-r), "negation closure violated");
            let l = self.norm2(r);
            if !lengths.contains(&l) {
                lengths.push(l);
            }
        }
        assert!(lengths.len() <= 2, "more than two root lengths");
        let long = lengths.iter().max().unwrap().clone();
        let hstar = Rational::new(1.into(), self.family.dual_coxeter().into());
        assert_eq!(long, hstar, "|θ|² must equal 1/h*");
    }

    pub fn family(&self) -> &LieFamily {
        &self.family
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.set.contains(r)
    }

    pub fn check_root(&self, r: &Root) -> Result<()> {
        if self.contains(r) {
            Ok(())
        } else {
            Err(RootSystemError::NotARoot(r.clone()))
        }
    }

    /// Killing-normalized squared length `|α|²`.
    pub fn norm2(&self, r: &Root) -> Rational {
        r.euclid_norm2() * &self.kappa
    }

    /// Killing-normalized inner product `(α, β)`.
    pub fn inner(&self, a: &Root, b: &Root) -> Rational {
        a.dot(b) * &self.kappa
    }

    /// The positive roots under the lexicographic convention.
    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_lex_positive())
    }

    /// The α-series through φ: maximal `p ≤ 0 ≤ q` with `φ + nα` a root for
    /// every `p ≤ n ≤ q`.  Refuses `φ = ±α` (the series along a root's own
    /// line is never evaluated).
    pub fn root_string(&self, phi: &Root, alpha: &Root) -> Result<(i32, i32)> {
        self.check_root(phi)?;
        self.check_root(alpha)?;
        if phi == alpha || *phi == -alpha {
            return Err(RootSystemError::StringAlongSelf(phi.clone()));
        }
        let mut p = 0i32;
        while self.contains(&phi.add_multiple(alpha, i64::from(p) - 1)) {
            p -= 1;
        }
        let mut q = 0i32;
        while self.contains(&phi.add_multiple(alpha, i64::from(q) + 1)) {
            q += 1;
        }
        Ok((p, q))
    }

    /// The simple roots of the positive system: indecomposable positives.
    pub fn simple_roots(&self) -> Vec<Root> {
        let positives: Vec<&Root> = self.positive_roots().collect();
        let pos_set: HashSet<&Root> = positives.iter().copied().collect();
        positives
            .iter()
            .filter(|&&r| {
                !positives.iter().any(|&a| {
                    let b = r - a;
                    !b.is_zero() && b.is_lex_positive() && pos_set.contains(&b)
                })
            })
            .map(|&r| r.clone())
            .collect()
    }

    /// Expresses a root as an integer combination of the simple roots.
    pub fn express_in_simples(&self, r: &Root) -> Option<Vec<i64>> {
        let simples = self.simple_roots();
        express(&simples, r)
    }
}

/// Solves `Σ c_k s_k = r` exactly over the rationals and returns integer
/// coefficients when they exist.
fn express(simples: &[Root], r: &Root) -> Option<Vec<i64>> {
    let rows = r.dim();
    let cols = simples.len();
    // Build the augmented matrix over doubled coordinates (all integers).
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = simples
                .iter()
                .map(|s| Rational::from(num_bigint::BigInt::from(s.doubled()[i])))
                .collect();
            row.push(Rational::from(num_bigint::BigInt::from(r.doubled()[i])));
            row
        })
        .collect();
    // Gaussian elimination.
    let mut pivot_rows = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !num_traits::Zero::is_zero(&m[i][col])) else {
            pivot_rows.push(None);
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != row && !num_traits::Zero::is_zero(&m[i][col]) {
                let f = m[i][col].clone();
                for k in 0..=cols {
                    let delta = &m[row][k] * &f;
                    m[i][k] -= delta;
                }
            }
        }
        pivot_rows.push(Some(row));
        row += 1;
    }
    // Consistency: remaining rows must be zero.
    for i in row..rows {
        if !num_traits::Zero::is_zero(&m[i][cols]) {
            return None;
        }
    }
    let mut out = Vec::with_capacity(cols);
    for (col, piv) in pivot_rows.iter().enumerate() {
        let v = match piv {
            Some(i) => m[*i][cols].clone(),
            None => Rational::from(num_bigint::BigInt::from(0)),
        };
        if !num_traits::Zero::is_zero(&(v.denom() - num_bigint::BigInt::from(1))) {
            return None;
        }
        let _ = col;
        out.push(i64::try_from(v.numer().clone()).ok()?);
    }
    Some(out)
}
