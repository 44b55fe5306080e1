//! Exact Chevalley structure constants `N_{α,β}` with signs derived from
//! extraspecial pairs.
//!
//! Positive roots are ordered by height (then lexicographically).  For each
//! non-simple positive root γ the *extraspecial* pair is the decomposition
//! γ = α + β with α minimal; its constant is fixed to `+(p+1)` where `p` is
//! the down-length of the α-string through β.  Every other constant follows
//! from the standard three- and four-root identities
//!
//! * `α+β+δ = 0` ⟹ `N_{α,β}/(δ,δ) = N_{β,δ}/(α,α) = N_{δ,α}/(β,β)`;
//! * `α+β+δ+η = 0` (no two opposite) ⟹
//!   `Σ_cyc N_{α,β}N_{δ,η}/(α+β, α+β) = 0`.
//!
//! Consistency is not assumed: magnitudes are asserted to equal `p+1`
//! exactly, and the compact form built on top validates the Jacobi identity
//! numerically.

use exact_numerics::Rational;
use num_traits::Zero;
use root_systems::{Root, RootSystem};
use std::collections::HashMap;

/// Structure-constant table over a fixed root system.
pub struct Chevalley {
    /// Positive roots in (height, lex) order.
    pub positives: Vec<Root>,
    table: HashMap<(Root, Root), Rational>,
}

fn height(sys: &RootSystem, r: &Root) -> i64 {
    sys.express_in_simples(r)
        .expect("every root decomposes over the simple roots")
        .iter()
        .sum()
}

impl Chevalley {
    pub fn build(sys: &RootSystem) -> Self {
        let mut positives: Vec<Root> = sys.positive_roots().cloned().collect();
        let mut heights: HashMap<Root, i64> = HashMap::new();
        for r in &positives {
            heights.insert(r.clone(), height(sys, r));
        }
        positives.sort_by(|a, b| (heights[a], a.clone()).cmp(&(heights[b], b.clone())));
        let order: HashMap<Root, usize> = positives
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let mut this = Self {
            positives: positives.clone(),
            table: HashMap::new(),
        };

        for gamma in &positives {
            // All decompositions γ = α + β into positive roots, as unordered
            // pairs keyed by the smaller member.
            let mut pairs: Vec<(Root, Root)> = Vec::new();
            for alpha in &positives {
                let beta = gamma - alpha;
                if beta.is_lex_positive() && sys.contains(&beta) && order[alpha] < order[&beta] {
                    pairs.push((alpha.clone(), beta));
                }
            }
            pairs.sort_by_key(|(a, _)| order[a]);
            let Some((xa, xb)) = pairs.first().cloned() else {
                continue; // simple root
            };
            // Extraspecial pair: sign +, magnitude p+1.
            let v = Rational::from(num_bigint::BigInt::from(this.string_down(sys, &xa, &xb) + 1));
            this.insert(&xa, &xb, v);
            for (alpha, beta) in pairs.iter().skip(1) {
                let v = this.derive(sys, &xa, &xb, alpha, beta, gamma);
                let expect = this.string_down(sys, alpha, beta) + 1;
                assert_eq!(
                    v.clone() * v.clone(),
                    Rational::from(num_bigint::BigInt::from(expect * expect)),
                    "derived |N| must equal p+1 for {alpha} + {beta}"
                );
                this.insert(alpha, beta, v);
            }
        }
        this
    }

    /// Down-length `p` of the α-string through β: max k with β − kα a root.
    fn string_down(&self, sys: &RootSystem, alpha: &Root, beta: &Root) -> i64 {
        let mut p = 0;
        while sys.contains(&beta.add_multiple(alpha, -(p + 1))) {
            p += 1;
        }
        p
    }

    fn insert(&mut self, a: &Root, b: &Root, v: Rational) {
        let prev = self.table.insert((a.clone(), b.clone()), v.clone());
        assert!(prev.is_none(), "duplicate structure constant");
        self.table.insert((b.clone(), a.clone()), -v);
    }

    /// Four-root identity on (α₁, β₁, −α, −β) with (α₁, β₁) extraspecial:
    /// solves for N_{α,β}.
    fn derive(
        &self,
        sys: &RootSystem,
        a1: &Root,
        b1: &Root,
        alpha: &Root,
        beta: &Root,
        gamma: &Root,
    ) -> Rational {
        let mut sum = Rational::zero();
        let t = b1 - alpha; // β₁ − α; the paired root is α₁ − β = −t
        if sys.contains(&t) {
            let x = self.n(sys, b1, &(-alpha.clone()));
            let y = self.n(sys, a1, &(-beta.clone()));
            sum += x * y / t.euclid_norm2();
        }
        let u = a1 - alpha; // α₁ − α; the paired root is β₁ − β = −u
        if sys.contains(&u) {
            let x = self.n(sys, &(-alpha.clone()), a1);
            let y = self.n(sys, b1, &(-beta.clone()));
            sum += x * y / u.euclid_norm2();
        }
        let n11 = self.n(sys, a1, b1);
        gamma.euclid_norm2() * sum / n11
    }

    /// `N_{a,b}` for arbitrary roots with `a + b` a root.
    pub fn n(&self, sys: &RootSystem, a: &Root, b: &Root) -> Rational {
        let s = a + b;
        debug_assert!(sys.contains(&s), "sum must be a root");
        let ap = a.is_lex_positive();
        let bp = b.is_lex_positive();
        if ap && bp {
            return self.table[&(a.clone(), b.clone())].clone();
        }
        if !ap && !bp {
            return -self.n(sys, &-a.clone(), &-b.clone());
        }
        if !ap {
            // Reduce (a<0, b>0) to the mirrored case.
            return -self.n(sys, b, a);
        }
        // a > 0, b < 0.  Triple (a, b, −s): N_{a,b}/(s,s) = N_{b,−s}/(a,a)
        //                                              = N_{−s,a}/(b,b).
        if s.is_lex_positive() {
            let v = -self.n(sys, &-b.clone(), &s); // N_{b,−s} = −N_{−b,s}
            s.euclid_norm2() * v / a.euclid_norm2()
        } else {
            let v = self.n(sys, &-s.clone(), a);
            s.euclid_norm2() * v / b.euclid_norm2()
        }
    }

    /// `N_{a,b}` as a float, zero when `a+b` is not a root.
    pub fn n_f64(&self, sys: &RootSystem, a: &Root, b: &Root) -> f64 {
        let s = a + b;
        if !sys.contains(&s) {
            return 0.0;
        }
        num_traits::ToPrimitive::to_f64(&self.n(sys, a, b)).unwrap()
    }
}
