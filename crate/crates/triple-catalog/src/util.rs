//! Root-set construction helpers shared by the family builders.

use exact_numerics::Rational;
use root_systems::{Root, RootSubset, RootSystem};

/// Symmetric closure of a generator list.
pub(crate) fn sym(name: &str, gens: Vec<Root>) -> RootSubset {
    RootSubset::symmetrized(name, gens)
}

/// `e_i − e_j` for `i` and `j` over inclusive ranges (empty ranges allowed).
pub(crate) fn em_block(d: usize, is: (usize, usize), js: (usize, usize)) -> Vec<Root> {
    let mut out = Vec::new();
    for i in is.0..=is.1.min(d) {
        for j in js.0..=js.1.min(d) {
            out.push(Root::e_minus_e(d, i, j));
        }
    }
    out
}

/// `e_i + e_j` over two disjoint inclusive ranges.
pub(crate) fn ep_block(d: usize, is: (usize, usize), js: (usize, usize)) -> Vec<Root> {
    let mut out = Vec::new();
    for i in is.0..=is.1.min(d) {
        for j in js.0..=js.1.min(d) {
            out.push(Root::e_plus_e(d, i, j));
        }
    }
    out
}

/// Both `e_i − e_j` and `e_i + e_j` over two disjoint inclusive ranges.
pub(crate) fn pm_block(d: usize, is: (usize, usize), js: (usize, usize)) -> Vec<Root> {
    let mut out = em_block(d, is, js);
    out.extend(ep_block(d, is, js));
    out
}

/// `e_i − e_j` for `i < j` inside one inclusive range.
pub(crate) fn minus_within(d: usize, r: (usize, usize)) -> Vec<Root> {
    let mut out = Vec::new();
    for i in r.0..=r.1.min(d) {
        for j in (i + 1)..=r.1.min(d) {
            out.push(Root::e_minus_e(d, i, j));
        }
    }
    out
}

/// `e_i + e_j` for `i < j` inside one inclusive range.
pub(crate) fn plus_within(d: usize, r: (usize, usize)) -> Vec<Root> {
    let mut out = Vec::new();
    for i in r.0..=r.1.min(d) {
        for j in (i + 1)..=r.1.min(d) {
            out.push(Root::e_plus_e(d, i, j));
        }
    }
    out
}

/// `e_i ± e_j` for `i < j` inside one inclusive range.
pub(crate) fn both_within(d: usize, r: (usize, usize)) -> Vec<Root> {
    let mut out = minus_within(d, r);
    out.extend(plus_within(d, r));
    out
}

/// `e_i` over an inclusive range.
pub(crate) fn shorts(d: usize, r: (usize, usize)) -> Vec<Root> {
    (r.0..=r.1.min(d)).map(|i| Root::e(d, i, 1)).collect()
}

/// `2e_i` over an inclusive range.
pub(crate) fn longs(d: usize, r: (usize, usize)) -> Vec<Root> {
    (r.0..=r.1.min(d)).map(|i| Root::e(d, i, 2)).collect()
}

/// Filters the full root list by a (negation-invariant) predicate.
pub(crate) fn filter_roots(
    sys: &RootSystem,
    name: &str,
    f: impl Fn(&Root) -> bool,
) -> RootSubset {
    RootSubset::new(name, sys.roots().iter().filter(|r| f(r)).cloned())
        .expect("predicate must be negation-invariant")
}

/// Sorted, deduplicated copy of a value list (for table rows).
pub(crate) fn distinct(values: &[Rational]) -> Vec<Rational> {
    let mut v = values.to_vec();
    v.sort();
    v.dedup();
    v
}

/// Drops empty summands together with their published `b` columns.
pub(crate) fn prune(
    summands: Vec<RootSubset>,
    b: Vec<Vec<Rational>>,
) -> (Vec<RootSubset>, Vec<Vec<Rational>>) {
    let keep: Vec<bool> = summands.iter().map(|s| !s.is_empty()).collect();
    let summands = summands
        .into_iter()
        .zip(&keep)
        .filter_map(|(s, &k)| k.then_some(s))
        .collect();
    let b = b
        .into_iter()
        .map(|row| {
            row.into_iter()
                .zip(&keep)
                .filter_map(|(v, &k)| k.then_some(v))
                .collect()
        })
        .collect();
    (summands, b)
}
