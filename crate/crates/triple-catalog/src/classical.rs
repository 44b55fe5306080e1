//! Catalog builders for the classical ambient families
//! `su_n`, `so_{2n+1}`, `sp_n`, `so_{2n}`.
//!
//! Index conventions follow the tables: the first factor of `k` occupies
//! coordinate indices `1..=p`, the second `p+1..=n`; the splitting of a
//! factor into `l` (or `s`) plus its complement refines the same ranges.

use crate::util::*;
use crate::{CatalogError, Instance, Params, Published, Result};
use exact_numerics::{rat, Rational};
use root_systems::{LieFamily, RootSubset, RootSystem};

fn need(cond: bool, label: &str, reason: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(CatalogError::BadParams {
            label: label.to_string(),
            reason: reason.to_string(),
        })
    }
}

fn published_plain(gamma: Vec<Rational>, b: Vec<Vec<Rational>>) -> Published {
    Published {
        gamma_table: gamma.clone(),
        b_table: b.iter().map(|row| distinct(row)).collect(),
        gamma,
        b,
    }
}

// ---------------------------------------------------------------------------
// A family: g = su_n.
// ---------------------------------------------------------------------------

/// `(su_n, su_p ⊕ su_{n−p} ⊕ ℝ, su_l ⊕ su_{p−l} ⊕ su_{n−p} ⊕ ℝ²)`.
pub fn cpan1(n: usize, p: usize, l: usize) -> Result<Instance> {
    need(n >= 3 && (2..n).contains(&p) && (1..p).contains(&l), "cpan1", "need 2 ≤ p ≤ n−1 and 1 ≤ l ≤ p−1")?;
    let fam = LieFamily::su(n);
    let sys = RootSystem::build(fam);
    let d = n;
    let k1 = sym("R_k1", minus_within(d, (1, p)));
    let k2 = sym("R_k2", minus_within(d, (p + 1, n)));
    let r_k = k1.union("R_k", &k2)?;
    let fiber = sym("R_p", em_block(d, (1, l), (l + 1, p)));
    let n1 = sym("R_n1", em_block(d, (1, l), (p + 1, n)));
    let n2 = sym("R_n2", em_block(d, (l + 1, p), (p + 1, n)));
    let (ni, pi, li) = (n as i64, p as i64, l as i64);
    let gamma = vec![rat(pi, ni)];
    let b = vec![vec![rat(pi - li, 2 * ni), rat(li, 2 * ni)]];
    Instance::assemble(
        "cpan1",
        format!("(su_{n}, su_{p} ⊕ su_{} ⊕ ℝ, su_{l} ⊕ su_{} ⊕ su_{} ⊕ ℝ²)", n - p, p - l, n - p),
        fam,
        Params::npl(n, p, l),
        sys,
        r_k,
        vec![k1],
        vec![fiber],
        vec![n1, n2],
        published_plain(gamma, b),
    )
}

/// Mirror of `cpan1`: the second factor `su_{n−p}` is split by `s`.
pub fn cpan2(n: usize, p: usize, s: usize) -> Result<Instance> {
    need(n >= 3 && (1..n - 1).contains(&p) && (1..n - p).contains(&s), "cpan2", "need 1 ≤ p ≤ n−2 and 1 ≤ s ≤ n−p−1")?;
    let fam = LieFamily::su(n);
    let sys = RootSystem::build(fam);
    let d = n;
    let k1 = sym("R_k1", minus_within(d, (1, p)));
    let k2 = sym("R_k2", minus_within(d, (p + 1, n)));
    let r_k = k1.union("R_k", &k2)?;
    let fiber = sym("R_p", em_block(d, (p + 1, p + s), (p + s + 1, n)));
    let n1 = sym("R_n1", em_block(d, (1, p), (p + 1, p + s)));
    let n2 = sym("R_n2", em_block(d, (1, p), (p + s + 1, n)));
    let (ni, pi, si) = (n as i64, p as i64, s as i64);
    let gamma = vec![rat(ni - pi, ni)];
    let b = vec![vec![rat(ni - pi - si, 2 * ni), rat(si, 2 * ni)]];
    Instance::assemble(
        "cpan2",
        format!("(su_{n}, su_{p} ⊕ su_{} ⊕ ℝ, su_{p} ⊕ su_{s} ⊕ su_{} ⊕ ℝ²)", n - p, n - p - s),
        fam,
        Params::nps(n, p, s),
        sys,
        r_k,
        vec![k2],
        vec![fiber],
        vec![n1, n2],
        published_plain(gamma, b),
    )
}

/// Both factors split: fibers in `su_p` and `su_{n−p}` simultaneously.
pub fn cpan3(n: usize, p: usize, l: usize, s: usize) -> Result<Instance> {
    need(
        n >= 4 && (2..n - 1).contains(&p) && (1..p).contains(&l) && (1..n - p).contains(&s),
        "cpan3",
        "need 2 ≤ p ≤ n−2, 1 ≤ l ≤ p−1, 1 ≤ s ≤ n−p−1",
    )?;
    let fam = LieFamily::su(n);
    let sys = RootSystem::build(fam);
    let d = n;
    let k1 = sym("R_k1", minus_within(d, (1, p)));
    let k2 = sym("R_k2", minus_within(d, (p + 1, n)));
    let r_k = k1.union("R_k", &k2)?;
    let fiber1 = sym("R_p1", em_block(d, (1, l), (l + 1, p)));
    let fiber2 = sym("R_p2", em_block(d, (p + 1, p + s), (p + s + 1, n)));
    let s11 = sym("R_n11", em_block(d, (1, l), (p + 1, p + s)));
    let s12 = sym("R_n12", em_block(d, (1, l), (p + s + 1, n)));
    let s21 = sym("R_n21", em_block(d, (l + 1, p), (p + 1, p + s)));
    let s22 = sym("R_n22", em_block(d, (l + 1, p), (p + s + 1, n)));
    let (ni, pi, li, si) = (n as i64, p as i64, l as i64, s as i64);
    let gamma = vec![rat(pi, ni), rat(ni - pi, ni)];
    let b = vec![
        vec![rat(pi - li, 2 * ni), rat(pi - li, 2 * ni), rat(li, 2 * ni), rat(li, 2 * ni)],
        vec![rat(ni - pi - si, 2 * ni), rat(si, 2 * ni), rat(ni - pi - si, 2 * ni), rat(si, 2 * ni)],
    ];
    Instance::assemble(
        "cpan3",
        format!(
            "(su_{n}, su_{p} ⊕ su_{} ⊕ ℝ, su_{l} ⊕ su_{} ⊕ su_{s} ⊕ su_{} ⊕ ℝ³)",
            n - p,
            p - l,
            n - p - s
        ),
        fam,
        Params::npls(n, p, l, s),
        sys,
        r_k,
        vec![k1, k2],
        vec![fiber1, fiber2],
        vec![s11, s12, s21, s22],
        published_plain(gamma, b),
    )
}

// ---------------------------------------------------------------------------
// B family: g = so_{2n+1}, k = so_{2p+1} ⊕ so_{2(n−p)}.
// ---------------------------------------------------------------------------

fn b_ideals(d: usize, p: usize, n: usize) -> (RootSubset, RootSubset) {
    let mut g1 = shorts(d, (1, p));
    g1.extend(both_within(d, (1, p)));
    let k1 = sym("R_k1", g1);
    let k2 = sym("R_k2", both_within(d, (p + 1, n)));
    (k1, k2)
}

/// `(so_{2n+1}, so_{2p+1} ⊕ so_{2(n−p)}, so_{2l+1} ⊕ so_{2(p−l)} ⊕ so_{2(n−p)})`.
pub fn cpbn1(n: usize, p: usize, l: usize) -> Result<Instance> {
    need(n >= 2 && (1..n).contains(&p) && l < p, "cpbn1", "need 1 ≤ p ≤ n−1 and 0 ≤ l ≤ p−1")?;
    let fam = LieFamily::so_odd(2 * n + 1);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = b_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let mut fg = shorts(d, (l + 1, p));
    fg.extend(pm_block(d, (1, l), (l + 1, p)));
    let fiber = sym("R_p", fg);
    let mut n1g = shorts(d, (p + 1, n));
    n1g.extend(pm_block(d, (1, l), (p + 1, n)));
    let n1 = sym("R_n1", n1g);
    let n2 = sym("R_n2", pm_block(d, (l + 1, p), (p + 1, n)));
    let (ni, pi, li) = (n as i64, p as i64, l as i64);
    let gamma = vec![rat(2 * pi - 1, 2 * ni - 1)];
    let b = vec![vec![rat(pi - li, 2 * ni - 1), rat(4 * li + 1, 4 * (2 * ni - 1))]];
    Instance::assemble(
        "cpbn1",
        format!(
            "(so_{}, so_{} ⊕ so_{}, so_{} ⊕ so_{} ⊕ so_{})",
            2 * n + 1,
            2 * p + 1,
            2 * (n - p),
            2 * l + 1,
            2 * (p - l),
            2 * (n - p)
        ),
        fam,
        Params::npl(n, p, l),
        sys,
        r_k,
        vec![k1],
        vec![fiber],
        vec![n1, n2],
        published_plain(gamma, b),
    )
}

/// The even factor `so_{2(n−p)}` split as `so_{2s} ⊕ so_{2(n−p−s)}`.
pub fn cpbn2(n: usize, p: usize, s: usize) -> Result<Instance> {
    need(n >= 2 && p + 1 < n && (1..n - p).contains(&s), "cpbn2", "need 0 ≤ p ≤ n−2 and 1 ≤ s ≤ n−p−1")?;
    let fam = LieFamily::so_odd(2 * n + 1);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = b_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber = sym("R_p", pm_block(d, (p + 1, p + s), (p + s + 1, n)));
    let mut n1g = shorts(d, (p + 1, p + s));
    n1g.extend(pm_block(d, (1, p), (p + 1, p + s)));
    let n1 = sym("R_n1", n1g);
    let mut n2g = shorts(d, (p + s + 1, n));
    n2g.extend(pm_block(d, (1, p), (p + s + 1, n)));
    let n2 = sym("R_n2", n2g);
    let (ni, pi, si) = (n as i64, p as i64, s as i64);
    let gamma = vec![rat(2 * (ni - pi - 1), 2 * ni - 1)];
    let b = vec![vec![rat(ni - pi - si, 2 * ni - 1), rat(si, 2 * ni - 1)]];
    Instance::assemble(
        "cpbn2",
        format!(
            "(so_{}, so_{} ⊕ so_{}, so_{} ⊕ so_{} ⊕ so_{})",
            2 * n + 1,
            2 * p + 1,
            2 * (n - p),
            2 * p + 1,
            2 * s,
            2 * (n - p - s)
        ),
        fam,
        Params::nps(n, p, s),
        sys,
        r_k,
        vec![k2],
        vec![fiber],
        vec![n1, n2],
        published_plain(gamma, b),
    )
}

/// The even factor broken to its `u_{n−p}` subalgebra.
pub fn cpbn3(n: usize, p: usize) -> Result<Instance> {
    need(n >= 2 && p + 2 <= n, "cpbn3", "need 0 ≤ p ≤ n−2")?;
    let fam = LieFamily::so_odd(2 * n + 1);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = b_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber = sym("R_p", plus_within(d, (p + 1, n)));
    let mut ng = shorts(d, (p + 1, n));
    ng.extend(pm_block(d, (1, p), (p + 1, n)));
    let n1 = sym("R_n", ng);
    let (ni, pi) = (n as i64, p as i64);
    let gamma = vec![rat(2 * (ni - pi - 1), 2 * ni - 1)];
    let b = vec![vec![rat(ni - pi - 1, 2 * (2 * ni - 1))]];
    Instance::assemble(
        "cpbn3",
        format!(
            "(so_{}, so_{} ⊕ so_{}, so_{} ⊕ u_{})",
            2 * n + 1,
            2 * p + 1,
            2 * (n - p),
            2 * p + 1,
            n - p
        ),
        fam,
        Params::np(n, p),
        sys,
        r_k,
        vec![k2],
        vec![fiber],
        vec![n1],
        published_plain(gamma, b),
    )
}

/// Both factors fibered: `so_{2p+1}` split by `l`, `so_{2(n−p)}` to `u_{n−p}`.
pub fn cpbn4(n: usize, p: usize, l: usize) -> Result<Instance> {
    need(n >= 3 && (1..=n - 2).contains(&p) && l < p, "cpbn4", "need 1 ≤ p ≤ n−2 and 0 ≤ l ≤ p−1")?;
    let fam = LieFamily::so_odd(2 * n + 1);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = b_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let mut f1g = shorts(d, (l + 1, p));
    f1g.extend(pm_block(d, (1, l), (l + 1, p)));
    let fiber1 = sym("R_p1", f1g);
    let fiber2 = sym("R_p2", plus_within(d, (p + 1, n)));
    let mut n1g = shorts(d, (p + 1, n));
    n1g.extend(pm_block(d, (1, l), (p + 1, n)));
    let n1 = sym("R_n1", n1g);
    let n2 = sym("R_n2", pm_block(d, (l + 1, p), (p + 1, n)));
    let (ni, pi, li) = (n as i64, p as i64, l as i64);
    let gamma = vec![rat(2 * pi - 1, 2 * ni - 1), rat(2 * (ni - pi - 1), 2 * ni - 1)];
    let b2 = rat(ni - pi - 1, 2 * (2 * ni - 1));
    let b = vec![
        vec![rat(pi - li, 2 * ni - 1), rat(4 * li + 1, 4 * (2 * ni - 1))],
        vec![b2.clone(), b2],
    ];
    Instance::assemble(
        "cpbn4",
        format!(
            "(so_{}, so_{} ⊕ so_{}, so_{} ⊕ so_{} ⊕ u_{})",
            2 * n + 1,
            2 * p + 1,
            2 * (n - p),
            2 * l + 1,
            2 * (p - l),
            n - p
        ),
        fam,
        Params::npl(n, p, l),
        sys,
        r_k,
        vec![k1, k2],
        vec![fiber1, fiber2],
        vec![n1, n2],
        published_plain(gamma, b),
    )
}

/// Both factors fibered, each split into two summands (`l` and `s`).
pub fn cpbn5(n: usize, p: usize, l: usize, s: usize) -> Result<Instance> {
    need(
        n >= 3 && (1..=n - 2).contains(&p) && l < p && (1..n - p).contains(&s),
        "cpbn5",
        "need 1 ≤ p ≤ n−2, 0 ≤ l ≤ p−1, 1 ≤ s ≤ n−p−1",
    )?;
    let fam = LieFamily::so_odd(2 * n + 1);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = b_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let mut f1g = shorts(d, (l + 1, p));
    f1g.extend(pm_block(d, (1, l), (l + 1, p)));
    let fiber1 = sym("R_p1", f1g);
    let fiber2 = sym("R_p2", pm_block(d, (p + 1, p + s), (p + s + 1, n)));
    let mut s11g = shorts(d, (p + 1, p + s));
    s11g.extend(pm_block(d, (1, l), (p + 1, p + s)));
    let s11 = sym("R_n11", s11g);
    let mut s12g = shorts(d, (p + s + 1, n));
    s12g.extend(pm_block(d, (1, l), (p + s + 1, n)));
    let s12 = sym("R_n12", s12g);
    let s21 = sym("R_n21", pm_block(d, (l + 1, p), (p + 1, p + s)));
    let s22 = sym("R_n22", pm_block(d, (l + 1, p), (p + s + 1, n)));
    let (ni, pi, li, si) = (n as i64, p as i64, l as i64, s as i64);
    let gamma = vec![rat(2 * pi - 1, 2 * ni - 1), rat(2 * (ni - pi - 1), 2 * ni - 1)];
    let bl = rat(4 * li + 1, 4 * (2 * ni - 1));
    let b = vec![
        vec![rat(pi - li, 2 * ni - 1), rat(pi - li, 2 * ni - 1), bl.clone(), bl],
        vec![
            rat(ni - pi - si, 2 * ni - 1),
            rat(si, 2 * ni - 1),
            rat(ni - pi - si, 2 * ni - 1),
            rat(si, 2 * ni - 1),
        ],
    ];
    Instance::assemble(
        "cpbn5",
        format!(
            "(so_{}, so_{} ⊕ so_{}, so_{} ⊕ so_{} ⊕ so_{} ⊕ so_{})",
            2 * n + 1,
            2 * p + 1,
            2 * (n - p),
            2 * l + 1,
            2 * (p - l),
            2 * s,
            2 * (n - p - s)
        ),
        fam,
        Params::npls(n, p, l, s),
        sys,
        r_k,
        vec![k1, k2],
        vec![fiber1, fiber2],
        vec![s11, s12, s21, s22],
        published_plain(gamma, b),
    )
}

// ---------------------------------------------------------------------------
// C family: g = sp_n.
// ---------------------------------------------------------------------------

fn c_ideals(d: usize, p: usize, n: usize) -> (RootSubset, RootSubset) {
    let mut g1 = longs(d, (1, p));
    g1.extend(both_within(d, (1, p)));
    let k1 = sym("R_k1", g1);
    let mut g2 = longs(d, (p + 1, n));
    g2.extend(both_within(d, (p + 1, n)));
    let k2 = sym("R_k2", g2);
    (k1, k2)
}

/// `(sp_n, u_n, u_p ⊕ u_{n−p})`.
///
/// The per-summand `b` follow the appendix; the chapter row lists five
/// values (see `b_table`).  The recomputation disagrees with both on the
/// first two modules — the oracle sides with the recomputation.
pub fn cpcn1(n: usize, p: usize) -> Result<Instance> {
    need(n >= 3 && (1..n).contains(&p), "cpcn1", "need 1 ≤ p ≤ n−1")?;
    let fam = LieFamily::sp(n);
    let sys = RootSystem::build(fam);
    let d = n;
    let r_k = sym("R_k", minus_within(d, (1, n)));
    let fiber = sym("R_p", em_block(d, (1, p), (p + 1, n)));
    let mut n1g = longs(d, (1, p));
    n1g.extend(plus_within(d, (1, p)));
    let n1 = sym("R_n1", n1g);
    let mut n2g = longs(d, (p + 1, n));
    n2g.extend(plus_within(d, (p + 1, n)));
    let n2 = sym("R_n2", n2g);
    let n3 = sym("R_n3", ep_block(d, (1, p), (p + 1, n)));
    let (ni, pi) = (n as i64, p as i64);
    let gamma = vec![rat(ni, 2 * (ni + 1))];
    let b = vec![vec![
        rat(ni - pi, 4 * (ni + 1)),
        rat(pi, 4 * (ni + 1)),
        rat(ni + 2, 4 * (ni + 1)),
    ]];
    let b_table = vec![distinct(&[
        rat(ni - pi, 2 * (ni + 1)),
        rat(ni - pi, ni + 1),
        rat(pi, 2 * (ni + 1)),
        rat(pi, ni + 1),
        rat(ni + 2, 2 * (ni + 1)),
    ])];
    Instance::assemble(
        "cpcn1",
        format!("(sp_{n}, u_{n}, u_{p} ⊕ u_{})", n - p),
        fam,
        Params::np(n, p),
        sys,
        r_k.clone(),
        vec![r_k],
        vec![fiber],
        vec![n1, n2, n3],
        Published { gamma_table: gamma.clone(), gamma, b, b_table },
    )
}

/// `sp_p` split by `l`; fiber inside the first factor.
pub fn cpcn2(n: usize, p: usize, l: usize) -> Result<Instance> {
    need(n >= 3 && (2..n).contains(&p) && (1..p).contains(&l), "cpcn2", "need 2 ≤ p ≤ n−1 and 1 ≤ l ≤ p−1")?;
    let fam = LieFamily::sp(n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = c_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber = sym("R_p", pm_block(d, (1, l), (l + 1, p)));
    let n1 = sym("R_n1", pm_block(d, (1, l), (p + 1, n)));
    let n2 = sym("R_n2", pm_block(d, (l + 1, p), (p + 1, n)));
    let (ni, pi, li) = (n as i64, p as i64, l as i64);
    let gamma = vec![rat(pi + 1, ni + 1)];
    let b = vec![vec![rat(pi - li, 4 * (ni + 1)), rat(li, 4 * (ni + 1))]];
    Instance::assemble(
        "cpcn2",
        format!("(sp_{n}, sp_{p} ⊕ sp_{}, sp_{l} ⊕ sp_{} ⊕ sp_{})", n - p, p - l, n - p),
        fam,
        Params::npl(n, p, l),
        sys,
        r_k,
        vec![k1],
        vec![fiber],
        vec![n1, n2],
        published_plain(gamma, b),
    )
}

/// Mirror of `cpcn2`: the second factor `sp_{n−p}` split by `s`.
pub fn cpcn3(n: usize, p: usize, s: usize) -> Result<Instance> {
    need(n >= 3 && (1..n - 1).contains(&p) && (1..n - p).contains(&s), "cpcn3", "need 1 ≤ p ≤ n−2 and 1 ≤ s ≤ n−p−1")?;
    let fam = LieFamily::sp(n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = c_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber = sym("R_p", pm_block(d, (p + 1, p + s), (p + s + 1, n)));
    let n1 = sym("R_n1", pm_block(d, (1, p), (p + 1, p + s)));
    let n2 = sym("R_n2", pm_block(d, (1, p), (p + s + 1, n)));
    let (ni, pi, si) = (n as i64, p as i64, s as i64);
    let gamma = vec![rat(ni - pi + 1, ni + 1)];
    let b = vec![vec![rat(ni - pi - si, 4 * (ni + 1)), rat(si, 4 * (ni + 1))]];
    Instance::assemble(
        "cpcn3",
        format!("(sp_{n}, sp_{p} ⊕ sp_{}, sp_{p} ⊕ sp_{s} ⊕ sp_{})", n - p, n - p - s),
        fam,
        Params::nps(n, p, s),
        sys,
        r_k,
        vec![k2],
        vec![fiber],
        vec![n1, n2],
        published_plain(gamma, b),
    )
}

/// Both `sp` factors split (`l` and `s`), four crossing summands.
pub fn cpcn4(n: usize, p: usize, l: usize, s: usize) -> Result<Instance> {
    need(
        n >= 4 && (2..n - 1).contains(&p) && (1..p).contains(&l) && (1..n - p).contains(&s),
        "cpcn4",
        "need 2 ≤ p ≤ n−2, 1 ≤ l ≤ p−1, 1 ≤ s ≤ n−p−1",
    )?;
    let fam = LieFamily::sp(n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = c_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber1 = sym("R_p1", pm_block(d, (1, l), (l + 1, p)));
    let fiber2 = sym("R_p2", pm_block(d, (p + 1, p + s), (p + s + 1, n)));
    let s11 = sym("R_n11", pm_block(d, (1, l), (p + 1, p + s)));
    let s12 = sym("R_n12", pm_block(d, (1, l), (p + s + 1, n)));
    let s21 = sym("R_n21", pm_block(d, (l + 1, p), (p + 1, p + s)));
    let s22 = sym("R_n22", pm_block(d, (l + 1, p), (p + s + 1, n)));
    let (ni, pi, li, si) = (n as i64, p as i64, l as i64, s as i64);
    let gamma = vec![rat(pi + 1, ni + 1), rat(ni - pi + 1, ni + 1)];
    let b = vec![
        vec![
            rat(pi - li, 4 * (ni + 1)),
            rat(pi - li, 4 * (ni + 1)),
            rat(li, 4 * (ni + 1)),
            rat(li, 4 * (ni + 1)),
        ],
        vec![
            rat(ni - pi - si, 4 * (ni + 1)),
            rat(si, 4 * (ni + 1)),
            rat(ni - pi - si, 4 * (ni + 1)),
            rat(si, 4 * (ni + 1)),
        ],
    ];
    Instance::assemble(
        "cpcn4",
        format!(
            "(sp_{n}, sp_{p} ⊕ sp_{}, sp_{l} ⊕ sp_{} ⊕ sp_{s} ⊕ sp_{})",
            n - p,
            p - l,
            n - p - s
        ),
        fam,
        Params::npls(n, p, l, s),
        sys,
        r_k,
        vec![k1, k2],
        vec![fiber1, fiber2],
        vec![s11, s12, s21, s22],
        published_plain(gamma, b),
    )
}

/// First factor broken to `u_p`.
pub fn cpcn5(n: usize, p: usize) -> Result<Instance> {
    need(n >= 3 && (1..n).contains(&p), "cpcn5", "need 1 ≤ p ≤ n−1")?;
    let fam = LieFamily::sp(n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = c_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let mut fg = longs(d, (1, p));
    fg.extend(plus_within(d, (1, p)));
    let fiber = sym("R_p", fg);
    let n1 = sym("R_n", pm_block(d, (1, p), (p + 1, n)));
    let (ni, pi) = (n as i64, p as i64);
    let gamma = vec![rat(pi + 1, ni + 1)];
    let b = vec![vec![rat(pi + 1, 4 * (ni + 1))]];
    Instance::assemble(
        "cpcn5",
        format!("(sp_{n}, sp_{p} ⊕ sp_{}, u_{p} ⊕ sp_{})", n - p, n - p),
        fam,
        Params::np(n, p),
        sys,
        r_k,
        vec![k1],
        vec![fiber],
        vec![n1],
        published_plain(gamma, b),
    )
}

/// Second factor broken to `u_{n−p}`.
pub fn cpcn6(n: usize, p: usize) -> Result<Instance> {
    need(n >= 3 && (1..n).contains(&p), "cpcn6", "need 1 ≤ p ≤ n−1")?;
    let fam = LieFamily::sp(n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = c_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let mut fg = longs(d, (p + 1, n));
    fg.extend(plus_within(d, (p + 1, n)));
    let fiber = sym("R_p", fg);
    let n1 = sym("R_n", pm_block(d, (1, p), (p + 1, n)));
    let (ni, pi) = (n as i64, p as i64);
    let gamma = vec![rat(ni - pi + 1, ni + 1)];
    let b = vec![vec![rat(ni - pi + 1, 4 * (ni + 1))]];
    Instance::assemble(
        "cpcn6",
        format!("(sp_{n}, sp_{p} ⊕ sp_{}, sp_{p} ⊕ u_{})", n - p, n - p),
        fam,
        Params::np(n, p),
        sys,
        r_k,
        vec![k2],
        vec![fiber],
        vec![n1],
        published_plain(gamma, b),
    )
}

/// Both factors broken to their `u` subalgebras.
pub fn cpcn7(n: usize, p: usize) -> Result<Instance> {
    need(n >= 3 && (1..n).contains(&p), "cpcn7", "need 1 ≤ p ≤ n−1")?;
    let fam = LieFamily::sp(n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = c_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let mut f1g = longs(d, (1, p));
    f1g.extend(plus_within(d, (1, p)));
    let fiber1 = sym("R_p1", f1g);
    let mut f2g = longs(d, (p + 1, n));
    f2g.extend(plus_within(d, (p + 1, n)));
    let fiber2 = sym("R_p2", f2g);
    let n1 = sym("R_n", pm_block(d, (1, p), (p + 1, n)));
    let (ni, pi) = (n as i64, p as i64);
    let gamma = vec![rat(pi + 1, ni + 1), rat(ni - pi + 1, ni + 1)];
    let b = vec![vec![rat(pi + 1, 4 * (ni + 1))], vec![rat(ni - pi + 1, 4 * (ni + 1))]];
    Instance::assemble(
        "cpcn7",
        format!("(sp_{n}, sp_{p} ⊕ sp_{}, u_{p} ⊕ u_{})", n - p, n - p),
        fam,
        Params::np(n, p),
        sys,
        r_k,
        vec![k1, k2],
        vec![fiber1, fiber2],
        vec![n1],
        published_plain(gamma, b),
    )
}

/// First factor split by `l`, second broken to `u_{n−p}`.
pub fn cpcn8(n: usize, p: usize, l: usize) -> Result<Instance> {
    need(n >= 3 && (2..n).contains(&p) && (1..p).contains(&l), "cpcn8", "need 2 ≤ p ≤ n−1 and 1 ≤ l ≤ p−1")?;
    let fam = LieFamily::sp(n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = c_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber1 = sym("R_p1", pm_block(d, (1, l), (l + 1, p)));
    let mut f2g = longs(d, (p + 1, n));
    f2g.extend(plus_within(d, (p + 1, n)));
    let fiber2 = sym("R_p2", f2g);
    let n1 = sym("R_n1", pm_block(d, (1, l), (p + 1, n)));
    let n2 = sym("R_n2", pm_block(d, (l + 1, p), (p + 1, n)));
    let (ni, pi, li) = (n as i64, p as i64, l as i64);
    let gamma = vec![rat(pi + 1, ni + 1), rat(ni - pi + 1, ni + 1)];
    let b2 = rat(ni - pi + 1, 4 * (ni + 1));
    let b = vec![
        vec![rat(pi - li, 4 * (ni + 1)), rat(li, 4 * (ni + 1))],
        vec![b2.clone(), b2],
    ];
    Instance::assemble(
        "cpcn8",
        format!("(sp_{n}, sp_{p} ⊕ sp_{}, sp_{l} ⊕ sp_{} ⊕ u_{})", n - p, p - l, n - p),
        fam,
        Params::npl(n, p, l),
        sys,
        r_k,
        vec![k1, k2],
        vec![fiber1, fiber2],
        vec![n1, n2],
        published_plain(gamma, b),
    )
}

// ---------------------------------------------------------------------------
// D family: g = so_{2n}.
// ---------------------------------------------------------------------------

fn d_ideals(d: usize, p: usize, n: usize) -> (RootSubset, RootSubset) {
    let k1 = sym("R_k1", both_within(d, (1, p)));
    let k2 = sym("R_k2", both_within(d, (p + 1, n)));
    (k1, k2)
}

/// `(so_{2n}, u_n, u_p ⊕ u_{n−p})`.
pub fn cpdn1(n: usize, p: usize) -> Result<Instance> {
    need(n >= 4 && (1..n).contains(&p), "cpdn1", "need 1 ≤ p ≤ n−1")?;
    let fam = LieFamily::so_even(2 * n);
    let sys = RootSystem::build(fam);
    let d = n;
    let r_k = sym("R_k", minus_within(d, (1, n)));
    let fiber = sym("R_p", em_block(d, (1, p), (p + 1, n)));
    let n1 = sym("R_n1", plus_within(d, (1, p)));
    let n2 = sym("R_n2", plus_within(d, (p + 1, n)));
    let n3 = sym("R_n3", ep_block(d, (1, p), (p + 1, n)));
    let (ni, pi) = (n as i64, p as i64);
    let gamma = vec![rat(ni, 2 * (ni - 1))];
    let b = vec![vec![
        rat(ni - pi, 2 * (ni - 1)),
        rat(pi, 2 * (ni - 1)),
        rat(ni - 2, 4 * (ni - 1)),
    ]];
    let (summands, b) = prune(vec![n1, n2, n3], b);
    Instance::assemble(
        "cpdn1",
        format!("(so_{}, u_{n}, u_{p} ⊕ u_{})", 2 * n, n - p),
        fam,
        Params::np(n, p),
        sys,
        r_k.clone(),
        vec![r_k],
        vec![fiber],
        summands,
        published_plain(gamma, b),
    )
}

/// `so_{2p}` split by `l`; fiber inside the first factor.
pub fn cpdn2(n: usize, p: usize, l: usize) -> Result<Instance> {
    need(n >= 4 && (2..n).contains(&p) && (1..p).contains(&l), "cpdn2", "need 2 ≤ p ≤ n−1 and 1 ≤ l ≤ p−1")?;
    let fam = LieFamily::so_even(2 * n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = d_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber = sym("R_p", pm_block(d, (1, l), (l + 1, p)));
    let n1 = sym("R_n1", pm_block(d, (1, l), (p + 1, n)));
    let n2 = sym("R_n2", pm_block(d, (l + 1, p), (p + 1, n)));
    let (ni, pi, li) = (n as i64, p as i64, l as i64);
    let gamma = vec![rat(pi - 1, ni - 1)];
    let b = vec![vec![rat(pi - li, 2 * (ni - 1)), rat(li, 2 * (ni - 1))]];
    Instance::assemble(
        "cpdn2",
        format!("(so_{}, so_{} ⊕ so_{}, so_{} ⊕ so_{} ⊕ so_{})", 2 * n, 2 * p, 2 * (n - p), 2 * l, 2 * (p - l), 2 * (n - p)),
        fam,
        Params::npl(n, p, l),
        sys,
        r_k,
        vec![k1],
        vec![fiber],
        vec![n1, n2],
        published_plain(gamma, b),
    )
}

/// Mirror of `cpdn2`: the second factor `so_{2(n−p)}` split by `s`.
pub fn cpdn3(n: usize, p: usize, s: usize) -> Result<Instance> {
    need(n >= 4 && (1..n - 1).contains(&p) && (1..n - p).contains(&s), "cpdn3", "need 1 ≤ p ≤ n−2 and 1 ≤ s ≤ n−p−1")?;
    let fam = LieFamily::so_even(2 * n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = d_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber = sym("R_p", pm_block(d, (p + 1, p + s), (p + s + 1, n)));
    let n1 = sym("R_n1", pm_block(d, (1, p), (p + 1, p + s)));
    let n2 = sym("R_n2", pm_block(d, (1, p), (p + s + 1, n)));
    let (ni, pi, si) = (n as i64, p as i64, s as i64);
    let gamma = vec![rat(ni - pi - 1, ni - 1)];
    let b = vec![vec![rat(ni - pi - si, 2 * (ni - 1)), rat(si, 2 * (ni - 1))]];
    Instance::assemble(
        "cpdn3",
        format!("(so_{}, so_{} ⊕ so_{}, so_{} ⊕ so_{} ⊕ so_{})", 2 * n, 2 * p, 2 * (n - p), 2 * p, 2 * s, 2 * (n - p - s)),
        fam,
        Params::nps(n, p, s),
        sys,
        r_k,
        vec![k2],
        vec![fiber],
        vec![n1, n2],
        published_plain(gamma, b),
    )
}

/// Both `so` factors split (`l` and `s`), four crossing summands.
pub fn cpdn4(n: usize, p: usize, l: usize, s: usize) -> Result<Instance> {
    need(
        n >= 4 && (2..n - 1).contains(&p) && (1..p).contains(&l) && (1..n - p).contains(&s),
        "cpdn4",
        "need 2 ≤ p ≤ n−2, 1 ≤ l ≤ p−1, 1 ≤ s ≤ n−p−1",
    )?;
    let fam = LieFamily::so_even(2 * n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = d_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber1 = sym("R_p1", pm_block(d, (1, l), (l + 1, p)));
    let fiber2 = sym("R_p2", pm_block(d, (p + 1, p + s), (p + s + 1, n)));
    let s11 = sym("R_n11", pm_block(d, (1, l), (p + 1, p + s)));
    let s12 = sym("R_n12", pm_block(d, (1, l), (p + s + 1, n)));
    let s21 = sym("R_n21", pm_block(d, (l + 1, p), (p + 1, p + s)));
    let s22 = sym("R_n22", pm_block(d, (l + 1, p), (p + s + 1, n)));
    let (ni, pi, li, si) = (n as i64, p as i64, l as i64, s as i64);
    let gamma = vec![rat(pi - 1, ni - 1), rat(ni - pi - 1, ni - 1)];
    let b = vec![
        vec![
            rat(pi - li, 2 * (ni - 1)),
            rat(pi - li, 2 * (ni - 1)),
            rat(li, 2 * (ni - 1)),
            rat(li, 2 * (ni - 1)),
        ],
        vec![
            rat(ni - pi - si, 2 * (ni - 1)),
            rat(si, 2 * (ni - 1)),
            rat(ni - pi - si, 2 * (ni - 1)),
            rat(si, 2 * (ni - 1)),
        ],
    ];
    Instance::assemble(
        "cpdn4",
        format!(
            "(so_{}, so_{} ⊕ so_{}, so_{} ⊕ so_{} ⊕ so_{} ⊕ so_{})",
            2 * n,
            2 * p,
            2 * (n - p),
            2 * l,
            2 * (p - l),
            2 * s,
            2 * (n - p - s)
        ),
        fam,
        Params::npls(n, p, l, s),
        sys,
        r_k,
        vec![k1, k2],
        vec![fiber1, fiber2],
        vec![s11, s12, s21, s22],
        published_plain(gamma, b),
    )
}

/// First factor broken to `u_p`.
pub fn cpdn5(n: usize, p: usize) -> Result<Instance> {
    need(n >= 4 && (2..n).contains(&p), "cpdn5", "need 2 ≤ p ≤ n−1")?;
    let fam = LieFamily::so_even(2 * n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = d_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber = sym("R_p", plus_within(d, (1, p)));
    let n1 = sym("R_n", pm_block(d, (1, p), (p + 1, n)));
    let (ni, pi) = (n as i64, p as i64);
    let gamma = vec![rat(pi - 1, ni - 1)];
    let b = vec![vec![rat(pi - 1, 4 * (ni - 1))]];
    Instance::assemble(
        "cpdn5",
        format!("(so_{}, so_{} ⊕ so_{}, u_{p} ⊕ so_{})", 2 * n, 2 * p, 2 * (n - p), 2 * (n - p)),
        fam,
        Params::np(n, p),
        sys,
        r_k,
        vec![k1],
        vec![fiber],
        vec![n1],
        published_plain(gamma, b),
    )
}

/// Second factor broken to `u_{n−p}`.
pub fn cpdn6(n: usize, p: usize) -> Result<Instance> {
    need(n >= 4 && (1..=n - 2).contains(&p), "cpdn6", "need 1 ≤ p ≤ n−2")?;
    let fam = LieFamily::so_even(2 * n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = d_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber = sym("R_p", plus_within(d, (p + 1, n)));
    let n1 = sym("R_n", pm_block(d, (1, p), (p + 1, n)));
    let (ni, pi) = (n as i64, p as i64);
    let gamma = vec![rat(ni - pi - 1, ni - 1)];
    let b = vec![vec![rat(ni - pi - 1, 4 * (ni - 1))]];
    Instance::assemble(
        "cpdn6",
        format!("(so_{}, so_{} ⊕ so_{}, so_{} ⊕ u_{})", 2 * n, 2 * p, 2 * (n - p), 2 * p, n - p),
        fam,
        Params::np(n, p),
        sys,
        r_k,
        vec![k2],
        vec![fiber],
        vec![n1],
        published_plain(gamma, b),
    )
}

/// Both factors broken to their `u` subalgebras.
pub fn cpdn7(n: usize, p: usize) -> Result<Instance> {
    need(n >= 4 && (2..=n - 2).contains(&p), "cpdn7", "need 2 ≤ p ≤ n−2")?;
    let fam = LieFamily::so_even(2 * n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = d_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber1 = sym("R_p1", plus_within(d, (1, p)));
    let fiber2 = sym("R_p2", plus_within(d, (p + 1, n)));
    let n1 = sym("R_n", pm_block(d, (1, p), (p + 1, n)));
    let (ni, pi) = (n as i64, p as i64);
    let gamma = vec![rat(pi - 1, ni - 1), rat(ni - pi - 1, ni - 1)];
    let b = vec![vec![rat(pi - 1, 4 * (ni - 1))], vec![rat(ni - pi - 1, 4 * (ni - 1))]];
    Instance::assemble(
        "cpdn7",
        format!("(so_{}, so_{} ⊕ so_{}, u_{p} ⊕ u_{})", 2 * n, 2 * p, 2 * (n - p), n - p),
        fam,
        Params::np(n, p),
        sys,
        r_k,
        vec![k1, k2],
        vec![fiber1, fiber2],
        vec![n1],
        published_plain(gamma, b),
    )
}

/// First factor split by `l`, second broken to `u_{n−p}`.
pub fn cpdn8(n: usize, p: usize, l: usize) -> Result<Instance> {
    need(n >= 4 && (2..=n - 2).contains(&p) && (1..p).contains(&l), "cpdn8", "need 2 ≤ p ≤ n−2 and 1 ≤ l ≤ p−1")?;
    let fam = LieFamily::so_even(2 * n);
    let sys = RootSystem::build(fam);
    let d = n;
    let (k1, k2) = d_ideals(d, p, n);
    let r_k = k1.union("R_k", &k2)?;
    let fiber1 = sym("R_p1", pm_block(d, (1, l), (l + 1, p)));
    let fiber2 = sym("R_p2", plus_within(d, (p + 1, n)));
    let n1 = sym("R_n1", pm_block(d, (1, l), (p + 1, n)));
    let n2 = sym("R_n2", pm_block(d, (l + 1, p), (p + 1, n)));
    let (ni, pi, li) = (n as i64, p as i64, l as i64);
    let gamma = vec![rat(pi - 1, ni - 1), rat(ni - pi - 1, ni - 1)];
    let b2 = rat(ni - pi - 1, 4 * (ni - 1));
    let b = vec![
        vec![rat(pi - li, 2 * (ni - 1)), rat(li, 2 * (ni - 1))],
        vec![b2.clone(), b2],
    ];
    Instance::assemble(
        "cpdn8",
        format!("(so_{}, so_{} ⊕ so_{}, so_{} ⊕ so_{} ⊕ u_{})", 2 * n, 2 * p, 2 * (n - p), 2 * l, 2 * (p - l), n - p),
        fam,
        Params::npl(n, p, l),
        sys,
        r_k,
        vec![k1, k2],
        vec![fiber1, fiber2],
        vec![n1, n2],
        published_plain(gamma, b),
    )
}
