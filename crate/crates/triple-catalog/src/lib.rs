//! Catalog of bisymmetric triples `(g, k, l)` of maximal rank, with the
//! tabulated Casimir eigenvalues `(γ_a, b_a^{n_j})` of each fibration
//! `G/L → G/K` and an independent recomputation of every entry from the
//! root-string formula.
//!
//! Each catalog entry carries two layers of eigenvalue data:
//! * `published`: the values as tabulated (the chapter tables, with the
//!   appendix filling in per-summand assignments where a chapter row lists
//!   values without attaching them to modules).  These are the inputs the
//!   Einstein tables downstream were derived from.
//! * the recomputation, produced on demand by [`evaluate::evaluate`], which
//!   derives every `γ_a` from the adjoint Casimir of the ideal `k_a` and
//!   every `b_a^{n_j}` from the string formula, root by root.
//!
//! Disagreements between the two layers are reported as
//! [`evaluate::Discrepancy`] records; they are arbitrated externally (exact
//! internal-consistency arguments or the numeric oracle).

mod classical;
mod exceptional;
pub mod evaluate;
pub mod record;
pub mod report;
mod util;

use exact_numerics::Rational;
use root_systems::{LieFamily, RootSubset, RootSystem};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog label `{0}`")]
    UnknownLabel(String),
    #[error("{label}: invalid parameters: {reason}")]
    BadParams { label: String, reason: String },
    #[error("{label}: inconsistent subset structure: {reason}")]
    Structure { label: String, reason: String },
    #[error(transparent)]
    RootSystem(#[from] root_systems::RootSystemError),
    #[error(transparent)]
    Casimir(#[from] casimir_engine::CasimirError),
}

pub type Result<T> = std::result::Result<T, CatalogError>;

/// Whether the fiber of `G/L → G/K` meets one or two simple ideals of `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    TypeI,
    TypeII,
}

/// Discrete parameters of a catalog family member.  Unused slots stay `None`
/// (the exceptional labels fix everything except an occasional `p`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: Option<usize>,
    pub p: Option<usize>,
    pub l: Option<usize>,
    pub s: Option<usize>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Self { n: Some(n), ..Self::default() }
    }
    pub fn np(n: usize, p: usize) -> Self {
        Self { n: Some(n), p: Some(p), ..Self::default() }
    }
    pub fn npl(n: usize, p: usize, l: usize) -> Self {
        Self { n: Some(n), p: Some(p), l: Some(l), ..Self::default() }
    }
    pub fn nps(n: usize, p: usize, s: usize) -> Self {
        Self { n: Some(n), p: Some(p), s: Some(s), ..Self::default() }
    }
    pub fn npls(n: usize, p: usize, l: usize, s: usize) -> Self {
        Self { n: Some(n), p: Some(p), l: Some(l), s: Some(s) }
    }
    pub fn p(p: usize) -> Self {
        Self { p: Some(p), ..Self::default() }
    }

    /// Renders the set parameters as `n=…,p=…` (empty for fixed labels).
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(l) = self.l {
            parts.push(format!("l={l}"));
        }
        if let Some(s) = self.s {
            parts.push(format!("s={s}"));
        }
        parts.join(",")
    }
}

/// Tabulated eigenvalues of one catalog entry.
///
/// `gamma`/`b` carry one entry per fiber (and per horizontal summand), with
/// the per-summand assignment the downstream Einstein computations used.
/// `gamma_table`/`b_table` are the literal table rows — `b_table[a]` lists
/// the distinct printed values of `b_a` without module assignment.  The two
/// layers differ only where the tables disagree internally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Published {
    pub gamma: Vec<Rational>,
    pub gamma_table: Vec<Rational>,
    pub b: Vec<Vec<Rational>>,
    pub b_table: Vec<Vec<Rational>>,
}

/// One homogeneous fibration `G/L → G/K` attached to a bisymmetric triple,
/// fully resolved into root data.
#[derive(Debug, Clone)]
pub struct Instance {
    /// Family label, e.g. `cpan1`.
    pub label: String,
    /// Label plus parameters, e.g. `cpan1(n=4,p=2,l=1)`.
    pub key: String,
    /// The triple `(g, k, l)` in words.
    pub description: String,
    pub family: LieFamily,
    pub params: Params,
    pub kind: Kind,
    pub system: RootSystem,
    /// All roots of `k`.
    pub r_k: RootSubset,
    /// Roots of the simple ideal `k_a` containing fiber `a` (one per fiber).
    pub ideals: Vec<RootSubset>,
    /// Fiber root sets `R_{p_a}`.
    pub fibers: Vec<RootSubset>,
    /// Horizontal summand root sets `R_{n_j}` (a partition of `R_n`).
    pub summands: Vec<RootSubset>,
    pub published: Published,
}

impl Instance {
    /// Assembles and validates an instance.  Checks that the fibers sit in
    /// their ideals inside `k`, that the summands partition the horizontal
    /// space, and that the published data has matching shape.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        label: &str,
        description: String,
        family: LieFamily,
        params: Params,
        system: RootSystem,
        r_k: RootSubset,
        ideals: Vec<RootSubset>,
        fibers: Vec<RootSubset>,
        summands: Vec<RootSubset>,
        published: Published,
    ) -> Result<Self> {
        let err = |reason: String| CatalogError::Structure {
            label: label.to_string(),
            reason,
        };
        if fibers.is_empty() || fibers.len() > 2 {
            return Err(err(format!("{} fibers", fibers.len())));
        }
        if ideals.len() != fibers.len() {
            return Err(err("one ideal required per fiber".into()));
        }
        for (a, (fiber, ideal)) in fibers.iter().zip(&ideals).enumerate() {
            if fiber.is_empty() {
                return Err(err(format!("fiber {a} is empty")));
            }
            for r in fiber.members() {
                if !ideal.contains(r) {
                    return Err(err(format!("fiber {a} escapes its ideal at {r}")));
                }
            }
            for r in ideal.members() {
                if !r_k.contains(r) {
                    return Err(err(format!("ideal {a} escapes R_k at {r}")));
                }
            }
        }
        if fibers.len() == 2 && !fibers[0].is_disjoint(&fibers[1]) {
            return Err(err("fibers overlap".into()));
        }
        let mut horizontal = 0usize;
        for (j, s) in summands.iter().enumerate() {
            if s.is_empty() {
                return Err(err(format!("summand {j} is empty")));
            }
            if !s.is_disjoint(&r_k) {
                return Err(err(format!("summand {j} meets R_k")));
            }
            for (j2, s2) in summands.iter().enumerate().skip(j + 1) {
                if !s.is_disjoint(s2) {
                    return Err(err(format!("summands {j} and {j2} overlap")));
                }
            }
            horizontal += s.len();
        }
        for r in r_k.members() {
            if !system.contains(r) {
                return Err(err(format!("{r} is not a root of g")));
            }
        }
        for s in &summands {
            for r in s.members() {
                if !system.contains(r) {
                    return Err(err(format!("{r} is not a root of g")));
                }
            }
        }
        if r_k.len() + horizontal != system.roots().len() {
            return Err(err(format!(
                "R_k ({}) plus summands ({horizontal}) do not exhaust the {} roots",
                r_k.len(),
                system.roots().len()
            )));
        }
        let pb = &published;
        if pb.gamma.len() != fibers.len()
            || pb.gamma_table.len() != fibers.len()
            || pb.b.len() != fibers.len()
            || pb.b_table.len() != fibers.len()
            || pb.b.iter().any(|row| row.len() != summands.len())
        {
            return Err(err("published data shape mismatch".into()));
        }
        let kind = if fibers.len() == 1 { Kind::TypeI } else { Kind::TypeII };
        let key = if params.render().is_empty() {
            label.to_string()
        } else {
            format!("{label}({})", params.render())
        };
        Ok(Self {
            label: label.to_string(),
            key,
            description,
            family,
            params,
            kind,
            system,
            r_k,
            ideals,
            fibers,
            summands,
            published,
        })
    }
}

/// Every catalog label, grouped by ambient family.
pub fn labels() -> Vec<&'static str> {
    vec![
        "cpan1", "cpan2", "cpan3", // su_n
        "cpbn1", "cpbn2", "cpbn3", "cpbn4", "cpbn5", // so_{2n+1}
        "cpcn1", "cpcn2", "cpcn3", "cpcn4", "cpcn5", "cpcn6", "cpcn7", "cpcn8", // sp_n
        "cpdn1", "cpdn2", "cpdn3", "cpdn4", "cpdn5", "cpdn6", "cpdn7", "cpdn8", // so_{2n}
        "cpf41", "cpf42", "cpf43", "cpf44", "cpf45", "cpf46", // F4
        "cpg21", "cpg22", "cpg23", // G2
        "cpe61", "cpe62", "cpe63", "cpe64", "cpe65", // E6
        "cpe71", "cpe72", "cpe73", "cpe74", "cpe75", "cpe76", "cpe77", "cpe78", // E7
        "cpe81", "cpe82", "cpe83", "cpe84", "cpe85", "cpe86", "cpe87", "cpe88", "cpe89", // E8
    ]
}

/// Builds one instance by label and parameters.
pub fn build(label: &str, params: Params) -> Result<Instance> {
    let missing = |what: &str| CatalogError::BadParams {
        label: label.to_string(),
        reason: format!("parameter `{what}` is required"),
    };
    let n = || params.n.ok_or_else(|| missing("n"));
    let p = || params.p.ok_or_else(|| missing("p"));
    let l = || params.l.ok_or_else(|| missing("l"));
    let s = || params.s.ok_or_else(|| missing("s"));
    match label {
        "cpan1" => classical::cpan1(n()?, p()?, l()?),
        "cpan2" => classical::cpan2(n()?, p()?, s()?),
        "cpan3" => classical::cpan3(n()?, p()?, l()?, s()?),
        "cpbn1" => classical::cpbn1(n()?, p()?, l()?),
        "cpbn2" => classical::cpbn2(n()?, p()?, s()?),
        "cpbn3" => classical::cpbn3(n()?, p()?),
        "cpbn4" => classical::cpbn4(n()?, p()?, l()?),
        "cpbn5" => classical::cpbn5(n()?, p()?, l()?, s()?),
        "cpcn1" => classical::cpcn1(n()?, p()?),
        "cpcn2" => classical::cpcn2(n()?, p()?, l()?),
        "cpcn3" => classical::cpcn3(n()?, p()?, s()?),
        "cpcn4" => classical::cpcn4(n()?, p()?, l()?, s()?),
        "cpcn5" => classical::cpcn5(n()?, p()?),
        "cpcn6" => classical::cpcn6(n()?, p()?),
        "cpcn7" => classical::cpcn7(n()?, p()?),
        "cpcn8" => classical::cpcn8(n()?, p()?, l()?),
        "cpdn1" => classical::cpdn1(n()?, p()?),
        "cpdn2" => classical::cpdn2(n()?, p()?, l()?),
        "cpdn3" => classical::cpdn3(n()?, p()?, s()?),
        "cpdn4" => classical::cpdn4(n()?, p()?, l()?, s()?),
        "cpdn5" => classical::cpdn5(n()?, p()?),
        "cpdn6" => classical::cpdn6(n()?, p()?),
        "cpdn7" => classical::cpdn7(n()?, p()?),
        "cpdn8" => classical::cpdn8(n()?, p()?, l()?),
        "cpf41" => exceptional::cpf41(p()?),
        "cpf42" => exceptional::cpf42(),
        "cpf43" => exceptional::cpf43(),
        "cpf44" => exceptional::cpf44(),
        "cpf45" => exceptional::cpf45(),
        "cpf46" => exceptional::cpf46(),
        "cpg21" => exceptional::cpg21(),
        "cpg22" => exceptional::cpg22(),
        "cpg23" => exceptional::cpg23(),
        "cpe61" => exceptional::cpe61(),
        "cpe62" => exceptional::cpe62(p()?),
        "cpe63" => exceptional::cpe63(),
        "cpe64" => exceptional::cpe64(p()?),
        "cpe65" => exceptional::cpe65(p()?),
        "cpe71" => exceptional::cpe71(),
        "cpe72" => exceptional::cpe72(),
        "cpe73" => exceptional::cpe73(),
        "cpe74" => exceptional::cpe74(p()?),
        "cpe75" => exceptional::cpe75(p()?),
        "cpe76" => exceptional::cpe76(),
        "cpe77" => exceptional::cpe77(),
        "cpe78" => exceptional::cpe78(p()?),
        "cpe81" => exceptional::cpe81(p()?),
        "cpe82" => exceptional::cpe82(),
        "cpe83" => exceptional::cpe83(),
        "cpe84" => exceptional::cpe84(),
        "cpe85" => exceptional::cpe85(),
        "cpe86" => exceptional::cpe86(),
        "cpe87" => exceptional::cpe87(),
        "cpe88" => exceptional::cpe88(),
        "cpe89" => exceptional::cpe89(),
        other => Err(CatalogError::UnknownLabel(other.to_string())),
    }
}

/// The valid parameter sets of a label for ambient ranks up to `rank_bound`.
pub fn parameter_grid(label: &str, rank_bound: usize) -> Vec<Params> {
    let mut out = Vec::new();
    match label {
        "cpan1" => {
            for n in 3..=rank_bound + 1 {
                for p in 2..n {
                    for l in 1..p {
                        out.push(Params::npl(n, p, l));
                    }
                }
            }
        }
        "cpan2" => {
            for n in 3..=rank_bound + 1 {
                for p in 1..n.saturating_sub(1) {
                    for s in 1..n - p {
                        out.push(Params::nps(n, p, s));
                    }
                }
            }
        }
        "cpan3" => {
            for n in 4..=rank_bound + 1 {
                for p in 2..n - 1 {
                    for l in 1..p {
                        for s in 1..n - p {
                            out.push(Params::npls(n, p, l, s));
                        }
                    }
                }
            }
        }
        "cpbn1" => {
            for n in 2..=rank_bound {
                for p in 1..n {
                    for l in 0..p {
                        out.push(Params::npl(n, p, l));
                    }
                }
            }
        }
        "cpbn2" => {
            for n in 2..=rank_bound {
                for p in 0..n.saturating_sub(1) {
                    for s in 1..n - p {
                        out.push(Params::nps(n, p, s));
                    }
                }
            }
        }
        "cpbn3" => {
            for n in 2..=rank_bound {
                for p in 0..=n.saturating_sub(2) {
                    out.push(Params::np(n, p));
                }
            }
        }
        "cpbn4" => {
            for n in 3..=rank_bound {
                for p in 1..=n - 2 {
                    for l in 0..p {
                        out.push(Params::npl(n, p, l));
                    }
                }
            }
        }
        "cpbn5" => {
            for n in 3..=rank_bound {
                for p in 1..=n - 2 {
                    for l in 0..p {
                        for s in 1..n - p {
                            out.push(Params::npls(n, p, l, s));
                        }
                    }
                }
            }
        }
        "cpcn1" | "cpcn5" | "cpcn6" | "cpcn7" => {
            for n in 3..=rank_bound {
                for p in 1..n {
                    out.push(Params::np(n, p));
                }
            }
        }
        "cpcn2" | "cpcn8" => {
            for n in 3..=rank_bound {
                for p in 2..n {
                    for l in 1..p {
                        out.push(Params::npl(n, p, l));
                    }
                }
            }
        }
        "cpcn3" => {
            for n in 3..=rank_bound {
                for p in 1..n.saturating_sub(1) {
                    for s in 1..n - p {
                        out.push(Params::nps(n, p, s));
                    }
                }
            }
        }
        "cpcn4" => {
            for n in 4..=rank_bound {
                for p in 2..n - 1 {
                    for l in 1..p {
                        for s in 1..n - p {
                            out.push(Params::npls(n, p, l, s));
                        }
                    }
                }
            }
        }
        "cpdn1" => {
            for n in 4..=rank_bound {
                for p in 1..n {
                    out.push(Params::np(n, p));
                }
            }
        }
        "cpdn2" => {
            for n in 4..=rank_bound {
                for p in 2..n {
                    for l in 1..p {
                        out.push(Params::npl(n, p, l));
                    }
                }
            }
        }
        "cpdn3" => {
            for n in 4..=rank_bound {
                for p in 1..n.saturating_sub(1) {
                    for s in 1..n - p {
                        out.push(Params::nps(n, p, s));
                    }
                }
            }
        }
        "cpdn4" => {
            for n in 4..=rank_bound {
                for p in 2..n - 1 {
                    for l in 1..p {
                        for s in 1..n - p {
                            out.push(Params::npls(n, p, l, s));
                        }
                    }
                }
            }
        }
        "cpdn5" => {
            for n in 4..=rank_bound {
                for p in 2..n {
                    out.push(Params::np(n, p));
                }
            }
        }
        "cpdn6" => {
            for n in 4..=rank_bound {
                for p in 1..=n - 2 {
                    out.push(Params::np(n, p));
                }
            }
        }
        "cpdn7" => {
            for n in 4..=rank_bound {
                for p in 2..=n - 2 {
                    out.push(Params::np(n, p));
                }
            }
        }
        "cpdn8" => {
            for n in 4..=rank_bound {
                for p in 2..=n - 2 {
                    for l in 1..p {
                        out.push(Params::npl(n, p, l));
                    }
                }
            }
        }
        "cpf41" => {
            if rank_bound >= 4 {
                out.extend([1, 3, 5, 7].map(Params::p));
            }
        }
        "cpf42" | "cpf43" | "cpf44" | "cpf45" | "cpf46" => {
            if rank_bound >= 4 {
                out.push(Params::default());
            }
        }
        "cpg21" | "cpg22" | "cpg23" => {
            if rank_bound >= 2 {
                out.push(Params::default());
            }
        }
        "cpe61" | "cpe63" => {
            if rank_bound >= 6 {
                out.push(Params::default());
            }
        }
        "cpe62" => {
            if rank_bound >= 6 {
                out.extend([2, 4].map(Params::p));
            }
        }
        "cpe64" | "cpe65" => {
            if rank_bound >= 6 {
                out.extend([1, 2, 3].map(Params::p));
            }
        }
        "cpe71" | "cpe72" | "cpe73" | "cpe76" | "cpe77" => {
            if rank_bound >= 7 {
                out.push(Params::default());
            }
        }
        "cpe74" | "cpe75" => {
            if rank_bound >= 7 {
                out.extend([2, 4, 6].map(Params::p));
            }
        }
        "cpe78" => {
            if rank_bound >= 7 {
                out.extend([1, 2, 3, 4].map(Params::p));
            }
        }
        "cpe81" => {
            if rank_bound >= 8 {
                out.extend([1, 2, 3, 4].map(Params::p));
            }
        }
        "cpe82" | "cpe83" | "cpe84" | "cpe85" | "cpe86" | "cpe87" | "cpe88" | "cpe89" => {
            if rank_bound >= 8 {
                out.push(Params::default());
            }
        }
        _ => {}
    }
    out
}

/// Builds every catalog instance with ambient rank at most `rank_bound`.
pub fn enumerate(rank_bound: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for label in labels() {
        for params in parameter_grid(label, rank_bound) {
            out.push(
                build(label, params)
                    .unwrap_or_else(|e| panic!("{label}({}): {e}", params.render())),
            );
        }
    }
    out
}
