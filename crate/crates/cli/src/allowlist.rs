//! Known-discrepancy allowlist: the documented set of table entries whose
//! recomputed values are known to disagree with the printed ones, so that
//! `verify` can distinguish erratum candidates from regressions.
//!
//! Shipped as a data file (`data/allowlist.toml`) and overridable with
//! `--allowlist PATH`.  Each entry names the authority that arbitrates the
//! disagreement: `oracle` when the floating-point structure-constant oracle
//! independently reproduces the recomputed value, `internal-consistency`
//! when an exact argument (a trace identity, a discriminant printed on the
//! same page, or the table's own companion columns) pins it down.

use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Authority {
    /// The numeric structure-constant oracle reproduces the recomputed value.
    Oracle,
    /// An exact cross-check within the source data settles the value.
    InternalConsistency,
}

impl std::fmt::Display for Authority {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Authority::Oracle => write!(f, "oracle"),
            Authority::InternalConsistency => write!(f, "internal-consistency"),
        }
    }
}

/// One allowlisted disagreement: a family label, a site pattern over the
/// discrepancy sites emitted by the catalog evaluation (`gamma[a]`,
/// `b[a][j]`, `b_table[a]`; a trailing `*` matches any suffix), the
/// arbitrating authority, and a note describing the finding.
#[derive(Debug, Clone, Deserialize)]
pub struct AllowEntry {
    pub label: String,
    pub site: String,
    pub authority: Authority,
    pub note: String,
}

impl AllowEntry {
    fn site_matches(&self, site: &str) -> bool {
        match self.site.strip_suffix('*') {
            Some(prefix) => site.starts_with(prefix),
            None => self.site == site,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct Allowlist {
    #[serde(default)]
    pub entry: Vec<AllowEntry>,
}

impl Allowlist {
    /// The allowlist shipped with the binary.
    pub fn builtin() -> Self {
        toml::from_str(include_str!("../data/allowlist.toml"))
            .expect("bundled allowlist parses")
    }

    pub fn from_path(path: &str) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read allowlist {path}: {e}"))?;
        toml::from_str(&text).map_err(|e| format!("cannot parse allowlist {path}: {e}"))
    }

    /// Finds the entry covering a discrepancy at `site` for family `label`,
    /// if any.
    pub fn matches(&self, label: &str, site: &str) -> Option<&AllowEntry> {
        self.entry
            .iter()
            .find(|e| e.label == label && e.site_matches(site))
    }
}
