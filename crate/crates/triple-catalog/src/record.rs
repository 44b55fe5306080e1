//! Flat, serializable snapshots of catalog entries (exact values rendered
//! as `p/q` strings so the JSON round-trips losslessly).

use crate::{Instance, Kind, Params};
use exact_numerics::Rational;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub label: String,
    pub key: String,
    pub description: String,
    pub family: String,
    pub rank: usize,
    pub kind: Kind,
    pub params: Params,
    pub gamma: Vec<String>,
    pub gamma_table: Vec<String>,
    pub b: Vec<Vec<String>>,
    pub b_table: Vec<Vec<String>>,
    pub fiber_sizes: Vec<usize>,
    pub summand_sizes: Vec<usize>,
}

fn render(v: &Rational) -> String {
    format!("{v}")
}

/// Parses a `p/q` (or integer) string back into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    Rational::from_str(s).ok()
}

impl From<&Instance> for InstanceRecord {
    fn from(inst: &Instance) -> Self {
        Self {
            label: inst.label.clone(),
            key: inst.key.clone(),
            description: inst.description.clone(),
            family: format!("{:?}", inst.family.family),
            rank: inst.family.rank,
            kind: inst.kind,
            params: inst.params,
            gamma: inst.published.gamma.iter().map(render).collect(),
            gamma_table: inst.published.gamma_table.iter().map(render).collect(),
            b: inst
                .published
                .b
                .iter()
                .map(|row| row.iter().map(render).collect())
                .collect(),
            b_table: inst
                .published
                .b_table
                .iter()
                .map(|row| row.iter().map(render).collect())
                .collect(),
            fiber_sizes: inst.fibers.iter().map(|f| f.len()).collect(),
            summand_sizes: inst.summands.iter().map(|s| s.len()).collect(),
        }
    }
}
