//! Named, negation-closed subsets of a root system.

use crate::{Result, Root, RootSystemError};
use std::collections::HashSet;

/// A named subset of roots (`R_k`, `R_p`, `R_n^1`, …), closed under
/// negation by construction.
#[derive(Debug, Clone)]
pub struct RootSubset {
    name: String,
    members: Vec<Root>,
    set: HashSet<Root>,
}

impl RootSubset {
    /// Builds a subset, checking negation closure and deduplicating.
    pub fn new(name: impl Into<String>, members: impl IntoIterator<Item = Root>) -> Result<Self> {
        let name = name.into();
        let mut members: Vec<Root> = members.into_iter().collect();
        members.sort();
        members.dedup();
        let set: HashSet<Root> = members.iter().cloned().collect();
        for r in &members {
            if !set.contains(&-r) {
                return Err(RootSystemError::NotNegationClosed {
                    name,
                    missing: -r,
                });
            }
        }
        Ok(Self { name, members, set })
    }

    /// Builds the symmetric closure `S ∪ −S` of a set of generators.
    pub fn symmetrized(name: impl Into<String>, gens: impl IntoIterator<Item = Root>) -> Self {
        let mut members: Vec<Root> = Vec::new();
        for g in gens {
            members.push(-&g);
            members.push(g);
        }
        Self::new(name, members).expect("symmetrized set is negation-closed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn members(&self) -> &[Root] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.set.contains(r)
    }

    /// The lexicographically positive half of the subset.
    pub fn positive(&self) -> impl Iterator<Item = &Root> {
        self.members.iter().filter(|r| r.is_lex_positive())
    }

    /// Set difference, keeping the receiver's closure property.
    pub fn minus(&self, name: impl Into<String>, other: &RootSubset) -> Result<Self> {
        Self::new(
            name,
            self.members
                .iter()
                .filter(|r| !other.contains(r))
                .cloned(),
        )
    }

    /// Union with another subset.
    pub fn union(&self, name: impl Into<String>, other: &RootSubset) -> Result<Self> {
        Self::new(
            name,
            self.members.iter().chain(other.members()).cloned(),
        )
    }

    pub fn is_disjoint(&self, other: &RootSubset) -> bool {
        self.members.iter().all(|r| !other.contains(r))
    }
}
