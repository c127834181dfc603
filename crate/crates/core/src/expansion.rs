use alloc::collections::btree_map::{self, BTreeMap};

use crate::partitions::Partition;

/// A finite decomposition `⊕ S_λ^{m_λ}` into simples, stored without zero
/// multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, lambda: Partition, multiplicity: u64) {
        if multiplicity == 0 {
            return;
        }
        *self.terms.entry(lambda).or_insert(0) += multiplicity;
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Partition, u64> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ m_λ · dim V_λ`.
    pub fn specht_dimension(&self) -> u64 {
        self.terms
            .iter()
            .map(|(l, m)| m * l.specht_dim().unwrap_or(1))
            .sum()
    }
}

impl FromIterator<(Partition, u64)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, u64)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (l, m) in iter {
            out.add(l, m);
        }
        out
    }
}

impl<'a> IntoIterator for &'a SchurExpansion {
    type Item = (&'a Partition, &'a u64);
    type IntoIter = btree_map::Iter<'a, Partition, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}
