use std::sync::OnceLock;

use schurcalc_core::characters::MAX_TABLE_N;
use schurcalc_core::{CharacterTable, CharacterTables, Error, Result};

/// Fill-once character table cache that can be shared across threads.
///
/// Two threads racing on the same `n` may both build the table; one result
/// is kept and the other dropped, and both are identical.
pub struct SharedTables {
    cells: Vec<OnceLock<CharacterTable>>,
}

impl SharedTables {
    pub fn new() -> Self {
        Self::with_bound(MAX_TABLE_N)
    }

    pub fn with_bound(bound: usize) -> Self {
        Self {
            cells: (0..=bound).map(|_| OnceLock::new()).collect(),
        }
    }
}

impl Default for SharedTables {
    fn default() -> Self {
        Self::new()
    }
}

impl CharacterTables for SharedTables {
    fn table(&self, n: usize) -> Result<&CharacterTable> {
        let bound = self.cells.len() - 1;
        let cell = self.cells.get(n).ok_or(Error::BoundExceeded {
            what: "n",
            value: n,
            bound,
        })?;
        if let Some(t) = cell.get() {
            return Ok(t);
        }
        let built = CharacterTable::build_bounded(n, bound)?;
        Ok(cell.get_or_init(|| built))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rayon::prelude::*;
    use schurcalc_core::characters::kronecker_multiplicity;
    use schurcalc_core::partitions::partitions_of;

    #[test]
    fn concurrent_fills_agree() {
        let tables = SharedTables::new();
        let all = partitions_of(5).unwrap();
        let values: Vec<u64> = all
            .par_iter()
            .map(|l| kronecker_multiplicity(&tables, l, l, l).unwrap())
            .collect();
        let serial: Vec<u64> = all
            .iter()
            .map(|l| kronecker_multiplicity(&SharedTables::new(), l, l, l).unwrap())
            .collect();
        assert_eq!(values, serial);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            SharedTables::with_bound(4).table(5),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
