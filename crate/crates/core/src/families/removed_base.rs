use crate::error::{Error, Result};
use crate::oracle::MatroidOracle;
use crate::subset::SubsetMask;

use super::MinimalMatroid;

/// A minimal matroid with one base deleted from its base list.
///
/// Removing `E0` leaves the disconnected partition matroid
/// `U(r-1, r) ⊕ U(1, n-r)`. Removing any other base `E0 - ei + ej` leaves a
/// family that satisfies the exchange axiom only when `r = 1` or `n - r = 1`;
/// otherwise the result is not a matroid, though the type still answers
/// independence queries for it. Independence is decided by scanning the
/// stored base list for a superset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovedBaseMatroid {
    parent: MinimalMatroid,
    removed: SubsetMask,
    removed_index: usize,
    bases: Vec<SubsetMask>,
}

impl RemovedBaseMatroid {
    pub fn new(n: usize, r: usize, removed: SubsetMask) -> Result<Self> {
        let parent = MinimalMatroid::new(n, r)?;
        if removed.ground_size() != n {
            return Err(Error::GroundSizeMismatch {
                expected: n,
                got: removed.ground_size(),
            });
        }
        let removed_index = parent
            .canonical_index(&removed)
            .ok_or_else(|| Error::NotABase {
                set: removed.clone(),
            })?;
        Ok(Self::assemble(parent, removed_index))
    }

    /// Removes the base at `index` in the parent's canonical order.
    pub fn from_index(n: usize, r: usize, index: usize) -> Result<Self> {
        let parent = MinimalMatroid::new(n, r)?;
        if index >= parent.base_count() {
            return Err(Error::TooManyProbes {
                t: index + 1,
                bases: parent.base_count(),
            });
        }
        Ok(Self::assemble(parent, index))
    }

    fn assemble(parent: MinimalMatroid, removed_index: usize) -> Self {
        let mut bases = parent.canonical_bases();
        let removed = bases.remove(removed_index);
        RemovedBaseMatroid {
            parent,
            removed,
            removed_index,
            bases,
        }
    }

    pub fn parent(&self) -> &MinimalMatroid {
        &self.parent
    }

    pub fn removed(&self) -> &SubsetMask {
        &self.removed
    }

    pub fn removed_index(&self) -> usize {
        self.removed_index
    }

    /// Remaining bases, in the parent's canonical order.
    pub fn bases(&self) -> &[SubsetMask] {
        &self.bases
    }
}

impl MatroidOracle for RemovedBaseMatroid {
    fn ground_size(&self) -> usize {
        self.parent.n()
    }

    fn is_independent(&self, set: &SubsetMask) -> bool {
        self.bases.iter().any(|b| set.is_subset(b))
    }

    fn known_bases(&self) -> Option<Vec<SubsetMask>> {
        Some(self.bases.clone())
    }
}
