use crate::error::{Error, Result};
use crate::oracle::MatroidOracle;
use crate::subset::{ElementId, SubsetMask};

/// The minimal connected matroid of rank `r` on `n` elements.
///
/// With `E0 = {e1..er}` its circuits are `E0 + ej` for every `ej` outside
/// `E0`, plus every pair of elements outside `E0`. Equivalently a set is
/// independent iff it has at most `r` elements and at most one of them lies
/// outside `E0`, which is what [`is_independent`](MatroidOracle::is_independent)
/// evaluates in O(n/64).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalMatroid {
    n: usize,
    r: usize,
    core: SubsetMask,
    outside: SubsetMask,
}

impl MinimalMatroid {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::InvalidRank { n, r });
        }
        let core = SubsetMask::range(n, 0..r);
        let outside = core.complement();
        Ok(MinimalMatroid {
            n,
            r,
            core,
            outside,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `E0 = {e1..er}`.
    pub fn core(&self) -> &SubsetMask {
        &self.core
    }

    /// `r(n - r) + 1`.
    pub fn base_count(&self) -> usize {
        self.r * (self.n - self.r) + 1
    }

    /// Bases in canonical order: `E0`, then `E0 - ei + ej` for `i` in
    /// `1..=r`, `j` in `r+1..=n`, lexicographic in `(i, j)`.
    pub fn canonical_bases(&self) -> Vec<SubsetMask> {
        let mut bases = Vec::with_capacity(self.base_count());
        bases.push(self.core.clone());
        for i in 0..self.r {
            for j in self.r..self.n {
                bases.push(self.core.exchange(ElementId(j), ElementId(i)));
            }
        }
        bases
    }

    /// Position of `base` in [`canonical_bases`](Self::canonical_bases),
    /// computed without building the list.
    pub fn canonical_index(&self, base: &SubsetMask) -> Option<usize> {
        if base.ground_size() != self.n || base.cardinality() != self.r {
            return None;
        }
        let outside: Vec<ElementId> = base.intersection(&self.outside).iter().collect();
        match outside.as_slice() {
            [] => Some(0),
            [j] => {
                let missing = self.core.difference(base).first()?;
                Some(1 + missing.0 * (self.n - self.r) + (j.0 - self.r))
            }
            _ => None,
        }
    }

    pub fn is_base(&self, set: &SubsetMask) -> bool {
        self.canonical_index(set).is_some()
    }
}

impl MatroidOracle for MinimalMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &SubsetMask) -> bool {
        set.cardinality() <= self.r && set.intersection_count(&self.outside) <= 1
    }

    fn known_bases(&self) -> Option<Vec<SubsetMask>> {
        Some(self.canonical_bases())
    }
}
