use crate::oracle::MatroidOracle;
use crate::subset::SubsetMask;

/// `U(r, n)`: every set of at most `r` elements is independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniformMatroid {
    r: usize,
    n: usize,
}

impl UniformMatroid {
    /// Ranks above `n` are clamped, giving the free matroid.
    pub fn new(r: usize, n: usize) -> Self {
        UniformMatroid { r: r.min(n), n }
    }

    pub fn free(n: usize) -> Self {
        Self::new(n, n)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl MatroidOracle for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &SubsetMask) -> bool {
        set.cardinality() <= self.r
    }
}
