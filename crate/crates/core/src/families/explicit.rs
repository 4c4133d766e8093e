use crate::axioms::verify_base_axiom_b1;
use crate::error::{Error, Result};
use crate::oracle::MatroidOracle;
use crate::subset::SubsetMask;

/// A matroid given by its full base list. The list is validated against the
/// exchange axiom at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitBasesMatroid {
    n: usize,
    bases: Vec<SubsetMask>,
}

impl ExplicitBasesMatroid {
    pub fn new(n: usize, mut bases: Vec<SubsetMask>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::NoBases);
        }
        if let Some(b) = bases.iter().find(|b| b.ground_size() != n) {
            return Err(Error::GroundSizeMismatch {
                expected: n,
                got: b.ground_size(),
            });
        }
        bases.sort();
        bases.dedup();
        if !verify_base_axiom_b1(&bases) {
            return Err(Error::BaseAxiomViolated);
        }
        Ok(ExplicitBasesMatroid { n, bases })
    }

    pub fn bases(&self) -> &[SubsetMask] {
        &self.bases
    }
}

impl MatroidOracle for ExplicitBasesMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &SubsetMask) -> bool {
        self.bases.iter().any(|b| set.is_subset(b))
    }

    fn known_bases(&self) -> Option<Vec<SubsetMask>> {
        Some(self.bases.clone())
    }
}
