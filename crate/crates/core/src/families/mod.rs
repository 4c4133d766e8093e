//! Matroid families used by the experiments and the test corpus.

mod explicit;
mod graphic;
mod minimal;
mod removed_base;
mod uniform;

pub use explicit::ExplicitBasesMatroid;
pub use graphic::{DisjointSets, GraphicMatroid};
pub use minimal::MinimalMatroid;
pub use removed_base::RemovedBaseMatroid;
pub use uniform::UniformMatroid;

use std::fmt;

use crate::error::Result;
use crate::oracle::{check_cap, find_base, MatroidOracle};
use crate::subset::SubsetMask;

/// Any member of the supported families, behind one concrete type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyMatroid {
    Minimal(MinimalMatroid),
    RemovedBase(RemovedBaseMatroid),
    Uniform(UniformMatroid),
    Graphic(GraphicMatroid),
    ExplicitBases(ExplicitBasesMatroid),
}

impl FamilyMatroid {
    pub fn family(&self) -> Family {
        match self {
            FamilyMatroid::Minimal(_) => Family::Minimal,
            FamilyMatroid::RemovedBase(_) => Family::RemovedBase,
            FamilyMatroid::Uniform(_) => Family::Uniform,
            FamilyMatroid::Graphic(_) => Family::Graphic,
            FamilyMatroid::ExplicitBases(_) => Family::ExplicitBases,
        }
    }

    fn as_oracle(&self) -> &dyn MatroidOracle {
        match self {
            FamilyMatroid::Minimal(m) => m,
            FamilyMatroid::RemovedBase(m) => m,
            FamilyMatroid::Uniform(m) => m,
            FamilyMatroid::Graphic(m) => m,
            FamilyMatroid::ExplicitBases(m) => m,
        }
    }
}

impl MatroidOracle for FamilyMatroid {
    fn ground_size(&self) -> usize {
        self.as_oracle().ground_size()
    }

    fn is_independent(&self, set: &SubsetMask) -> bool {
        self.as_oracle().is_independent(set)
    }

    fn known_bases(&self) -> Option<Vec<SubsetMask>> {
        self.as_oracle().known_bases()
    }
}

impl From<MinimalMatroid> for FamilyMatroid {
    fn from(m: MinimalMatroid) -> Self {
        FamilyMatroid::Minimal(m)
    }
}
impl From<RemovedBaseMatroid> for FamilyMatroid {
    fn from(m: RemovedBaseMatroid) -> Self {
        FamilyMatroid::RemovedBase(m)
    }
}
impl From<UniformMatroid> for FamilyMatroid {
    fn from(m: UniformMatroid) -> Self {
        FamilyMatroid::Uniform(m)
    }
}
impl From<GraphicMatroid> for FamilyMatroid {
    fn from(m: GraphicMatroid) -> Self {
        FamilyMatroid::Graphic(m)
    }
}
impl From<ExplicitBasesMatroid> for FamilyMatroid {
    fn from(m: ExplicitBasesMatroid) -> Self {
        FamilyMatroid::ExplicitBases(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Minimal,
    RemovedBase,
    Uniform,
    Graphic,
    ExplicitBases,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Minimal,
        Family::RemovedBase,
        Family::Uniform,
        Family::Graphic,
        Family::ExplicitBases,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Minimal => "minimal",
            Family::RemovedBase => "removed_base",
            Family::Uniform => "uniform",
            Family::Graphic => "graphic",
            Family::ExplicitBases => "explicit_bases",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// All bases of `m`, sorted in mask order.
///
/// Uses the family's closed-form list when there is one; otherwise falls back
/// to [`enumerate_bases_exhaustive`], which is capped at `n <= 16`.
pub fn enumerate_bases<M: MatroidOracle + ?Sized>(m: &M) -> Result<Vec<SubsetMask>> {
    match m.known_bases() {
        Some(mut bases) => {
            bases.sort();
            Ok(bases)
        }
        None => enumerate_bases_exhaustive(m),
    }
}

/// All bases of `m` by sweeping every `rank(E)`-subset through the oracle.
pub fn enumerate_bases_exhaustive<M: MatroidOracle + ?Sized>(m: &M) -> Result<Vec<SubsetMask>> {
    let n = m.ground_size();
    check_cap("enumerate_bases", n, 16)?;
    let r = find_base(m).cardinality() as u32;
    Ok((0u64..1 << n)
        .filter(|bits| bits.count_ones() == r)
        .map(|bits| SubsetMask::from_bits(n, bits))
        .filter(|s| m.is_independent(s))
        .collect())
}
