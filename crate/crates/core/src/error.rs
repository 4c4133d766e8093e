use thiserror::Error;

use crate::subset::{ElementId, SubsetMask};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{operation} is limited to n <= {cap}, got n = {n}")]
    TooLarge {
        operation: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("invalid rank {r} for ground set of size {n}: need 0 < r < n")]
    InvalidRank { n: usize, r: usize },

    #[error("{element} is in the base {base}")]
    ElementInBase {
        element: ElementId,
        base: SubsetMask,
    },

    #[error("{set} is not a base of the parent minimal matroid")]
    NotABase { set: SubsetMask },

    #[error("base list violates the exchange axiom (B1)")]
    BaseAxiomViolated,

    #[error("base list is empty")]
    NoBases,

    #[error("mask has ground size {got}, expected {expected}")]
    GroundSizeMismatch { expected: usize, got: usize },

    #[error("vertex {vertex} outside graph of {vertices} vertices")]
    VertexOutOfRange { vertex: usize, vertices: usize },

    #[error("solution count {k} exceeds search space {space}")]
    TooManySolutions { k: usize, space: usize },

    #[error("search space must be nonempty")]
    EmptySearchSpace,

    #[error("probe count {t} exceeds the {bases} bases of the parent matroid")]
    TooManyProbes { t: usize, bases: usize },

    #[error("invalid cost model: {0}")]
    InvalidCostModel(&'static str),

    #[error("separation witness rejected: r({e1}) + r({e2}) = {sum} but r(E) = {rank}")]
    WitnessRejected {
        e1: SubsetMask,
        e2: SubsetMask,
        sum: usize,
        rank: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
