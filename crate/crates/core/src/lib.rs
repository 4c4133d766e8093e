//! Matroid connectivity in the independence-oracle model.
//!
//! The crate provides an abstract [`MatroidOracle`], query metering through
//! [`CountingOracle`], the matroid families used in lower-bound
//! constructions, and three connectivity deciders:
//!
//! * [`brute_force_connected`]: the rank-inequality definition, exponential.
//! * [`cunningham_connected`]: partial representation plus BFS, exactly
//!   `n + r(n - r)` queries.
//! * [`quantum_dfs_connected`]: DFS whose neighbor discovery is a modeled
//!   Grover search, charged under a [`GroverCostModel`].
//!
//! [`lowerbound`] holds the hard input distribution, the probing
//! distinguisher and the adversary-relation computation.

pub mod axioms;
pub mod brute;
pub mod cunningham;
pub mod error;
pub mod families;
pub mod grover;
pub mod ledger;
pub mod lowerbound;
pub mod oracle;
pub mod quantum;
pub mod subset;
pub mod verdict;

pub use axioms::{verify_base_axiom_b1, verify_circuit_axioms, verify_independence_axioms};
pub use brute::{brute_force_connected, circuit_pairwise_connected, enumerate_circuits};
pub use cunningham::{
    bipartite_connected, build_partial_representation, cunningham_connected,
    cunningham_connected_from_base, PartialRepresentation,
};
pub use error::{Error, Result};
pub use families::{
    enumerate_bases, enumerate_bases_exhaustive, ExplicitBasesMatroid, Family, FamilyMatroid,
    GraphicMatroid, MinimalMatroid, RemovedBaseMatroid, UniformMatroid,
};
pub use grover::{grover_find, GroverCostModel, GroverMode, GroverOutcome, SearchRng};
pub use ledger::{CountingOracle, QueryLedger};
pub use oracle::{find_base, fundamental_circuit, rank, MatroidOracle};
pub use quantum::{quantum_dfs_connected, quantum_dfs_trace, AdjacencyOracle};
pub use subset::{ElementId, SubsetMask};
pub use verdict::ConnectivityVerdict;
