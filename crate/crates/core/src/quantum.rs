//! Depth-first search over the fundamental bipartite graph where each
//! neighbor discovery is a modeled Grover search.
//!
//! After a greedy base `B` is found classically (`n` queries), vertices are
//! the elements of `E`, split into the rows `B` and the columns `E - B`. The
//! stack starts at the lowest element of `B`. For the top vertex `u` a Grover
//! search runs over the whole opposite side, with the undiscovered neighbors
//! of `u` as the marked items: a hit is pushed, a miss pops `u`. Vertices are
//! marked when discovered, so every vertex is pushed and popped at most once.
//!
//! Grover's oracle is evaluated only to learn which items are marked; those
//! evaluations are not metered. The run's quantum cost is the sum of the
//! charges from [`GroverCostModel`].

use crate::error::Result;
use crate::grover::{grover_find, GroverCostModel, SearchRng};
use crate::ledger::{phase, CountingOracle};
use crate::oracle::{find_base, MatroidOracle};
use crate::subset::{ElementId, SubsetMask};
use crate::verdict::ConnectivityVerdict;

/// Adjacency-matrix access to `G(P)` built from the independence oracle:
/// `adjacency(j, k) = O(B + k - j)` for `j ∈ B`, `k ∉ B`, else 0.
pub struct AdjacencyOracle<'a, M> {
    matroid: &'a CountingOracle<M>,
    base: SubsetMask,
}

impl<'a, M: MatroidOracle> AdjacencyOracle<'a, M> {
    pub fn new(matroid: &'a CountingOracle<M>, base: SubsetMask) -> Self {
        AdjacencyOracle { matroid, base }
    }

    pub fn base(&self) -> &SubsetMask {
        &self.base
    }

    /// One metered query when `j ∈ B` and `k ∈ E - B`; zero otherwise.
    pub fn adjacency(&self, j: ElementId, k: ElementId) -> bool {
        if self.in_row_col_order(j, k) {
            self.matroid.is_independent(&self.base.exchange(k, j))
        } else {
            false
        }
    }

    /// Symmetrized adjacency evaluated on the unmetered inner oracle; used
    /// to mark Grover solutions.
    pub fn marked(&self, u: ElementId, v: ElementId) -> bool {
        let inner = self.matroid.inner();
        if self.in_row_col_order(u, v) {
            inner.is_independent(&self.base.exchange(v, u))
        } else if self.in_row_col_order(v, u) {
            inner.is_independent(&self.base.exchange(u, v))
        } else {
            false
        }
    }

    fn in_row_col_order(&self, j: ElementId, k: ElementId) -> bool {
        let n = self.matroid.ground_size();
        j.0 < n && k.0 < n && self.base.contains(j) && !self.base.contains(k)
    }
}

/// One Grover search made by the DFS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRecord {
    pub from: ElementId,
    pub space: usize,
    pub marked: usize,
    pub found: Option<ElementId>,
    pub cost: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DfsTrace {
    pub searches: Vec<SearchRecord>,
    pub pushes: usize,
    pub pops: usize,
    pub discovered: usize,
}

impl DfsTrace {
    pub fn successes(&self) -> usize {
        self.searches.iter().filter(|s| s.found.is_some()).count()
    }

    pub fn failures(&self) -> usize {
        self.searches.len() - self.successes()
    }

    pub fn total_cost(&self) -> u64 {
        self.searches.iter().map(|s| s.cost).sum()
    }
}

/// Decides connectivity with a classical greedy base plus modeled Grover
/// searches. In idealized mode the verdict always matches the classical
/// decider; in sampled mode a missed neighbor can turn a connected verdict
/// into a disconnected one, never the reverse.
pub fn quantum_dfs_connected<M: MatroidOracle + ?Sized>(
    m: &M,
    model: &GroverCostModel,
    rng: &mut SearchRng,
) -> Result<ConnectivityVerdict> {
    quantum_dfs_trace(m, model, rng).map(|(verdict, _)| verdict)
}

/// [`quantum_dfs_connected`] that also returns every search it made.
pub fn quantum_dfs_trace<M: MatroidOracle + ?Sized>(
    m: &M,
    model: &GroverCostModel,
    rng: &mut SearchRng,
) -> Result<(ConnectivityVerdict, DfsTrace)> {
    model.validate()?;
    let n = m.ground_size();
    let oracle = CountingOracle::new(m);
    let base = oracle.in_phase(phase::FIND_BASE, find_base);
    let mut trace = DfsTrace::default();

    let Some(start) = base.first() else {
        // Rank 0: every vertex of G(P) is isolated.
        let ledger = oracle.into_ledger();
        trace.discovered = n.min(1);
        let verdict = if n <= 1 {
            ConnectivityVerdict::connected(ledger)
        } else {
            ConnectivityVerdict::disconnected(None, ledger)
        };
        return Ok((verdict, trace));
    };

    let rows: Vec<ElementId> = base.iter().collect();
    let cols: Vec<ElementId> = base.complement().iter().collect();
    let adjacency = AdjacencyOracle::new(&oracle, base.clone());

    let mut discovered = vec![false; n];
    discovered[start.0] = true;
    trace.discovered = 1;
    let mut stack = vec![start];
    trace.pushes = 1;

    while let Some(&u) = stack.last() {
        let side = if base.contains(u) { &cols } else { &rows };
        let record = if side.is_empty() {
            SearchRecord {
                from: u,
                space: 0,
                marked: 0,
                found: None,
                cost: 0,
            }
        } else {
            let solutions: Vec<usize> = side
                .iter()
                .enumerate()
                .filter(|&(_, &v)| !discovered[v.0] && adjacency.marked(u, v))
                .map(|(i, _)| i)
                .collect();
            let outcome = grover_find(side.len(), &solutions, model, rng)?;
            SearchRecord {
                from: u,
                space: side.len(),
                marked: solutions.len(),
                found: outcome.found.map(|i| side[i]),
                cost: outcome.cost,
            }
        };
        match record.found {
            Some(v) => {
                oracle.charge_quantum(record.cost, phase::GROVER_SUCCESS);
                discovered[v.0] = true;
                trace.discovered += 1;
                stack.push(v);
                trace.pushes += 1;
            }
            None => {
                oracle.charge_quantum(record.cost, phase::GROVER_FAIL);
                stack.pop();
                trace.pops += 1;
            }
        }
        trace.searches.push(record);
    }

    let ledger = oracle.into_ledger();
    let verdict = if trace.discovered == n {
        ConnectivityVerdict::connected(ledger)
    } else {
        ConnectivityVerdict::disconnected(None, ledger)
    };
    Ok((verdict, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{MinimalMatroid, RemovedBaseMatroid, UniformMatroid};

    fn set(n: usize, labels: &[usize]) -> SubsetMask {
        SubsetMask::from_labels(n, labels.iter().copied()).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        let m = CountingOracle::new(MinimalMatroid::new(4, 2).unwrap());
        let a = AdjacencyOracle::new(&m, set(4, &[1, 2]));
        assert!(a.adjacency(ElementId(0), ElementId(2)));
        assert_eq!(m.ledger().classical(), 1);
        assert!(!a.adjacency(ElementId(2), ElementId(0)));
        assert!(!a.adjacency(ElementId(0), ElementId(1)));
        assert_eq!(m.ledger().classical(), 1);
    }

    #[test]
    fn minimal_4_2_pinned_trace() {
        let m = MinimalMatroid::new(4, 2).unwrap();
        let (v, trace) = quantum_dfs_trace(
            &m,
            &GroverCostModel::default(),
            &mut SearchRng::deterministic(),
        )
        .unwrap();
        assert!(v.connected);
        assert_eq!(v.ledger.classical(), 4);
        // hand trace: 1 + 2 + 2 (hits) + 4 × 2 (misses)
        assert_eq!(v.ledger.quantum_charged(), 13);
        assert_eq!(trace.total_cost(), 13);
        assert_eq!(trace.successes(), 3);
        assert_eq!(trace.failures(), 4);
    }

    #[test]
    fn removed_base_is_disconnected() {
        let m = RemovedBaseMatroid::new(4, 2, set(4, &[1, 2])).unwrap();
        let v = quantum_dfs_connected(
            &m,
            &GroverCostModel::default(),
            &mut SearchRng::deterministic(),
        )
        .unwrap();
        assert!(!v.connected);
    }

    #[test]
    fn rank_zero() {
        let model = GroverCostModel::default();
        let mut rng = SearchRng::deterministic();
        for n in 2..5 {
            let v = quantum_dfs_connected(&UniformMatroid::new(0, n), &model, &mut rng).unwrap();
            assert!(!v.connected);
            assert_eq!(v.ledger.quantum_charged(), 0);
        }
        assert!(
            quantum_dfs_connected(&UniformMatroid::new(0, 1), &model, &mut rng)
                .unwrap()
                .connected
        );
        assert!(
            quantum_dfs_connected(&UniformMatroid::free(0), &model, &mut rng)
                .unwrap()
                .connected
        );
    }

    #[test]
    fn free_matroid_has_empty_column_side() {
        let v = quantum_dfs_connected(
            &UniformMatroid::free(3),
            &GroverCostModel::default(),
            &mut SearchRng::deterministic(),
        )
        .unwrap();
        assert!(!v.connected);
        assert!(
            quantum_dfs_connected(
                &UniformMatroid::free(1),
                &GroverCostModel::default(),
                &mut SearchRng::deterministic(),
            )
            .unwrap()
            .connected
        );
    }
}
