//! Query metering: per-phase counts of classical oracle calls and of modeled
//! quantum query charges.

use std::cell::RefCell;

use crate::oracle::MatroidOracle;
use crate::subset::SubsetMask;

/// Canonical phase labels.
pub mod phase {
    pub const DEFAULT: &str = "default";
    pub const FIND_BASE: &str = "find_base";
    pub const MATRIX_BUILD: &str = "matrix_build";
    pub const GROVER_SUCCESS: &str = "grover_success";
    pub const GROVER_FAIL: &str = "grover_fail";
    pub const WITNESS_CHECK: &str = "witness_check";
    pub const BRUTE_FORCE: &str = "brute_force";
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseCount {
    pub label: String,
    pub classical: u64,
    pub quantum_charged: u64,
}

/// Ordered per-phase query counts. Totals are always the sums over phases.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QueryLedger {
    phases: Vec<PhaseCount>,
}

impl QueryLedger {
    pub fn new() -> Self {
        Self::default()
    }

    fn phase_mut(&mut self, label: &str) -> &mut PhaseCount {
        let pos = match self.phases.iter().position(|p| p.label == label) {
            Some(pos) => pos,
            None => {
                self.phases.push(PhaseCount {
                    label: label.to_owned(),
                    classical: 0,
                    quantum_charged: 0,
                });
                self.phases.len() - 1
            }
        };
        &mut self.phases[pos]
    }

    pub fn record_classical(&mut self, label: &str, count: u64) {
        self.phase_mut(label).classical += count;
    }

    /// Adds `amount` modeled quantum queries under `label`. Charges are
    /// unsigned, so a ledger can never decrease.
    pub fn charge_quantum(&mut self, amount: u64, label: &str) {
        self.phase_mut(label).quantum_charged += amount;
    }

    pub fn classical(&self) -> u64 {
        self.phases.iter().map(|p| p.classical).sum()
    }

    pub fn quantum_charged(&self) -> u64 {
        self.phases.iter().map(|p| p.quantum_charged).sum()
    }

    pub fn phases(&self) -> &[PhaseCount] {
        &self.phases
    }

    pub fn phase(&self, label: &str) -> Option<&PhaseCount> {
        self.phases.iter().find(|p| p.label == label)
    }

    /// Classical queries outside the given phase.
    pub fn classical_excluding(&self, label: &str) -> u64 {
        self.phases
            .iter()
            .filter(|p| p.label != label)
            .map(|p| p.classical)
            .sum()
    }

    /// Appends another ledger's phases, merging equal labels.
    pub fn absorb(&mut self, other: &QueryLedger) {
        for p in &other.phases {
            let mine = self.phase_mut(&p.label);
            mine.classical += p.classical;
            mine.quantum_charged += p.quantum_charged;
        }
    }
}

/// Wraps an oracle and counts every independence query.
///
/// Answers are forwarded unchanged. The ledger lives in a `RefCell`, so a
/// `CountingOracle` is deliberately `!Sync`: one live ledger per run.
pub struct CountingOracle<M> {
    inner: M,
    ledger: RefCell<QueryLedger>,
    current: RefCell<String>,
}

impl<M: MatroidOracle> CountingOracle<M> {
    pub fn new(inner: M) -> Self {
        CountingOracle {
            inner,
            ledger: RefCell::new(QueryLedger::new()),
            current: RefCell::new(phase::DEFAULT.to_owned()),
        }
    }

    /// Routes subsequent queries to `label`.
    pub fn set_phase(&self, label: &str) {
        *self.current.borrow_mut() = label.to_owned();
    }

    /// Runs `f` with queries routed to `label`, then restores the previous phase.
    pub fn in_phase<T>(&self, label: &str, f: impl FnOnce(&Self) -> T) -> T {
        let previous = self.current.replace(label.to_owned());
        let out = f(self);
        *self.current.borrow_mut() = previous;
        out
    }

    pub fn charge_quantum(&self, amount: u64, label: &str) {
        self.ledger.borrow_mut().charge_quantum(amount, label);
    }

    /// Snapshot of the ledger.
    pub fn ledger(&self) -> QueryLedger {
        self.ledger.borrow().clone()
    }

    pub fn into_ledger(self) -> QueryLedger {
        self.ledger.into_inner()
    }

    /// The wrapped oracle. Queries made through it are not metered.
    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<M: MatroidOracle> MatroidOracle for CountingOracle<M> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn is_independent(&self, set: &SubsetMask) -> bool {
        let current = self.current.borrow();
        self.ledger.borrow_mut().record_classical(&current, 1);
        self.inner.is_independent(set)
    }

    fn known_bases(&self) -> Option<Vec<SubsetMask>> {
        self.inner.known_bases()
    }
}
