use std::fmt;

use crate::ledger::{phase, QueryLedger};
use crate::subset::SubsetMask;

/// Outcome of a connectivity decision.
///
/// When `witness` is present the matroid is disconnected and
/// `r(E1) + r(E2) = r(E)` holds for the pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityVerdict {
    pub connected: bool,
    pub witness: Option<(SubsetMask, SubsetMask)>,
    pub ledger: QueryLedger,
}

impl ConnectivityVerdict {
    pub fn connected(ledger: QueryLedger) -> Self {
        ConnectivityVerdict {
            connected: true,
            witness: None,
            ledger,
        }
    }

    pub fn disconnected(witness: Option<(SubsetMask, SubsetMask)>, ledger: QueryLedger) -> Self {
        ConnectivityVerdict {
            connected: false,
            witness,
            ledger,
        }
    }

    /// Classical queries spent deciding, excluding witness verification.
    pub fn decision_queries(&self) -> u64 {
        self.ledger.classical_excluding(phase::WITNESS_CHECK)
    }
}

impl fmt::Display for ConnectivityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.connected {
            write!(f, "connected")?;
        } else {
            write!(f, "disconnected")?;
        }
        if let Some((a, b)) = &self.witness {
            write!(f, " ({a} | {b})")?;
        }
        write!(
            f,
            " [classical={}, quantum={}]",
            self.ledger.classical(),
            self.ledger.quantum_charged()
        )
    }
}
