//! The independence-oracle interface and the operations derived from it.
//!
//! Every derived operation scans elements in ascending index order, so the
//! number of oracle calls it makes is a fixed function of its input and can
//! be asserted exactly through a [`CountingOracle`](crate::ledger::CountingOracle).

use crate::error::{Error, Result};
use crate::subset::{ElementId, SubsetMask};

/// Black-box access to a matroid on the ground set `{e1, ..., en}`.
///
/// Implementations must be immutable: answering a query never changes the
/// matroid. Families with a closed-form base list may expose it through
/// [`known_bases`](MatroidOracle::known_bases); that hook is never used by the
/// connectivity deciders.
pub trait MatroidOracle {
    fn ground_size(&self) -> usize;

    fn is_independent(&self, set: &SubsetMask) -> bool;

    fn known_bases(&self) -> Option<Vec<SubsetMask>> {
        None
    }
}

impl<M: MatroidOracle + ?Sized> MatroidOracle for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, set: &SubsetMask) -> bool {
        (**self).is_independent(set)
    }

    fn known_bases(&self) -> Option<Vec<SubsetMask>> {
        (**self).known_bases()
    }
}

impl<M: MatroidOracle + ?Sized> MatroidOracle for Box<M> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, set: &SubsetMask) -> bool {
        (**self).is_independent(set)
    }

    fn known_bases(&self) -> Option<Vec<SubsetMask>> {
        (**self).known_bases()
    }
}

/// Rank of `set`: greedy scan in ascending order, one query per element.
pub fn rank<M: MatroidOracle + ?Sized>(m: &M, set: &SubsetMask) -> usize {
    greedy_independent(m, set).cardinality()
}

/// A maximal independent subset of `set`, built greedily in ascending order.
pub fn greedy_independent<M: MatroidOracle + ?Sized>(m: &M, set: &SubsetMask) -> SubsetMask {
    let mut kept = SubsetMask::empty(m.ground_size());
    for e in set.iter() {
        let candidate = kept.with(e);
        if m.is_independent(&candidate) {
            kept = candidate;
        }
    }
    kept
}

/// A base of `m` found by the greedy scan `e1..en`; exactly `n` queries.
pub fn find_base<M: MatroidOracle + ?Sized>(m: &M) -> SubsetMask {
    greedy_independent(m, &SubsetMask::full(m.ground_size()))
}

/// The fundamental circuit `C(y, B)`: `y` together with every `x ∈ B` for
/// which `B + y - x` is independent. Uses exactly `|B|` queries.
///
/// `base` must be a base of `m`; this is not re-checked.
pub fn fundamental_circuit<M: MatroidOracle + ?Sized>(
    m: &M,
    base: &SubsetMask,
    y: ElementId,
) -> Result<SubsetMask> {
    if base.contains(y) {
        return Err(Error::ElementInBase {
            element: y,
            base: base.clone(),
        });
    }
    let mut circuit = SubsetMask::empty(m.ground_size());
    circuit.insert(y);
    for x in base.iter() {
        if m.is_independent(&base.exchange(y, x)) {
            circuit.insert(x);
        }
    }
    Ok(circuit)
}

/// All independent sets, in mask order. Exhaustive; `n <= 20`.
pub fn enumerate_independent_sets<M: MatroidOracle + ?Sized>(m: &M) -> Result<Vec<SubsetMask>> {
    let n = m.ground_size();
    check_cap("enumerate_independent_sets", n, 20)?;
    Ok(crate::subset::all_subsets(n)
        .filter(|s| m.is_independent(s))
        .collect())
}

pub(crate) fn check_cap(operation: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::TooLarge { operation, n, cap })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{GraphicMatroid, MinimalMatroid, UniformMatroid};
    use crate::ledger::CountingOracle;

    fn set(n: usize, labels: &[usize]) -> SubsetMask {
        SubsetMask::from_labels(n, labels.iter().copied()).unwrap()
    }

    #[test]
    fn minimal_independence_examples() {
        let m = MinimalMatroid::new(4, 2).unwrap();
        assert!(!m.is_independent(&set(4, &[3, 4])));
        assert!(m.is_independent(&SubsetMask::empty(4)));
        assert!(m.is_independent(&set(4, &[1, 3])));
    }

    #[test]
    fn rank_examples() {
        let m = MinimalMatroid::new(4, 2).unwrap();
        assert_eq!(rank(&m, &SubsetMask::full(4)), 2);
        assert_eq!(rank(&m, &SubsetMask::empty(4)), 0);
        assert_eq!(rank(&m, &set(4, &[3, 4])), 1);
    }

    #[test]
    fn rank_uses_one_query_per_element() {
        let m = MinimalMatroid::new(6, 3).unwrap();
        let counted = CountingOracle::new(&m);
        let a = set(6, &[1, 4, 5, 6]);
        rank(&counted, &a);
        assert_eq!(counted.ledger().classical(), 4);
    }

    #[test]
    fn find_base_traces() {
        let m = CountingOracle::new(MinimalMatroid::new(4, 2).unwrap());
        assert_eq!(find_base(&m), set(4, &[1, 2]));
        assert_eq!(m.ledger().classical(), 4);

        let u = CountingOracle::new(UniformMatroid::new(0, 3));
        assert!(find_base(&u).is_empty());
        assert_eq!(u.ledger().classical(), 3);

        let k3 = CountingOracle::new(GraphicMatroid::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap());
        assert_eq!(find_base(&k3), set(3, &[1, 2]));
        assert_eq!(k3.ledger().classical(), 3);
    }

    #[test]
    fn fundamental_circuit_examples() {
        let m = MinimalMatroid::new(4, 2).unwrap();
        let e0 = set(4, &[1, 2]);
        assert_eq!(
            fundamental_circuit(&m, &e0, ElementId(2)).unwrap(),
            set(4, &[1, 2, 3])
        );
        let b = set(4, &[1, 3]);
        assert_eq!(
            fundamental_circuit(&m, &b, ElementId(3)).unwrap(),
            set(4, &[3, 4])
        );
        assert_eq!(
            fundamental_circuit(&m, &b, ElementId(1)).unwrap(),
            set(4, &[1, 2, 3])
        );
    }

    #[test]
    fn fundamental_circuit_rejects_base_element() {
        let m = MinimalMatroid::new(4, 2).unwrap();
        let err = fundamental_circuit(&m, &set(4, &[1, 2]), ElementId(0)).unwrap_err();
        assert!(matches!(err, Error::ElementInBase { .. }));
    }

    #[test]
    fn fundamental_circuit_query_count_is_base_size() {
        let m = CountingOracle::new(MinimalMatroid::new(7, 3).unwrap());
        let b = set(7, &[1, 2, 3]);
        fundamental_circuit(&m, &b, ElementId(5)).unwrap();
        assert_eq!(m.ledger().classical(), 3);
    }
}
