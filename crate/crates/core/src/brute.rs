//! Exponential reference deciders for small ground sets.
//!
//! These define connectivity directly (rank inequality over every
//! separation, or circuit coverage of every pair) and serve as independent
//! oracles for the fast deciders.

use crate::error::Result;
use crate::ledger::{phase, CountingOracle};
use crate::oracle::{check_cap, rank, MatroidOracle};
use crate::subset::{all_subsets, SubsetMask};
use crate::verdict::ConnectivityVerdict;

pub const BRUTE_FORCE_CAP: usize = 20;
pub const CIRCUIT_CAP: usize = 12;

/// Decides connectivity from the definition: every nonempty proper `A` must
/// satisfy `r(A) + r(E - A) > r(E)`.
///
/// The witness is the first violating `(A, E - A)` in mask order. Ground sets
/// with fewer than two elements are connected.
pub fn brute_force_connected<M: MatroidOracle + ?Sized>(m: &M) -> Result<ConnectivityVerdict> {
    let n = m.ground_size();
    check_cap("brute_force_connected", n, BRUTE_FORCE_CAP)?;
    let oracle = CountingOracle::new(m);
    oracle.set_phase(phase::BRUTE_FORCE);
    let full = SubsetMask::full(n);
    let total = rank(&oracle, &full);
    let proper = (1u64 << n).saturating_sub(1);
    for bits in 1..proper {
        let a = SubsetMask::from_bits(n, bits);
        let rest = a.complement();
        if rank(&oracle, &a) + rank(&oracle, &rest) == total {
            return Ok(ConnectivityVerdict::disconnected(
                Some((a, rest)),
                oracle.into_ledger(),
            ));
        }
    }
    Ok(ConnectivityVerdict::connected(oracle.into_ledger()))
}

/// All circuits (minimal dependent sets), in mask order.
pub fn enumerate_circuits<M: MatroidOracle + ?Sized>(m: &M) -> Result<Vec<SubsetMask>> {
    let n = m.ground_size();
    check_cap("enumerate_circuits", n, CIRCUIT_CAP)?;
    let independent: Vec<bool> = all_subsets(n).map(|s| m.is_independent(&s)).collect();
    Ok((0u64..1 << n)
        .filter(|&bits| {
            !independent[bits as usize]
                && (0..n).all(|i| bits >> i & 1 == 0 || independent[(bits & !(1 << i)) as usize])
        })
        .map(|bits| SubsetMask::from_bits(n, bits))
        .collect())
}

/// True iff every pair of distinct elements lies on a common circuit.
pub fn circuit_pairwise_connected<M: MatroidOracle + ?Sized>(m: &M) -> Result<bool> {
    let n = m.ground_size();
    let circuits = enumerate_circuits(m)?;
    let mut covered = vec![false; n * n];
    for c in &circuits {
        let elems: Vec<usize> = c.iter().map(|e| e.0).collect();
        for &x in &elems {
            for &y in &elems {
                covered[x * n + y] = true;
            }
        }
    }
    Ok((0..n).all(|x| (0..n).all(|y| x == y || covered[x * n + y])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::families::{MinimalMatroid, RemovedBaseMatroid, UniformMatroid};

    fn set(n: usize, labels: &[usize]) -> SubsetMask {
        SubsetMask::from_labels(n, labels.iter().copied()).unwrap()
    }

    #[test]
    fn brute_force_examples() {
        let m = MinimalMatroid::new(4, 2).unwrap();
        assert!(brute_force_connected(&m).unwrap().connected);

        let mb = RemovedBaseMatroid::new(4, 2, set(4, &[1, 2])).unwrap();
        let v = brute_force_connected(&mb).unwrap();
        assert!(!v.connected);
        assert_eq!(v.witness, Some((set(4, &[1, 2]), set(4, &[3, 4]))));

        assert!(
            brute_force_connected(&UniformMatroid::free(1))
                .unwrap()
                .connected
        );
        assert!(
            brute_force_connected(&UniformMatroid::free(0))
                .unwrap()
                .connected
        );
    }

    #[test]
    fn brute_force_cap() {
        let err = brute_force_connected(&UniformMatroid::new(3, 21)).unwrap_err();
        assert!(matches!(err, Error::TooLarge { cap: 20, .. }));
    }

    #[test]
    fn circuits_of_minimal() {
        let m = MinimalMatroid::new(4, 2).unwrap();
        let mut got = enumerate_circuits(&m).unwrap();
        got.sort();
        let mut want = vec![set(4, &[1, 2, 3]), set(4, &[1, 2, 4]), set(4, &[3, 4])];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn circuit_pairwise_examples() {
        assert!(circuit_pairwise_connected(&MinimalMatroid::new(4, 2).unwrap()).unwrap());
        assert!(!circuit_pairwise_connected(&UniformMatroid::new(2, 2)).unwrap());
        let mb = RemovedBaseMatroid::new(4, 2, set(4, &[1, 2])).unwrap();
        assert!(!circuit_pairwise_connected(&mb).unwrap());
        assert!(circuit_pairwise_connected(&UniformMatroid::new(1, 13)).is_err());
    }
}
