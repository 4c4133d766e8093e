//! Exhaustive checks of the independence, base and circuit axioms over
//! explicit set families.

use std::collections::HashSet;

use crate::error::Result;
use crate::oracle::check_cap;
use crate::subset::SubsetMask;

/// Checks I0 (`∅` independent), I1 (downward closure) and I2 (augmentation)
/// for an explicit family of subsets of an `n`-element ground set.
///
/// A family containing a mask over a different ground set fails.
pub fn verify_independence_axioms(family: &[SubsetMask], n: usize) -> Result<bool> {
    check_cap("verify_independence_axioms", n, 12)?;
    if family.iter().any(|s| s.ground_size() != n) {
        return Ok(false);
    }
    let members: HashSet<&SubsetMask> = family.iter().collect();

    // I0
    if !members.contains(&SubsetMask::empty(n)) {
        return Ok(false);
    }
    // I1: closure under single-element deletion implies closure under subsets.
    for a in &members {
        if a.iter().any(|x| !members.contains(&a.without(x))) {
            return Ok(false);
        }
    }
    // I2
    for a in &members {
        for b in &members {
            if a.cardinality() >= b.cardinality() {
                continue;
            }
            let augmentable = b.difference(a).iter().any(|x| members.contains(&a.with(x)));
            if !augmentable {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the exchange axiom (B1) over all ordered pairs of bases:
/// for `x ∈ B1 - B2` some `y ∈ B2 - B1` has `B1 + y - x` in the family.
///
/// An empty collection is not the base family of any matroid.
pub fn verify_base_axiom_b1(bases: &[SubsetMask]) -> bool {
    let Some(first) = bases.first() else {
        return false;
    };
    let n = first.ground_size();
    if bases.iter().any(|b| b.ground_size() != n) {
        return false;
    }
    let members: HashSet<&SubsetMask> = bases.iter().collect();
    for b1 in bases {
        for b2 in bases {
            let gains = b2.difference(b1);
            for x in b1.difference(b2).iter() {
                if !gains.iter().any(|y| members.contains(&b1.exchange(y, x))) {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks (C1) no member properly contains another and (C2) circuit
/// elimination: for distinct `C1, C2` and `z ∈ C1 ∩ C2` some member lies in
/// `(C1 ∪ C2) - z`.
pub fn verify_circuit_axioms(circuits: &[SubsetMask]) -> bool {
    let Some(first) = circuits.first() else {
        return false;
    };
    let n = first.ground_size();
    if circuits.iter().any(|c| c.ground_size() != n) {
        return false;
    }
    let distinct: Vec<&SubsetMask> = {
        let mut seen = HashSet::new();
        circuits.iter().filter(|c| seen.insert(*c)).collect()
    };
    for (i, x) in distinct.iter().enumerate() {
        for (j, y) in distinct.iter().enumerate() {
            if i != j && x.is_subset(y) {
                return false;
            }
        }
    }
    for (i, c1) in distinct.iter().enumerate() {
        for c2 in &distinct[i + 1..] {
            let union = c1.union(c2);
            for z in c1.intersection(c2).iter() {
                let target = union.without(z);
                if !distinct.iter().any(|c3| c3.is_subset(&target)) {
                    return false;
                }
            }
        }
    }
    true
}
