//! Constructive pieces of the query lower bounds: the hard input
//! distribution over a minimal matroid and its removed-base neighbors, a
//! probing distinguisher for that distribution, the truth-table encoding of
//! a matroid, and the adversary-relation parameters computed on it.

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::families::{FamilyMatroid, MinimalMatroid, RemovedBaseMatroid};
use crate::oracle::{check_cap, MatroidOracle};
use crate::subset::SubsetMask;

pub const CHI_CAP: usize = 14;
pub const ADVERSARY_CAP: usize = 10;

/// Truth table of the independence predicate: bit `m` is 1 iff the subset
/// whose element `i` is present exactly when bit `i` of `m` is set is
/// independent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChiString {
    n: usize,
    bits: Vec<bool>,
}

impl ChiString {
    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, index: usize) -> bool {
        self.bits[index]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Positions where the two strings differ. Both must share `n`.
    pub fn differing_positions(&self, other: &ChiString) -> Vec<usize> {
        assert_eq!(self.n, other.n, "chi strings over different ground sets");
        self.bits
            .iter()
            .zip(&other.bits)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn hamming(&self, other: &ChiString) -> usize {
        self.differing_positions(other).len()
    }

    /// True iff every subset of an encoded independent set is encoded as
    /// independent (including `∅` whenever anything is independent).
    pub fn is_downward_closed(&self) -> bool {
        (0..self.bits.len()).all(|m| {
            !self.bits[m] || (0..self.n).all(|i| m >> i & 1 == 0 || self.bits[m & !(1 << i)])
        })
    }
}

impl std::fmt::Display for ChiString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Encodes `m` with `2^n` oracle calls.
pub fn chi_encode<M: MatroidOracle + ?Sized>(m: &M) -> Result<ChiString> {
    let n = m.ground_size();
    check_cap("chi_encode", n, CHI_CAP)?;
    let bits = (0u64..1 << n)
        .map(|b| m.is_independent(&SubsetMask::from_bits(n, b)))
        .collect();
    Ok(ChiString { n, bits })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Connected,
    Disconnected,
}

/// One draw from the hard distribution.
#[derive(Debug, Clone)]
pub struct MuSample {
    pub n: usize,
    pub r: usize,
    pub instance: FamilyMatroid,
    pub label: Label,
    /// Canonical index of the removed base, for disconnected draws.
    pub removed_index: Option<usize>,
}

/// Draws `i` uniformly from the `N = r(n - r) + 1` canonical bases, then
/// with a fair coin returns either the minimal matroid or the matroid with
/// base `i` removed.
pub fn mu_sample<R: Rng + ?Sized>(n: usize, r: usize, rng: &mut R) -> Result<MuSample> {
    let parent = MinimalMatroid::new(n, r)?;
    let i = rng.gen_range(0..parent.base_count());
    if rng.gen_bool(0.5) {
        Ok(MuSample {
            n,
            r,
            instance: parent.into(),
            label: Label::Connected,
            removed_index: None,
        })
    } else {
        Ok(MuSample {
            n,
            r,
            instance: RemovedBaseMatroid::from_index(n, r, i)?.into(),
            label: Label::Disconnected,
            removed_index: Some(i),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Judgement {
    Correct,
    Incorrect,
}

/// Probes `t` distinct canonical bases of the parent, chosen uniformly.
/// Answers "disconnected" if any probe is dependent, otherwise
/// "connected", and reports whether that matched the sample's label.
///
/// Over the hard distribution this succeeds with probability
/// `1/2 + t/(2N)`: it is always right on the minimal matroid and right on a
/// removed-base matroid exactly when the removed base was probed.
pub fn probe_distinguisher<R: Rng + ?Sized>(
    sample: &MuSample,
    t: usize,
    rng: &mut R,
) -> Result<Judgement> {
    let parent = MinimalMatroid::new(sample.n, sample.r)?;
    let bases = parent.canonical_bases();
    if t > bases.len() {
        return Err(Error::TooManyProbes {
            t,
            bases: bases.len(),
        });
    }
    let hit = index::sample(rng, bases.len(), t)
        .into_iter()
        .any(|k| !sample.instance.is_independent(&bases[k]));
    let guess = if hit {
        Label::Disconnected
    } else {
        Label::Connected
    };
    Ok(if guess == sample.label {
        Judgement::Correct
    } else {
        Judgement::Incorrect
    })
}

/// `1/2 + t/(2N)` with `N = r(n - r) + 1`.
pub fn predicted_success(n: usize, r: usize, t: usize) -> f64 {
    let bases = (r * (n - r) + 1) as f64;
    0.5 + t as f64 / (2.0 * bases)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdversaryParameters {
    pub m: usize,
    pub m_prime: usize,
    pub l: usize,
    pub l_prime: usize,
    /// `√(m·m' / (l·l'))`
    pub bound: f64,
}

/// Adversary-relation parameters for explicit input sets `xs`, `ys` and a
/// relation `R ⊆ X × Y` given as index pairs.
pub fn relation_parameters(
    xs: &[ChiString],
    ys: &[ChiString],
    relation: &[(usize, usize)],
) -> AdversaryParameters {
    let width = xs.first().or(ys.first()).map_or(0, ChiString::len);
    let mut x_degree = vec![0usize; xs.len()];
    let mut y_degree = vec![0usize; ys.len()];
    let mut x_bit = vec![vec![0usize; width]; xs.len()];
    let mut y_bit = vec![vec![0usize; width]; ys.len()];
    for &(xi, yi) in relation {
        x_degree[xi] += 1;
        y_degree[yi] += 1;
        for pos in xs[xi].differing_positions(&ys[yi]) {
            x_bit[xi][pos] += 1;
            y_bit[yi][pos] += 1;
        }
    }
    let m = x_degree.iter().copied().min().unwrap_or(0);
    let m_prime = y_degree.iter().copied().min().unwrap_or(0);
    let l = x_bit.iter().flatten().copied().max().unwrap_or(0);
    let l_prime = y_bit.iter().flatten().copied().max().unwrap_or(0);
    let bound = ((m * m_prime) as f64 / (l.max(1) * l_prime.max(1)) as f64).sqrt();
    AdversaryParameters {
        m,
        m_prime,
        l,
        l_prime,
        bound,
    }
}

/// Parameters for `X = {χ(minimal(n, r))}`, `Y = {χ(M_B)}` over every base
/// `B`, and `R = X × Y`.
pub fn adversary_parameters(n: usize, r: usize) -> Result<AdversaryParameters> {
    check_cap("adversary_parameters", n, ADVERSARY_CAP)?;
    let parent = MinimalMatroid::new(n, r)?;
    let xs = vec![chi_encode(&parent)?];
    let ys = (0..parent.base_count())
        .map(|i| chi_encode(&RemovedBaseMatroid::from_index(n, r, i)?))
        .collect::<Result<Vec<_>>>()?;
    let relation: Vec<(usize, usize)> = (0..ys.len()).map(|y| (0, y)).collect();
    Ok(relation_parameters(&xs, &ys, &relation))
}
