//! Monte Carlo and exact experiments on the hard distribution.

use matroid_lab::lowerbound::{
    adversary_parameters, mu_sample, predicted_success, probe_distinguisher, Judgement,
};
use matroid_lab::MinimalMatroid;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;

/// Trials per independent rng stream.
const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistinguishReport {
    pub n: usize,
    pub r: usize,
    pub t: usize,
    pub bases: usize,
    pub trials: usize,
    pub correct: usize,
    pub empirical_success: f64,
    pub predicted: f64,
}

/// Runs `trials` draws of the hard distribution against the probing
/// distinguisher. Chunk `c` of the trials uses stream `c` of a generator
/// seeded with `seed`, so the result does not depend on thread scheduling.
pub fn distinguish(
    n: usize,
    r: usize,
    t: usize,
    trials: usize,
    seed: u64,
) -> Result<DistinguishReport> {
    let bases = MinimalMatroid::new(n, r)?.base_count();
    if t > bases {
        return Err(matroid_lab::Error::TooManyProbes { t, bases }.into());
    }
    let chunks = trials.div_ceil(CHUNK);
    let correct = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let len = CHUNK.min(trials - c * CHUNK);
            let mut ok = 0;
            for _ in 0..len {
                let sample = mu_sample(n, r, &mut rng)?;
                if probe_distinguisher(&sample, t, &mut rng)? == Judgement::Correct {
                    ok += 1;
                }
            }
            Ok(ok)
        })
        .collect::<matroid_lab::Result<Vec<usize>>>()?
        .into_iter()
        .sum();
    Ok(DistinguishReport {
        n,
        r,
        t,
        bases,
        trials,
        correct,
        empirical_success: if trials == 0 {
            0.0
        } else {
            correct as f64 / trials as f64
        },
        predicted: predicted_success(n, r, t),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdversaryReport {
    pub n: usize,
    pub r: usize,
    pub m: usize,
    pub m_prime: usize,
    pub l: usize,
    pub l_prime: usize,
    pub bound: f64,
}

pub fn adversary(n: usize, r: usize) -> Result<AdversaryReport> {
    let p = adversary_parameters(n, r)?;
    Ok(AdversaryReport {
        n,
        r,
        m: p.m,
        m_prime: p.m_prime,
        l: p.l,
        l_prime: p.l_prime,
        bound: p.bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        let all = distinguish(12, 6, 37, 1000, 1).unwrap();
        assert_eq!(all.correct, 1000);
        let none = distinguish(12, 6, 0, 1000, 1).unwrap();
        assert!((none.empirical_success - 0.5).abs() < 0.06);
        assert!(distinguish(12, 6, 38, 10, 1).is_err());
    }

    #[test]
    fn seed_determines_result() {
        let a = distinguish(8, 4, 5, 10_000, 9).unwrap();
        assert_eq!(a, distinguish(8, 4, 5, 10_000, 9).unwrap());
    }

    #[test]
    fn adversary_small() {
        let a = adversary(4, 2).unwrap();
        assert_eq!((a.m, a.m_prime, a.l, a.l_prime), (5, 1, 1, 1));
        assert_eq!(adversary(11, 5).unwrap_err().exit_code(), 2);
    }
}
