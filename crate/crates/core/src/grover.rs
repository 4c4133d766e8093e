//! Query-cost model for Grover search.
//!
//! No amplitudes are simulated. A search over a space of `N` items with `k`
//! marked items is charged `⌈c_success·√(N/k)⌉` when it finds one, and an
//! emptiness determination is charged `repetitions·⌈c_fail·√N⌉`. All
//! charges are integers computed exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroverMode {
    /// Never errs.
    Idealized,
    /// A search with solutions wrongly reports "none" with probability
    /// `failure_prob^repetitions`.
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroverCostModel {
    pub c_success: u64,
    pub c_fail: u64,
    pub repetitions: u32,
    pub mode: GroverMode,
    pub failure_prob: f64,
}

impl Default for GroverCostModel {
    fn default() -> Self {
        GroverCostModel {
            c_success: 1,
            c_fail: 1,
            repetitions: 1,
            mode: GroverMode::Idealized,
            failure_prob: 1.0 / 3.0,
        }
    }
}

impl GroverCostModel {
    pub fn idealized() -> Self {
        Self::default()
    }

    /// Sampled mode with `repetitions` rounds of error reduction per search.
    pub fn sampled(repetitions: u32) -> Self {
        GroverCostModel {
            repetitions,
            mode: GroverMode::Sampled,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.c_success == 0 || self.c_fail == 0 {
            return Err(Error::InvalidCostModel("cost scales must be positive"));
        }
        if self.repetitions == 0 {
            return Err(Error::InvalidCostModel("repetitions must be positive"));
        }
        if !(0.0..1.0).contains(&self.failure_prob) {
            return Err(Error::InvalidCostModel("failure_prob must lie in [0, 1)"));
        }
        Ok(())
    }

    /// `⌈c_success·√(space/k)⌉` for `k > 0`.
    pub fn success_cost(&self, space: usize, k: usize) -> u64 {
        ceil_scaled_sqrt(self.c_success, space as u64, k as u64)
    }

    /// `repetitions·⌈c_fail·√space⌉`.
    pub fn empty_cost(&self, space: usize) -> u64 {
        self.repetitions as u64 * ceil_scaled_sqrt(self.c_fail, space as u64, 1)
    }

    /// Probability that a search with solutions reports none.
    pub fn miss_probability(&self) -> f64 {
        match self.mode {
            GroverMode::Idealized => 0.0,
            GroverMode::Sampled => self.failure_prob.powi(self.repetitions as i32),
        }
    }
}

/// Smallest `t` with `t ≥ c·√(num/den)`, i.e. `t²·den ≥ c²·num`.
pub fn ceil_scaled_sqrt(c: u64, num: u64, den: u64) -> u64 {
    assert!(den > 0);
    let target = (c as u128) * (c as u128) * (num as u128);
    let den = den as u128;
    let mut t = ((target as f64 / den as f64).sqrt().ceil() as u128).saturating_sub(1);
    while t * t * den < target {
        t += 1;
    }
    while t > 0 && (t - 1) * (t - 1) * den >= target {
        t -= 1;
    }
    t as u64
}

/// Randomness for solution selection and sampled-mode misses.
///
/// The deterministic variant always picks the lowest-index solution; its
/// internal generator (fixed seed) is still used for sampled-mode misses.
#[derive(Debug, Clone)]
pub struct SearchRng {
    rng: ChaCha8Rng,
    lowest_first: bool,
}

impl SearchRng {
    pub fn seeded(seed: u64) -> Self {
        SearchRng {
            rng: ChaCha8Rng::seed_from_u64(seed),
            lowest_first: false,
        }
    }

    pub fn deterministic() -> Self {
        SearchRng {
            rng: ChaCha8Rng::seed_from_u64(0),
            lowest_first: true,
        }
    }

    fn pick(&mut self, solutions: &[usize]) -> usize {
        if self.lowest_first {
            solutions[0]
        } else {
            solutions[self.rng.gen_range(0..solutions.len())]
        }
    }

    fn bernoulli(&mut self, p: f64) -> bool {
        p > 0.0 && self.rng.gen::<f64>() < p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroverOutcome {
    pub found: Option<usize>,
    pub cost: u64,
}

/// One modeled Grover search over `0..space` whose marked items are
/// `solutions` (ascending, each `< space`).
pub fn grover_find(
    space: usize,
    solutions: &[usize],
    model: &GroverCostModel,
    rng: &mut SearchRng,
) -> Result<GroverOutcome> {
    if space == 0 {
        return Err(Error::EmptySearchSpace);
    }
    let k = solutions.len();
    if k > space {
        return Err(Error::TooManySolutions { k, space });
    }
    debug_assert!(solutions.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(solutions.iter().all(|&s| s < space));
    if k == 0 || rng.bernoulli(model.miss_probability()) {
        return Ok(GroverOutcome {
            found: None,
            cost: model.empty_cost(space),
        });
    }
    Ok(GroverOutcome {
        found: Some(rng.pick(solutions)),
        cost: model.success_cost(space, k),
    })
}
