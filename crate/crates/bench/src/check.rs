use std::fmt;
use std::str::FromStr;

use matroid_lab::brute::{BRUTE_FORCE_CAP, CIRCUIT_CAP};
use matroid_lab::{
    brute_force_connected, circuit_pairwise_connected, cunningham_connected, quantum_dfs_connected,
    ConnectivityVerdict, CountingOracle, GroverCostModel, GroverMode, MatroidOracle, QueryLedger,
    SearchRng,
};
use serde::Serialize;

use crate::error::{BenchError, Result};
use crate::instance::{full_rank, InstanceSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Brute,
    Circuit,
    Classical,
    Quantum,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Brute,
        Algorithm::Circuit,
        Algorithm::Classical,
        Algorithm::Quantum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::Circuit => "circuit",
            Algorithm::Classical => "classical",
            Algorithm::Quantum => "quantum",
        }
    }

    /// Largest ground set the algorithm accepts, if capped.
    pub fn cap(self) -> Option<usize> {
        match self {
            Algorithm::Brute => Some(BRUTE_FORCE_CAP),
            Algorithm::Circuit => Some(CIRCUIT_CAP),
            Algorithm::Classical | Algorithm::Quantum => None,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm '{s}' (brute, circuit, classical, quantum)"))
    }
}

/// Grover cost model from command-line settings.
pub fn cost_model(c: u64, mode: GroverMode, repetitions: u32) -> Result<GroverCostModel> {
    let model = GroverCostModel {
        c_success: c,
        c_fail: c,
        repetitions,
        mode,
        ..GroverCostModel::default()
    };
    model.validate()?;
    Ok(model)
}

pub fn parse_grover_mode(s: &str) -> std::result::Result<GroverMode, String> {
    match s {
        "idealized" => Ok(GroverMode::Idealized),
        "sampled" => Ok(GroverMode::Sampled),
        other => Err(format!(
            "unknown grover mode '{other}' (idealized, sampled)"
        )),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhaseReport {
    pub label: String,
    pub classical: u64,
    pub quantum_charged: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub family: String,
    pub n: usize,
    pub r: usize,
    pub algorithm: String,
    pub connected: bool,
    /// 1-based labels of the two sides of a separation, when one is known
    pub witness: Option<[Vec<usize>; 2]>,
    pub classical_queries: u64,
    pub quantum_charged: u64,
    pub phases: Vec<PhaseReport>,
    pub seed: u64,
}

/// Runs one decider on `m`, which was built from a document of `family`.
pub fn run_algorithm<M: MatroidOracle + ?Sized>(
    m: &M,
    family: &str,
    algorithm: Algorithm,
    model: &GroverCostModel,
    seed: u64,
) -> Result<CheckReport> {
    let verdict = match algorithm {
        Algorithm::Brute => brute_force_connected(m)?,
        Algorithm::Circuit => {
            let counted = CountingOracle::new(m);
            let connected = circuit_pairwise_connected(&counted)?;
            let ledger = counted.into_ledger();
            if connected {
                ConnectivityVerdict::connected(ledger)
            } else {
                ConnectivityVerdict::disconnected(None, ledger)
            }
        }
        Algorithm::Classical => cunningham_connected(m)?,
        Algorithm::Quantum => quantum_dfs_connected(m, model, &mut SearchRng::seeded(seed))?,
    };
    Ok(CheckReport {
        family: family.to_string(),
        n: m.ground_size(),
        r: full_rank(m),
        algorithm: algorithm.name().to_string(),
        connected: verdict.connected,
        witness: verdict
            .witness
            .as_ref()
            .map(|(a, b)| [a.labels(), b.labels()]),
        classical_queries: verdict.ledger.classical(),
        quantum_charged: verdict.ledger.quantum_charged(),
        phases: phases(&verdict.ledger),
        seed,
    })
}

fn phases(ledger: &QueryLedger) -> Vec<PhaseReport> {
    ledger
        .phases()
        .iter()
        .map(|p| PhaseReport {
            label: p.label.clone(),
            classical: p.classical,
            quantum_charged: p.quantum_charged,
        })
        .collect()
}

pub fn check(
    spec: &InstanceSpec,
    algorithm: Algorithm,
    model: &GroverCostModel,
    seed: u64,
) -> Result<CheckReport> {
    let m = spec.build()?;
    run_algorithm(&m, spec.family_name(), algorithm, model, seed)
}

/// Runs every algorithm whose cap admits the instance and fails with an
/// invariant violation if their verdicts differ.
pub fn check_all(
    spec: &InstanceSpec,
    model: &GroverCostModel,
    seed: u64,
) -> Result<Vec<CheckReport>> {
    let m = spec.build()?;
    let n = m.ground_size();
    let reports = Algorithm::ALL
        .into_iter()
        .filter(|a| a.cap().is_none_or(|cap| n <= cap))
        .map(|a| run_algorithm(&m, spec.family_name(), a, model, seed))
        .collect::<Result<Vec<_>>>()?;
    if reports.iter().any(|r| r.connected != reports[0].connected) {
        let verdicts: Vec<String> = reports
            .iter()
            .map(|r| format!("{}={}", r.algorithm, r.connected))
            .collect();
        return Err(BenchError::Invariant(format!(
            "deciders disagree: {}",
            verdicts.join(", ")
        )));
    }
    Ok(reports)
}
