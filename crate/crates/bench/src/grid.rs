//! Scaling benchmarks: one record per (n, algorithm, seed) cell.

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use matroid_lab::{GroverCostModel, MinimalMatroid};
use rayon::prelude::*;
use serde::Serialize;

use crate::check::{check, Algorithm};
use crate::error::{BenchError, Result};
use crate::fit::fit_scaling_exponent;
use crate::instance::InstanceSpec;
use crate::svg::{render_loglog, Series};

pub const CSV_SCHEMA: &str = "# matroid-bench csv v1";
pub const CSV_COLUMNS: [&str; 9] = [
    "family",
    "n",
    "r",
    "algorithm",
    "connected",
    "classical_queries",
    "quantum_charged",
    "seed",
    "elapsed_ms",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub family: String,
    pub n: usize,
    pub r: usize,
    pub algorithm: String,
    pub connected: bool,
    pub classical_queries: u64,
    pub quantum_charged: u64,
    pub seed: u64,
    pub elapsed_ms: f64,
}

impl BenchRecord {
    /// The count the algorithm is measured by: quantum charge for the DFS,
    /// oracle calls otherwise.
    pub fn cost(&self) -> u64 {
        if self.algorithm == Algorithm::Quantum.name() {
            self.quantum_charged
        } else {
            self.classical_queries
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchFamily {
    Minimal,
    RemovedBase,
    Uniform,
    Graphic,
    ExplicitBases,
}

impl FromStr for BenchFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "minimal" => Ok(BenchFamily::Minimal),
            "removed_base" => Ok(BenchFamily::RemovedBase),
            "uniform" => Ok(BenchFamily::Uniform),
            "graphic" => Ok(BenchFamily::Graphic),
            "explicit_bases" => Ok(BenchFamily::ExplicitBases),
            other => Err(format!(
                "unknown family '{other}' (minimal, removed_base, uniform, graphic, explicit_bases)"
            )),
        }
    }
}

/// How the rank is chosen from `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankRule {
    Half,
    Fixed(usize),
}

impl RankRule {
    pub fn rank(self, n: usize) -> usize {
        match self {
            RankRule::Half => n / 2,
            RankRule::Fixed(r) => r,
        }
    }
}

impl FromStr for RankRule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "half" {
            return Ok(RankRule::Half);
        }
        s.parse()
            .map(RankRule::Fixed)
            .map_err(|_| format!("rank rule must be 'half' or an integer, got '{s}'"))
    }
}

/// The benchmark instance of `family` at size `n`.
///
/// `removed_base` removes `E0` (the one removal that leaves a matroid),
/// `graphic` is the cycle on `n` vertices, and `explicit_bases` lists the
/// bases of the minimal matroid.
pub fn bench_instance(family: BenchFamily, n: usize, rule: RankRule) -> Result<InstanceSpec> {
    let r = rule.rank(n);
    Ok(match family {
        BenchFamily::Minimal => InstanceSpec::Minimal { n, r },
        BenchFamily::RemovedBase => InstanceSpec::RemovedBase {
            n,
            r,
            removed: (1..=r).collect(),
        },
        BenchFamily::Uniform => InstanceSpec::Uniform { n, r },
        BenchFamily::Graphic => InstanceSpec::Graphic {
            vertices: n,
            edges: (1..=n).map(|v| (v, v % n + 1)).collect(),
        },
        BenchFamily::ExplicitBases => InstanceSpec::ExplicitBases {
            n,
            bases: MinimalMatroid::new(n, r)?
                .canonical_bases()
                .iter()
                .map(|b| b.labels())
                .collect(),
        },
    })
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: BenchFamily,
    pub ns: Vec<usize>,
    pub rank: RankRule,
    pub algorithms: Vec<Algorithm>,
    pub seeds: Vec<u64>,
    pub model: GroverCostModel,
    pub timing: bool,
}

/// Runs every cell, in parallel, and returns the records ordered by
/// (n, algorithm, seed) as listed in the configuration.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let specs = config
        .ns
        .iter()
        .map(|&n| bench_instance(config.family, n, config.rank))
        .collect::<Result<Vec<_>>>()?;
    let cells: Vec<(&InstanceSpec, Algorithm, u64)> = specs
        .iter()
        .flat_map(|spec| {
            config
                .algorithms
                .iter()
                .flat_map(move |&a| config.seeds.iter().map(move |&s| (spec, a, s)))
        })
        .collect();
    cells
        .into_par_iter()
        .map(|(spec, algorithm, seed)| {
            let start = Instant::now();
            let report = check(spec, algorithm, &config.model, seed)?;
            let elapsed_ms = if config.timing {
                start.elapsed().as_secs_f64() * 1000.0
            } else {
                0.0
            };
            Ok(BenchRecord {
                family: report.family,
                n: report.n,
                r: report.r,
                algorithm: report.algorithm,
                connected: report.connected,
                classical_queries: report.classical_queries,
                quantum_charged: report.quantum_charged,
                seed,
                elapsed_ms,
            })
        })
        .collect()
}

/// Schema comment, header row, then one row per record.
pub fn write_csv<W: Write>(out: W, records: &[BenchRecord]) -> Result<()> {
    let mut out = out;
    writeln!(out, "{CSV_SCHEMA}").map_err(|e| BenchError::io("<csv>", e))?;
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| BenchError::io("<csv>", e))?;
    Ok(())
}

pub fn write_json<W: Write>(mut out: W, records: &[BenchRecord]) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, records)
        .map_err(|e| BenchError::io("<json>", e.into()))?;
    writeln!(out).map_err(|e| BenchError::io("<json>", e))
}

/// Mean cost per `n` for each algorithm, in configuration order.
pub fn mean_costs(records: &[BenchRecord]) -> Vec<(String, Vec<(f64, f64)>)> {
    let mut order: Vec<String> = Vec::new();
    let mut sums: BTreeMap<(String, usize), (f64, usize)> = BTreeMap::new();
    for r in records {
        if !order.contains(&r.algorithm) {
            order.push(r.algorithm.clone());
        }
        let e = sums.entry((r.algorithm.clone(), r.n)).or_default();
        e.0 += r.cost() as f64;
        e.1 += 1;
    }
    order
        .into_iter()
        .map(|alg| {
            let pts = sums
                .iter()
                .filter(|((a, _), _)| *a == alg)
                .map(|((_, n), (sum, k))| (*n as f64, sum / *k as f64))
                .collect();
            (alg, pts)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeSummary {
    pub algorithm: String,
    pub points: usize,
    /// `None` when fewer than three sizes or a zero mean
    pub slope: Option<f64>,
}

pub fn slopes(records: &[BenchRecord]) -> Vec<SlopeSummary> {
    mean_costs(records)
        .into_iter()
        .map(|(algorithm, pts)| SlopeSummary {
            points: pts.len(),
            slope: fit_scaling_exponent(&pts).ok(),
            algorithm,
        })
        .collect()
}

pub fn render_svg(title: &str, records: &[BenchRecord]) -> String {
    let series: Vec<Series> = mean_costs(records)
        .into_iter()
        .map(|(label, points)| Series { label, points })
        .collect();
    render_loglog(title, &series)
}
