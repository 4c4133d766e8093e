use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use matroid_bench::check::{check, check_all, cost_model, parse_grover_mode, Algorithm};
use matroid_bench::error::{BenchError, Result};
use matroid_bench::experiments::{adversary, distinguish};
use matroid_bench::generate::{generate, GenOptions};
use matroid_bench::grid::{
    render_svg, run_bench, slopes, write_csv, write_json, BenchConfig, BenchFamily, RankRule,
};
use matroid_bench::instance::load_instance;
use matroid_lab::{GroverCostModel, GroverMode};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "matroid-bench",
    version,
    about = "Matroid connectivity query-count experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct GroverArgs {
    /// Scale applied to both Grover cost terms
    #[arg(long = "grover-c", default_value_t = 1)]
    grover_c: u64,
    #[arg(long = "grover-mode", default_value = "idealized", value_parser = parse_grover_mode)]
    grover_mode: GroverMode,
    /// Error-reduction rounds per emptiness search
    #[arg(long, default_value_t = 1)]
    repetitions: u32,
}

impl GroverArgs {
    fn model(&self) -> Result<GroverCostModel> {
        cost_model(self.grover_c, self.grover_mode, self.repetitions)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Write an instance document
    Gen {
        #[arg(long)]
        family: BenchFamily,
        /// Ground-set size (edge count for graphic)
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Removed base as 1-based labels, e.g. 1,3
        #[arg(long, value_delimiter = ',')]
        removed: Option<Vec<usize>>,
        /// Canonical index of the removed base
        #[arg(long)]
        index: Option<usize>,
        #[arg(long)]
        vertices: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide connectivity of one instance and print the verdict as JSON
    Check {
        /// Path, '-' for standard input, or inline JSON
        instance: String,
        /// brute, circuit, classical, quantum, or all
        #[arg(long, default_value = "classical")]
        alg: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        grover: GroverArgs,
    },
    /// Run a scaling grid and emit one record per (n, algorithm, seed)
    Bench {
        #[arg(long, default_value = "minimal")]
        family: BenchFamily,
        /// Comma-separated sizes; omitted means an empty grid
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        /// 'half' or a fixed rank
        #[arg(long, default_value = "half")]
        r: RankRule,
        #[arg(long, value_delimiter = ',', default_value = "classical,quantum")]
        alg: Vec<Algorithm>,
        /// First seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of consecutive seeds per cell
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Also write a log-log SVG of mean cost against n
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write 0 for elapsed_ms so output is bitwise reproducible
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        grover: GroverArgs,
    },
    /// Monte Carlo success rate of the probing distinguisher
    Distinguish {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Adversary-relation parameters for the minimal matroid and its neighbors
    Adversary {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Gen {
            family,
            n,
            r,
            removed,
            index,
            vertices,
            seed,
            out,
        } => {
            let spec = generate(
                family,
                &GenOptions {
                    n,
                    r,
                    removed,
                    index,
                    vertices,
                    seed,
                },
            )?;
            emit_json(out.as_deref(), &spec)
        }
        Command::Check {
            instance,
            alg,
            seed,
            grover,
        } => {
            let spec = load_instance(&instance)?;
            let model = grover.model()?;
            if alg == "all" {
                emit_json(None, &check_all(&spec, &model, seed)?)
            } else {
                let algorithm: Algorithm = alg.parse().map_err(BenchError::Usage)?;
                emit_json(None, &check(&spec, algorithm, &model, seed)?)
            }
        }
        Command::Bench {
            family,
            n,
            r,
            alg,
            seed,
            seeds,
            out,
            format,
            svg,
            no_timing,
            grover,
        } => {
            let config = BenchConfig {
                family,
                ns: n,
                rank: r,
                algorithms: alg,
                seeds: (seed..seed + seeds).collect(),
                model: grover.model()?,
                timing: !no_timing,
            };
            let records = run_bench(&config)?;
            let mut sink = open_sink(out.as_deref())?;
            match format {
                Format::Csv => write_csv(&mut sink, &records)?,
                Format::Json => write_json(&mut sink, &records)?,
            }
            sink.flush()
                .map_err(|e| BenchError::io(display(out.as_deref()), e))?;
            if let Some(path) = svg {
                std::fs::write(&path, render_svg("mean cost vs n", &records))
                    .map_err(|e| BenchError::io(&path, e))?;
            }
            for s in slopes(&records) {
                match s.slope {
                    Some(v) => eprintln!("{}: slope {v:.4} over {} sizes", s.algorithm, s.points),
                    None => eprintln!("{}: no slope ({} sizes)", s.algorithm, s.points),
                }
            }
            Ok(())
        }
        Command::Distinguish {
            n,
            r,
            t,
            trials,
            seed,
        } => emit_json(None, &distinguish(n, r, t, trials, seed)?),
        Command::Adversary { n, r } => emit_json(None, &adversary(n, r)?),
    }
}

fn open_sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| BenchError::io(p, e))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn display(path: Option<&Path>) -> PathBuf {
    path.map_or_else(|| PathBuf::from("<stdout>"), Path::to_path_buf)
}

fn emit_json<T: Serialize>(path: Option<&Path>, value: &T) -> Result<()> {
    let mut sink = open_sink(path)?;
    serde_json::to_writer_pretty(&mut sink, value)
        .map_err(|e| BenchError::io(display(path), e.into()))?;
    writeln!(sink).map_err(|e| BenchError::io(display(path), e))?;
    sink.flush().map_err(|e| BenchError::io(display(path), e))
}
