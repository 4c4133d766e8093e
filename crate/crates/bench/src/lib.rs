//! Library side of the `matroid-bench` command: instance documents, the
//! per-command runners, CSV/JSON emission, exponent fitting and the SVG plot.

pub mod check;
pub mod error;
pub mod experiments;
pub mod fit;
pub mod generate;
pub mod grid;
pub mod instance;
pub mod svg;

pub use check::{check, check_all, Algorithm, CheckReport};
pub use error::{BenchError, Result};
pub use fit::fit_scaling_exponent;
pub use grid::{run_bench, BenchConfig, BenchFamily, BenchRecord, RankRule};
pub use instance::{load_instance, parse_instance, InstanceSpec};
