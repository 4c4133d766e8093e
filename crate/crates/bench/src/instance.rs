//! Instance documents: JSON objects tagged by `family`, with 1-based element
//! labels (and 1-based vertices for graphic instances).
//!
//! ```json
//! {"family": "removed_base", "n": 4, "r": 2, "removed": [1, 2]}
//! {"family": "graphic", "vertices": 3, "edges": [[1, 2], [2, 3], [1, 3]]}
//! ```

use std::path::Path;

use matroid_lab::{
    ExplicitBasesMatroid, FamilyMatroid, GraphicMatroid, MatroidOracle, MinimalMatroid,
    RemovedBaseMatroid, SubsetMask, UniformMatroid,
};
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum InstanceSpec {
    Minimal {
        n: usize,
        r: usize,
    },
    RemovedBase {
        n: usize,
        r: usize,
        removed: Vec<usize>,
    },
    Uniform {
        n: usize,
        r: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    ExplicitBases {
        n: usize,
        bases: Vec<Vec<usize>>,
    },
}

impl InstanceSpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            InstanceSpec::Minimal { .. } => "minimal",
            InstanceSpec::RemovedBase { .. } => "removed_base",
            InstanceSpec::Uniform { .. } => "uniform",
            InstanceSpec::Graphic { .. } => "graphic",
            InstanceSpec::ExplicitBases { .. } => "explicit_bases",
        }
    }

    /// Validates the document and constructs the oracle.
    pub fn build(&self) -> Result<FamilyMatroid> {
        Ok(match self {
            InstanceSpec::Minimal { n, r } => MinimalMatroid::new(*n, *r)?.into(),
            InstanceSpec::RemovedBase { n, r, removed } => {
                let removed = labels_to_mask(*n, removed, "removed")?;
                RemovedBaseMatroid::new(*n, *r, removed)?.into()
            }
            InstanceSpec::Uniform { n, r } => {
                if r > n {
                    return Err(BenchError::Invalid(format!(
                        "uniform rank {r} exceeds n = {n}"
                    )));
                }
                UniformMatroid::new(*r, *n).into()
            }
            InstanceSpec::Graphic { vertices, edges } => {
                let zero_based = edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b))| {
                        let shift = |v: usize| {
                            (1..=*vertices).contains(&v).then(|| v - 1).ok_or_else(|| {
                                BenchError::Invalid(format!(
                                    "edges[{i}]: vertex {v} outside 1..={vertices}"
                                ))
                            })
                        };
                        Ok((shift(a)?, shift(b)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                GraphicMatroid::new(*vertices, zero_based)?.into()
            }
            InstanceSpec::ExplicitBases { n, bases } => {
                let masks = bases
                    .iter()
                    .enumerate()
                    .map(|(i, b)| labels_to_mask(*n, b, &format!("bases[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                ExplicitBasesMatroid::new(*n, masks)?.into()
            }
        })
    }
}

fn labels_to_mask(n: usize, labels: &[usize], field: &str) -> Result<SubsetMask> {
    let mut mask = SubsetMask::empty(n);
    for &label in labels {
        let e = matroid_lab::ElementId::from_label(label)
            .filter(|e| e.index() < n)
            .ok_or_else(|| {
                BenchError::Invalid(format!("{field}: element {label} outside 1..={n}"))
            })?;
        if mask.contains(e) {
            return Err(BenchError::Invalid(format!(
                "{field}: element {label} repeated"
            )));
        }
        mask.insert(e);
    }
    Ok(mask)
}

/// Parses a document from text, reporting syntax and shape errors with their
/// line and column.
pub fn parse_instance(text: &str) -> Result<InstanceSpec> {
    serde_json::from_str(text).map_err(|e| BenchError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Reads `source` as inline JSON when it starts with `{`, as standard input
/// when it is `-`, and as a file path otherwise.
pub fn load_instance(source: &str) -> Result<InstanceSpec> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') {
        return parse_instance(trimmed);
    }
    let text = if source == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| BenchError::io("<stdin>", e))?
    } else {
        std::fs::read_to_string(Path::new(source)).map_err(|e| BenchError::io(source, e))?
    };
    parse_instance(&text)
}

/// The rank of the oracle's ground set, found greedily without metering.
pub fn full_rank<M: MatroidOracle + ?Sized>(m: &M) -> usize {
    matroid_lab::find_base(m).cardinality()
}
