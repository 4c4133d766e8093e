use matroid_lab::MinimalMatroid;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{BenchError, Result};
use crate::grid::BenchFamily;
use crate::instance::InstanceSpec;

#[derive(Debug, Clone, Default)]
pub struct GenOptions {
    pub n: usize,
    pub r: usize,
    /// explicit removed base for `removed_base`, 1-based
    pub removed: Option<Vec<usize>>,
    /// canonical index of the removed base; drawn from `seed` when absent
    pub index: Option<usize>,
    /// vertex count for `graphic`; `n` is the edge count
    pub vertices: Option<usize>,
    pub seed: u64,
}

/// Builds an instance document. `graphic` draws `n` loopless edges uniformly
/// over vertex pairs; `explicit_bases` lists the bases of `minimal(n, r)`.
pub fn generate(family: BenchFamily, opts: &GenOptions) -> Result<InstanceSpec> {
    let GenOptions { n, r, .. } = *opts;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let spec = match family {
        BenchFamily::Minimal => InstanceSpec::Minimal { n, r },
        BenchFamily::Uniform => InstanceSpec::Uniform { n, r },
        BenchFamily::RemovedBase => {
            let parent = MinimalMatroid::new(n, r)?;
            let removed = match (&opts.removed, opts.index) {
                (Some(labels), _) => labels.clone(),
                (None, index) => {
                    let i = index.unwrap_or_else(|| rng.gen_range(0..parent.base_count()));
                    parent
                        .canonical_bases()
                        .get(i)
                        .ok_or_else(|| {
                            BenchError::Usage(format!(
                                "index {i} outside the {} canonical bases",
                                parent.base_count()
                            ))
                        })?
                        .labels()
                }
            };
            InstanceSpec::RemovedBase { n, r, removed }
        }
        BenchFamily::Graphic => {
            let vertices = opts.vertices.unwrap_or(n.max(2));
            if vertices < 2 && n > 0 {
                return Err(BenchError::Usage(
                    "graphic needs at least 2 vertices".into(),
                ));
            }
            let edges = (0..n)
                .map(|_| {
                    let pair = index::sample(&mut rng, vertices, 2);
                    let (a, b) = (pair.index(0) + 1, pair.index(1) + 1);
                    (a.min(b), a.max(b))
                })
                .collect();
            InstanceSpec::Graphic { vertices, edges }
        }
        BenchFamily::ExplicitBases => InstanceSpec::ExplicitBases {
            n,
            bases: MinimalMatroid::new(n, r)?
                .canonical_bases()
                .iter()
                .map(|b| b.labels())
                .collect(),
        },
    };
    spec.build()?;
    Ok(spec)
}
