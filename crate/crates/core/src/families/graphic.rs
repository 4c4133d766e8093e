use crate::error::{Error, Result};
use crate::oracle::MatroidOracle;
use crate::subset::SubsetMask;

/// Cycle matroid of a multigraph: elements are edges, independent sets are
/// forests. Vertices are 0-based; loops are allowed and always dependent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicMatroid {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicMatroid {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertices,
                    });
                }
            }
        }
        Ok(GraphicMatroid { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

impl MatroidOracle for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, set: &SubsetMask) -> bool {
        let mut dsu = DisjointSets::new(self.vertices);
        set.iter().all(|e| {
            let (u, v) = self.edges[e.0];
            dsu.union(u, v)
        })
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}
