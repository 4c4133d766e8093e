#![allow(dead_code)]

use matroid_lab::*;
use proptest::prelude::*;

/// Random genuine matroids on at most `max_n` elements, one arm per family.
/// Removed-base instances are restricted to the cases that are matroids.
pub fn matroid(max_n: usize) -> impl Strategy<Value = FamilyMatroid> {
    let uniform = (0..=max_n)
        .prop_flat_map(|n| (0..=n, Just(n)))
        .prop_map(|(r, n)| UniformMatroid::new(r, n).into());
    let minimal = (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_map(|(n, r)| MinimalMatroid::new(n, r).unwrap().into());
    let removed = (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n, any::<bool>()))
        .prop_map(|(n, r, last)| {
            let parent = MinimalMatroid::new(n, r).unwrap();
            let index = if (r == 1 || r == n - 1) && last {
                parent.base_count() - 1
            } else {
                0
            };
            RemovedBaseMatroid::from_index(n, r, index).unwrap().into()
        });
    let graphic = graph(max_n).prop_map(|(v, edges)| GraphicMatroid::new(v, edges).unwrap().into());
    let explicit = graph(max_n.min(8)).prop_map(|(v, edges)| {
        let g = GraphicMatroid::new(v, edges).unwrap();
        let n = g.ground_size();
        ExplicitBasesMatroid::new(n, enumerate_bases(&g).unwrap())
            .unwrap()
            .into()
    });
    prop_oneof![uniform, minimal, removed, graphic, explicit]
}

/// A multigraph with loops: up to 5 vertices and `max_edges` edges.
pub fn graph(max_edges: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=5).prop_flat_map(move |v| {
        (
            Just(v),
            proptest::collection::vec((0..v, 0..v), 0..=max_edges),
        )
    })
}

pub fn set(n: usize, labels: &[usize]) -> SubsetMask {
    SubsetMask::from_labels(n, labels.iter().copied()).unwrap()
}
