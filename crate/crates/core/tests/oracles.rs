mod common;

use common::{graph, set};
use matroid_lab::lowerbound::{
    adversary_parameters, chi_encode, mu_sample, probe_distinguisher, Judgement, Label,
};
use matroid_lab::subset::all_subsets;
use matroid_lab::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independence from the circuit description: no `E0 + ej`, no pair outside `E0`.
fn minimal_by_circuits(n: usize, r: usize, s: &SubsetMask) -> bool {
    let core = SubsetMask::range(n, 0..r);
    let mut circuits: Vec<SubsetMask> = (r..n).map(|j| core.with(ElementId(j))).collect();
    for i in r..n {
        for j in i + 1..n {
            circuits.push(SubsetMask::from_indices(n, [i, j]));
        }
    }
    !circuits.iter().any(|c| c.is_subset(s))
}

#[test]
fn minimal_closed_form_matches_circuit_description() {
    for n in 2..=10 {
        for r in 1..n {
            let m = MinimalMatroid::new(n, r).unwrap();
            for s in all_subsets(n) {
                assert_eq!(
                    m.is_independent(&s),
                    minimal_by_circuits(n, r, &s),
                    "{n} {r} {s}"
                );
            }
            assert!(circuit_pairwise_connected(&m).unwrap());
        }
    }
}

#[test]
fn minimal_base_order_and_count() {
    let m = MinimalMatroid::new(4, 2).unwrap();
    let labels: Vec<Vec<usize>> = m.canonical_bases().iter().map(SubsetMask::labels).collect();
    assert_eq!(
        labels,
        vec![vec![1, 2], vec![2, 3], vec![2, 4], vec![1, 3], vec![1, 4]]
    );
    for n in 2..=9 {
        for r in 1..n {
            let m = MinimalMatroid::new(n, r).unwrap();
            let mut canonical = m.canonical_bases();
            canonical.sort();
            assert_eq!(canonical, enumerate_bases_exhaustive(&m).unwrap());
        }
    }
}

/// Cycle-matroid connectivity from the graph: for two or more edges, no loop,
/// the non-isolated vertices connected, and no cut vertex among them.
fn graph_is_matroid_connected(vertices: usize, edges: &[(usize, usize)]) -> bool {
    if edges.len() <= 1 {
        return true;
    }
    if edges.iter().any(|&(a, b)| a == b) {
        return false;
    }
    let used: Vec<bool> = (0..vertices)
        .map(|v| edges.iter().any(|&(a, b)| a == v || b == v))
        .collect();
    let connected_without = |skip: Option<usize>| {
        let alive: Vec<usize> = (0..vertices)
            .filter(|&v| used[v] && Some(v) != skip)
            .collect();
        let Some(&start) = alive.first() else {
            return true;
        };
        let mut seen = vec![false; vertices];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(a, b) in edges {
                if Some(a) == skip || Some(b) == skip {
                    continue;
                }
                for (x, y) in [(a, b), (b, a)] {
                    if x == u && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        alive.iter().all(|&v| seen[v])
    };
    connected_without(None)
        && (0..vertices)
            .filter(|&v| used[v])
            .all(|v| connected_without(Some(v)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graphic_connectivity_is_biconnectivity((vertices, edges) in graph(9)) {
        let expected = graph_is_matroid_connected(vertices, &edges);
        let m = GraphicMatroid::new(vertices, edges).unwrap();
        prop_assert_eq!(brute_force_connected(&m).unwrap().connected, expected);
        prop_assert_eq!(cunningham_connected(&m).unwrap().connected, expected);
    }
}

#[test]
fn graphic_examples() {
    let triangle = GraphicMatroid::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    assert!(cunningham_connected(&triangle).unwrap().connected);
    let bowtie =
        GraphicMatroid::new(5, vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    assert!(!cunningham_connected(&bowtie).unwrap().connected);
    assert!(!graph_is_matroid_connected(5, bowtie.edges()));
}

/// Reference DFS cost: adjacency from exchange tests on the bare oracle,
/// lowest-index choice, and floating-point square roots (exact at this size).
fn reference_dfs_cost<M: MatroidOracle>(m: &M) -> (bool, f64) {
    let n = m.ground_size();
    let base = find_base(m);
    if base.is_empty() {
        return (n <= 1, 0.0);
    }
    let adjacent = |u: usize, v: usize| {
        let (x, y) = if base.contains(ElementId(u)) {
            (u, v)
        } else {
            (v, u)
        };
        base.contains(ElementId(x))
            && !base.contains(ElementId(y))
            && m.is_independent(&base.exchange(ElementId(y), ElementId(x)))
    };
    let mut discovered = vec![false; n];
    let start = base.first().unwrap().0;
    discovered[start] = true;
    let mut stack = vec![start];
    let mut cost = 0.0;
    while let Some(&u) = stack.last() {
        let side: Vec<usize> = (0..n)
            .filter(|&v| base.contains(ElementId(v)) != base.contains(ElementId(u)))
            .collect();
        let hits: Vec<usize> = side
            .iter()
            .copied()
            .filter(|&v| !discovered[v] && adjacent(u, v))
            .collect();
        let size = side.len() as f64;
        match hits.first() {
            Some(&v) => {
                cost += (size / hits.len() as f64).sqrt().ceil();
                discovered[v] = true;
                stack.push(v);
            }
            None => {
                if !side.is_empty() {
                    cost += size.sqrt().ceil();
                }
                stack.pop();
            }
        }
    }
    (discovered.iter().all(|&d| d), cost)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn quantum_cost_matches_reference_dfs(m in common::matroid(10)) {
        let (v, _) = quantum_dfs_trace(&m, &GroverCostModel::default(), &mut SearchRng::deterministic()).unwrap();
        let (connected, cost) = reference_dfs_cost(&m);
        prop_assert_eq!(v.connected, connected);
        prop_assert_eq!(v.ledger.quantum_charged() as f64, cost);
    }
}

#[test]
fn quantum_reference_on_larger_minimal() {
    for n in [16, 24, 40] {
        let m = MinimalMatroid::new(n, n / 2).unwrap();
        let (v, _) = quantum_dfs_trace(
            &m,
            &GroverCostModel::default(),
            &mut SearchRng::deterministic(),
        )
        .unwrap();
        assert_eq!(v.ledger.quantum_charged() as f64, reference_dfs_cost(&m).1);
    }
}

#[test]
fn spec_examples_for_deciders() {
    let m = RemovedBaseMatroid::new(4, 2, set(4, &[1, 2])).unwrap();
    let v = brute_force_connected(&m).unwrap();
    assert!(!v.connected);
    assert_eq!(v.witness, Some((set(4, &[1, 2]), set(4, &[3, 4]))));
    assert!(!circuit_pairwise_connected(&m).unwrap());
    assert!(!circuit_pairwise_connected(&UniformMatroid::new(2, 2)).unwrap());
    assert!(
        brute_force_connected(&UniformMatroid::free(1))
            .unwrap()
            .connected
    );
    assert!(brute_force_connected(&UniformMatroid::free(21)).is_err());
}

#[test]
fn mu_marginals() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (n, r) = (6, 3);
    let bases = 10;
    let draws = 100_000;
    let mut connected = 0usize;
    let mut counts = vec![0usize; bases];
    for _ in 0..draws {
        let s = mu_sample(n, r, &mut rng).unwrap();
        match s.label {
            Label::Connected => connected += 1,
            Label::Disconnected => counts[s.removed_index.unwrap()] += 1,
        }
    }
    let p = connected as f64 / draws as f64;
    assert!((p - 0.5).abs() <= 0.01, "P(connected) = {p}");
    let disconnected = (draws - connected) as f64;
    let q = 1.0 / bases as f64;
    let sigma = (q * (1.0 - q) / disconnected).sqrt();
    for (i, &c) in counts.iter().enumerate() {
        let f = c as f64 / disconnected;
        assert!((f - q).abs() <= 3.0 * sigma, "index {i}: {f}");
    }
}

#[test]
fn mu_labels_match_brute_force_for_matroid_draws() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let s = mu_sample(5, 2, &mut rng).unwrap();
        let brute = brute_force_connected(&s.instance).unwrap().connected;
        match (s.label, s.removed_index) {
            (Label::Connected, _) => assert!(brute),
            (Label::Disconnected, Some(0)) => assert!(!brute),
            // removing E0 - ei + ej does not leave a matroid; see RemovedBaseMatroid
            (Label::Disconnected, _) => {}
        }
    }
}

#[test]
fn distinguisher_grid_matches_formula() {
    for (n, r, t) in [(5, 2, 0), (5, 2, 3), (5, 2, 7), (6, 3, 4), (8, 2, 6)] {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64 * 100 + t as u64);
        let trials = 20_000;
        let ok = (0..trials)
            .filter(|_| {
                let s = mu_sample(n, r, &mut rng).unwrap();
                probe_distinguisher(&s, t, &mut rng).unwrap() == Judgement::Correct
            })
            .count();
        let p = lowerbound::predicted_success(n, r, t);
        let emp = ok as f64 / trials as f64;
        let sigma = (p * (1.0 - p) / trials as f64).sqrt();
        assert!(
            (emp - p).abs() <= 3.0 * sigma + 1e-12,
            "({n},{r},{t}): {emp} vs {p}"
        );
    }
}

#[test]
fn chi_and_adversary_structure() {
    for n in 2..=8 {
        for r in 1..n {
            let parent = MinimalMatroid::new(n, r).unwrap();
            let x = chi_encode(&parent).unwrap();
            assert!(x.is_downward_closed());
            assert!(x.get(0));
            for (i, b) in parent.canonical_bases().iter().enumerate() {
                let y = chi_encode(&RemovedBaseMatroid::from_index(n, r, i).unwrap()).unwrap();
                assert_eq!(x.differing_positions(&y), vec![b.to_bits() as usize]);
            }
        }
    }
    for n in [4, 6, 8, 10] {
        let r = n / 2;
        let p = adversary_parameters(n, r).unwrap();
        assert_eq!((p.m_prime, p.l, p.l_prime), (1, 1, 1));
        assert_eq!(p.m, r * (n - r) + 1);
        assert!(p.bound >= (n as f64 - 1.0) / 2.0);
    }
}
