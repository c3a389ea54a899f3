use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rainbow_lab::bipartite::{
    deficiency_witness, has_augmenting_path, max_matching, BipartiteGraph,
};
use rainbow_lab::coloring::{
    bounds, build_extremal_coloring, build_sg1, build_sg2, find_rainbow, rb_value,
    ColoredCompleteBipartite, Regime,
};
use rainbow_lab::extremal::{build_extremal_graph, certify_uniqueness, find_kk2};
use rainbow_lab::oracle::sweep_verify;

/// Colors the edges of `g` pairwise distinctly and every other edge of
/// `K_{m,n}` with a random color already in use.
fn complete_coloring(g: &BipartiteGraph, rng: &mut ChaCha8Rng) -> ColoredCompleteBipartite {
    let (m, n) = (g.m(), g.n());
    let palette = g.edge_count();
    let mut next = 0;
    let raw: Vec<usize> = (0..m * n)
        .map(|i| {
            if g.has_edge(i / n, i % n) {
                next += 1;
                next - 1
            } else {
                rng.gen_range(0..palette)
            }
        })
        .collect();
    ColoredCompleteBipartite::new(m, n, &raw).unwrap()
}

#[test]
fn sg1_spanning_rainbow_subgraph_forces_rainbow_matching() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 3..=5usize {
        for m in k..=6 {
            for n in k..=m {
                let g = build_sg1(m, n, k).unwrap();
                assert_eq!(g.edge_count(), m * (k - 2) + 2);
                for _ in 0..20 {
                    let c = complete_coloring(&g, &mut rng);
                    assert_eq!(c.color_count(), rb_value(m, n, k).unwrap().value);
                    let cert = find_rainbow(&c, k).expect("rainbow kK2 at rb colors");
                    assert!(cert.is_valid_for(&c));
                }
            }
        }
    }
}

#[test]
fn sg2_spanning_rainbow_subgraph_forces_rainbow_matching() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for m in 3..=6usize {
        let g = build_sg2(m).unwrap();
        assert_eq!(g.edge_count(), m * (m - 2) + 2);
        for _ in 0..20 {
            let c = complete_coloring(&g, &mut rng);
            assert!(find_rainbow(&c, m).is_some());
        }
    }
}

#[test]
fn formula_consistency_up_to_50() {
    for m in 2..=50usize {
        for n in 2..=m {
            for k in 2..=n {
                let (lower, upper) = bounds(m, n, k).unwrap();
                let rb = rb_value(m, n, k).unwrap();
                assert!(lower <= rb.value && rb.value <= upper);
                if k >= 3 {
                    assert_eq!(rb.regime, Regime::Main);
                    assert_eq!(rb.value, lower);
                }
            }
        }
    }
}

#[test]
fn extremal_coloring_counts() {
    for m in 3..=8usize {
        for n in 3..=m {
            for k in 3..=n {
                let c = build_extremal_coloring(m, n, k).unwrap();
                assert_eq!(c.color_count(), m * (k - 2) + 1);
                assert_eq!(c.color_count(), rb_value(m, n, k).unwrap().value - 1);
            }
        }
    }
    assert_eq!(build_extremal_coloring(2, 2, 2).unwrap().color_count(), 1);
}

#[test]
fn small_sweep_agrees() {
    let rows = sweep_verify(9, 1).unwrap();
    assert!(rows.iter().all(|r| r.agree), "{rows:?}");
    assert!(rows
        .iter()
        .any(|r| (r.m, r.n, r.k, r.oracle_rb) == (3, 3, 2, 2)));
    assert!(rows
        .iter()
        .any(|r| (r.m, r.n, r.k, r.oracle_rb) == (3, 3, 3, 5)));
}

fn graph_strategy() -> impl Strategy<Value = BipartiteGraph> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(m, n)| {
        prop::collection::vec(any::<bool>(), m * n).prop_map(move |bits| {
            let edges: Vec<_> = (0..m * n)
                .filter(|&i| bits[i])
                .map(|i| (i / n, i % n))
                .collect();
            BipartiteGraph::from_edges(m, n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn matching_and_witness_are_consistent(g in graph_strategy()) {
        let mm = max_matching(&g);
        prop_assert!(mm.is_valid_in(&g));
        prop_assert!(!has_augmenting_path(&g, &mm));
        let w = deficiency_witness(&g);
        prop_assert!(w.is_valid_in(&g));
        prop_assert_eq!(mm.len() + w.deficiency, g.m());
    }

    #[test]
    fn find_kk2_is_sound_and_complete(g in graph_strategy(), k in 1usize..=8) {
        let nu = max_matching(&g).len();
        match find_kk2(&g, k) {
            Some(w) => {
                prop_assert_eq!(w.len(), k);
                prop_assert!(w.is_valid_in(&g));
            }
            None => prop_assert!(nu < k),
        }
    }

    #[test]
    fn more_than_ext_edges_force_a_matching(g in graph_strategy(), k in 1usize..=8) {
        prop_assume!(g.m() >= g.n() && k <= g.n());
        if g.edge_count() > g.m() * (k - 1) {
            prop_assert!(find_kk2(&g, k).is_some());
        }
        if certify_uniqueness(&g, k) {
            prop_assert_eq!(g.edge_count(), g.m() * (k - 1));
        }
    }

    #[test]
    fn extremal_graph_is_certified(m in 1usize..=9, n in 1usize..=9, k in 1usize..=9) {
        prop_assume!(m >= n && k <= n);
        let g = build_extremal_graph(m, n, k).unwrap();
        prop_assert_eq!(max_matching(&g).len(), k - 1);
        prop_assert!(certify_uniqueness(&g, k));
    }

    #[test]
    fn rb_colors_always_contain_a_rainbow_matching(
        raw in prop::collection::vec(0u8..12, 12),
        k in 1usize..=3,
    ) {
        let c = ColoredCompleteBipartite::new(4, 3, &raw).unwrap();
        if c.color_count() >= rb_value(4, 3, k).unwrap().value {
            prop_assert!(find_rainbow(&c, k).is_some());
        }
    }
}
