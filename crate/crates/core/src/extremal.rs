//! Extremal numbers for matchings: `ext(m, n, kK2) = m(k-1)` for
//! `1 <= k <= n <= m`, attained only by `K_{m,k-1}`.

use serde::{Deserialize, Serialize};

use crate::bipartite::{bits, max_matching, BipartiteGraph, Matching};
use crate::{Error, Result};

/// Summary of how a graph relates to the extremal problem for `kK2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub ext_value: usize,
    /// Exactly `ext_value` edges and no `kK2`.
    pub is_extremal: bool,
    pub isomorphic_to_canonical: bool,
    pub witness: Option<Matching>,
}

/// Checks `m >= n >= k >= 1`.
pub(crate) fn check_params(m: usize, n: usize, k: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyPart { m, n });
    }
    if m < n {
        return Err(Error::Orientation { m, n });
    }
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    if k > n {
        return Err(Error::KExceedsPart { k, n });
    }
    Ok(())
}

/// `ext(m, n, kK2) = m(k-1)`. Requires `m >= n >= k >= 1`.
pub fn ext_value(m: usize, n: usize, k: usize) -> Result<usize> {
    check_params(m, n, k)?;
    Ok(m * (k - 1))
}

/// `K_{m,k-1}` placed on the first `k-1` vertices of `B`.
pub fn build_extremal_graph(m: usize, n: usize, k: usize) -> Result<BipartiteGraph> {
    check_params(m, n, k)?;
    let mut g = BipartiteGraph::empty(m, n)?;
    for a in 0..m {
        for b in 0..k - 1 {
            g.add_edge(a, b);
        }
    }
    Ok(g)
}

/// A matching of size `k` in `g`, if one exists.
pub fn find_kk2(g: &BipartiteGraph, k: usize) -> Option<Matching> {
    let mm = max_matching(g);
    (mm.len() >= k).then(|| mm.truncated(k))
}

/// `g` has `m(k-1)` edges, no `kK2`, and is `K_{m,k-1}` up to
/// part-preserving relabeling. When `m = n` the part-swapped twin
/// `K_{k-1,m}` is accepted as well.
pub fn certify_uniqueness(g: &BipartiteGraph, k: usize) -> bool {
    if check_params(g.m(), g.n(), k).is_err() {
        return false;
    }
    g.edge_count() == g.m() * (k - 1) && find_kk2(g, k).is_none() && is_canonical_shape(g, k)
}

/// Whether `g` is `K_{m,k-1}` plus isolated `B`-vertices (or, when `m = n`,
/// the swapped form `K_{k-1,n}` plus isolated `A`-vertices).
pub fn is_canonical_shape(g: &BipartiteGraph, k: usize) -> bool {
    if k == 0 {
        return false;
    }
    if full_b_side(g, k - 1) {
        return true;
    }
    g.m() == g.n() && g.transposed().is_ok_and(|t| full_b_side(&t, k - 1))
}

/// Every `A`-vertex has the same neighbourhood, of size `size`. The
/// neighbours then have degree `m` and every other `B`-vertex degree 0.
fn full_b_side(g: &BipartiteGraph, size: usize) -> bool {
    let first = g.neighbors(0);
    first.count_ones() as usize == size && g.adjacency().iter().all(|&row| row == first)
}

/// Full report for `g` against `kK2`. Requires `m >= n >= k >= 1` on `g`.
pub fn inspect(g: &BipartiteGraph, k: usize) -> Result<ExtremalReport> {
    let ext = ext_value(g.m(), g.n(), k)?;
    let witness = find_kk2(g, k);
    Ok(ExtremalReport {
        ext_value: ext,
        is_extremal: g.edge_count() == ext && witness.is_none(),
        isomorphic_to_canonical: is_canonical_shape(g, k),
        witness,
    })
}

/// The `B`-vertices of positive degree in `g`.
pub fn covered_b(g: &BipartiteGraph) -> Vec<usize> {
    bits(g.neighborhood_of(0..g.m())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_values() {
        assert_eq!(ext_value(5, 3, 3), Ok(10));
        for (m, n) in [(1, 1), (4, 2), (7, 7)] {
            assert_eq!(ext_value(m, n, 1), Ok(0));
        }
        assert_eq!(ext_value(3, 3, 4), Err(Error::KExceedsPart { k: 4, n: 3 }));
        assert_eq!(ext_value(3, 5, 2), Err(Error::Orientation { m: 3, n: 5 }));
        assert_eq!(ext_value(3, 3, 0), Err(Error::KTooSmall { k: 0, min: 1 }));
    }

    #[test]
    fn ext_3_3_2_by_enumeration() {
        let best = (0u64..1 << 9)
            .map(|mask| BipartiteGraph::from_edge_mask(3, 3, mask).unwrap())
            .filter(|g| find_kk2(g, 2).is_none())
            .map(|g| g.edge_count())
            .max();
        assert_eq!(best, Some(3));
        assert_eq!(ext_value(3, 3, 2), Ok(3));
    }

    #[test]
    fn extremal_graph_shapes() {
        let g = build_extremal_graph(4, 3, 3).unwrap();
        assert_eq!(g.edge_count(), 8);
        assert_eq!(max_matching(&g).len(), 2);
        assert!(certify_uniqueness(&g, 3));

        let empty = build_extremal_graph(3, 3, 1).unwrap();
        assert_eq!(empty.edge_count(), 0);

        let star = build_extremal_graph(3, 2, 2).unwrap();
        assert_eq!(star.edges(), vec![(0, 0), (1, 0), (2, 0)]);
        assert_eq!(crate::bipartite::deficiency_witness(&star).deficiency, 2);
        assert_eq!(covered_b(&star), vec![0]);
    }

    #[test]
    fn find_kk2_cases() {
        let g = build_extremal_graph(5, 3, 3).unwrap();
        assert!(find_kk2(&g, 3).is_none());

        // every 11-edge subgraph of K_{5,3}
        let full = BipartiteGraph::complete(5, 3).unwrap();
        let edges = full.edges();
        for (i, j, l, r) in (0..15).flat_map(|i| {
            (i + 1..15).flat_map(move |j| {
                (j + 1..15).flat_map(move |l| (l + 1..15).map(move |r| (i, j, l, r)))
            })
        }) {
            let mut g = full.clone();
            for idx in [i, j, l, r] {
                g.remove_edge(edges[idx].0, edges[idx].1);
            }
            assert_eq!(g.edge_count(), 11);
            let w = find_kk2(&g, 3).expect("more than m(k-1) edges force a 3K2");
            assert_eq!(w.len(), 3);
            assert!(w.is_valid_in(&g));
        }

        let empty = BipartiteGraph::empty(2, 2).unwrap();
        assert!(find_kk2(&empty, 1).is_none());
    }

    #[test]
    fn uniqueness_rejections() {
        let k33 = BipartiteGraph::complete(3, 3).unwrap();
        assert!(!certify_uniqueness(&k33, 3));

        // swapped twin only counts when m = n
        let swapped = BipartiteGraph::from_edges(3, 3, &[(0, 0), (0, 1), (0, 2)]).unwrap();
        assert!(certify_uniqueness(&swapped, 2));
        let lopsided = BipartiteGraph::from_edges(4, 3, &[(0, 0), (0, 1), (0, 2)]).unwrap();
        assert!(!certify_uniqueness(&lopsided, 2));
    }

    #[test]
    fn uniqueness_sweep_3_3() {
        let mut seen = 0;
        for mask in 0u64..1 << 9 {
            let g = BipartiteGraph::from_edge_mask(3, 3, mask).unwrap();
            if g.edge_count() == 3 && find_kk2(&g, 2).is_none() {
                seen += 1;
                assert!(is_canonical_shape(&g, 2), "{:?}", g.edges());
                assert!(certify_uniqueness(&g, 2));
            }
        }
        // three stars centred in B plus three centred in A
        assert_eq!(seen, 6);
    }

    #[test]
    fn inspect_report() {
        let g = build_extremal_graph(4, 4, 3).unwrap();
        let r = inspect(&g, 3).unwrap();
        assert_eq!(r.ext_value, 8);
        assert!(r.is_extremal && r.isomorphic_to_canonical);
        assert!(r.witness.is_none());

        let r = inspect(&BipartiteGraph::complete(4, 4).unwrap(), 3).unwrap();
        assert!(!r.is_extremal);
        assert_eq!(r.witness.unwrap().len(), 3);
    }
}
