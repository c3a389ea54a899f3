//! Recognizers for the two special spanning-subgraph shapes that appear in
//! the equality analysis of the rainbow-number bound.
//!
//! - `SG1`: every `A`-vertex is joined to the same `k-2` vertices of `B`
//!   (a `K_{m,k-2}`), one `A`-vertex carries two extra pendant edges, and all
//!   remaining `B`-vertices are isolated.
//! - `SG2` (`m = n`): a `K_{m-1,m-1}`, one pendant edge `pv` with
//!   `deg(v) = 1` hanging off the core, and one isolated vertex `u` on the
//!   side opposite `v`.

use serde::{Deserialize, Serialize};

use crate::bipartite::{bits, low_bits, BipartiteGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub fn a(index: usize) -> Self {
        Self {
            side: Side::A,
            index,
        }
    }

    pub fn b(index: usize) -> Self {
        Self {
            side: Side::B,
            index,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sg1Roles {
    /// Inferred from the core: `k = |core_b| + 2`.
    pub k: usize,
    /// The `A`-vertex carrying both pendant edges.
    pub hub: usize,
    pub core_b: Vec<usize>,
    pub pendants: [usize; 2],
    pub isolated_b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sg2Roles {
    pub core_a: Vec<usize>,
    pub core_b: Vec<usize>,
    /// `(p, v)` with `p` in the core and `deg(v) = 1`.
    pub pendant: (Vertex, Vertex),
    pub isolated: Vertex,
}

/// Matches `g` against the `SG1` shape. Needs `m >= 2` so that core and
/// pendant `B`-vertices are told apart by degree.
pub fn recognize_sg1(g: &BipartiteGraph) -> Option<Sg1Roles> {
    if g.m() < 2 {
        return None;
    }
    let core = g
        .adjacency()
        .iter()
        .fold(low_bits(g.n()), |acc, &row| acc & row);
    if core == 0 {
        return None;
    }
    let mut hub = None;
    for a in 0..g.m() {
        let extra = g.neighbors(a) & !core;
        match extra.count_ones() {
            0 => {}
            2 if hub.is_none() => hub = Some((a, extra)),
            _ => return None,
        }
    }
    let (hub, extra) = hub?;
    let mut pendants = bits(extra);
    let pendants = [pendants.next()?, pendants.next()?];
    let covered = core | extra;
    Some(Sg1Roles {
        k: core.count_ones() as usize + 2,
        hub,
        core_b: bits(core).collect(),
        pendants,
        isolated_b: bits(low_bits(g.n()) & !covered).collect(),
    })
}

/// Matches `g` against the `SG2` shape. Requires `m = n >= 2`.
pub fn recognize_sg2(g: &BipartiteGraph) -> Option<Sg2Roles> {
    if g.m() != g.n() || g.m() < 2 {
        return None;
    }
    if let Some(roles) = sg2_isolated_in_a(g) {
        return Some(roles);
    }
    let swap = |v: Vertex| Vertex {
        side: match v.side {
            Side::A => Side::B,
            Side::B => Side::A,
        },
        index: v.index,
    };
    let t = g.transposed().ok()?;
    sg2_isolated_in_a(&t).map(|r| Sg2Roles {
        core_a: r.core_b,
        core_b: r.core_a,
        pendant: (swap(r.pendant.0), swap(r.pendant.1)),
        isolated: swap(r.isolated),
    })
}

/// `SG2` with the isolated vertex `u` in `A` and `v` in `B`.
fn sg2_isolated_in_a(g: &BipartiteGraph) -> Option<Sg2Roles> {
    let size = g.m();
    let all_b = low_bits(size);
    let isolated_a = (0..size).filter(|&a| g.neighbors(a) == 0);
    for u in isolated_a {
        for v in (0..size).filter(|&b| g.degree_b(b) == 1) {
            let p = (0..size).find(|&a| g.has_edge(a, v))?;
            let core_b_mask = all_b & !(1 << v);
            let fits = (0..size).all(|a| {
                let expected = match a {
                    _ if a == u => 0,
                    _ if a == p => core_b_mask | 1 << v,
                    _ => core_b_mask,
                };
                g.neighbors(a) == expected
            });
            if fits {
                return Some(Sg2Roles {
                    core_a: (0..size).filter(|&a| a != u).collect(),
                    core_b: bits(core_b_mask).collect(),
                    pendant: (Vertex::a(p), Vertex::b(v)),
                    isolated: Vertex::a(u),
                });
            }
        }
    }
    None
}

/// `K_{m,k-2}` on `B`-vertices `0..k-2`, with hub `A`-vertex 0 joined to
/// pendants `k-2` and `k-1`. Needs `n >= k >= 3`.
pub fn build_sg1(m: usize, n: usize, k: usize) -> crate::Result<BipartiteGraph> {
    if k < 3 {
        return Err(crate::Error::KTooSmall { k, min: 3 });
    }
    if k > n {
        return Err(crate::Error::KExceedsPart { k, n });
    }
    let mut g = BipartiteGraph::empty(m, n)?;
    for a in 0..m {
        for b in 0..k - 2 {
            g.add_edge(a, b);
        }
    }
    g.add_edge(0, k - 2);
    g.add_edge(0, k - 1);
    Ok(g)
}

/// `K_{m-1,m-1}` on `A \ {m-1}` and `B \ {m-1}`, pendant edge from
/// `A`-vertex 0 to `B`-vertex `m-1`, isolated `A`-vertex `m-1`.
pub fn build_sg2(m: usize) -> crate::Result<BipartiteGraph> {
    let mut g = BipartiteGraph::empty(m, m)?;
    for a in 0..m.saturating_sub(1) {
        for b in 0..m - 1 {
            g.add_edge(a, b);
        }
    }
    if m >= 2 {
        g.add_edge(0, m - 1);
    }
    Ok(g)
}
