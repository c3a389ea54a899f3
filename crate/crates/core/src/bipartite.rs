//! Bipartite graphs, maximum matchings and the deficiency formula.
//!
//! Vertices are 0-based and positional: `A = {0..m}`, `B = {0..n}`. The
//! neighbourhood of every `A`-vertex is stored as a `u64` bitset over `B`,
//! which caps `n` at [`MAX_PART`].

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest supported size of part `B`.
pub const MAX_PART: usize = 64;

const UNMATCHED: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    m: usize,
    n: usize,
    adjacency: Vec<u64>,
}

impl BipartiteGraph {
    /// Graph with no edges.
    pub fn empty(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyPart { m, n });
        }
        if n > MAX_PART {
            return Err(Error::PartTooLarge { n, max: MAX_PART });
        }
        Ok(Self {
            m,
            n,
            adjacency: vec![0; m],
        })
    }

    /// `K_{m,n}`.
    pub fn complete(m: usize, n: usize) -> Result<Self> {
        let mut g = Self::empty(m, n)?;
        let full = low_bits(n);
        g.adjacency.iter_mut().for_each(|row| *row = full);
        Ok(g)
    }

    /// Builds a graph from an edge list, rejecting out-of-range and
    /// duplicate edges.
    pub fn from_edges(m: usize, n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(m, n)?;
        for &(a, b) in edges {
            if a >= m || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for parts of size {m} and {n}"
                )));
            }
            if g.has_edge(a, b) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a}, {b})")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows. Bits at or above `n` are
    /// rejected.
    pub fn from_adjacency(m: usize, n: usize, adjacency: Vec<u64>) -> Result<Self> {
        let mut g = Self::empty(m, n)?;
        if adjacency.len() != m {
            return Err(Error::InvalidGraph(format!(
                "expected {m} adjacency rows, got {}",
                adjacency.len()
            )));
        }
        if adjacency.iter().any(|&row| row & !low_bits(n) != 0) {
            return Err(Error::InvalidGraph(format!(
                "adjacency bit outside part B of size {n}"
            )));
        }
        g.adjacency = adjacency;
        Ok(g)
    }

    /// Decodes the graph whose edge `a·n + b` is present iff bit `a·n + b`
    /// of `mask` is set. Used by the exhaustive sweeps.
    pub fn from_edge_mask(m: usize, n: usize, mask: u64) -> Result<Self> {
        if m * n > 64 {
            return Err(Error::InvalidGraph(format!(
                "edge mask cannot describe {} edges",
                m * n
            )));
        }
        let adjacency = (0..m).map(|a| (mask >> (a * n)) & low_bits(n)).collect();
        Self::from_adjacency(m, n, adjacency)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbourhood bitset of `A`-vertex `a`.
    pub fn neighbors(&self, a: usize) -> u64 {
        self.adjacency[a]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adjacency
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.m && b < self.n && self.adjacency[a] >> b & 1 == 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.m && b < self.n, "edge ({a}, {b}) out of range");
        self.adjacency[a] |= 1 << b;
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.m && b < self.n, "edge ({a}, {b}) out of range");
        self.adjacency[a] &= !(1 << b);
    }

    /// Adds the edge if absent, removes it otherwise.
    pub fn toggle_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.m && b < self.n, "edge ({a}, {b}) out of range");
        self.adjacency[a] ^= 1 << b;
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum()
    }

    /// Edges in ascending `(a, b)` order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.m)
            .flat_map(|a| bits(self.adjacency[a]).map(move |b| (a, b)))
            .collect()
    }

    pub fn degree_a(&self, a: usize) -> usize {
        self.adjacency[a].count_ones() as usize
    }

    pub fn degree_b(&self, b: usize) -> usize {
        self.adjacency
            .iter()
            .filter(|&&row| row >> b & 1 == 1)
            .count()
    }

    /// `N(S)` as a bitset over `B`.
    pub fn neighborhood_of<I: IntoIterator<Item = usize>>(&self, set: I) -> u64 {
        set.into_iter().fold(0, |acc, a| acc | self.adjacency[a])
    }

    /// The same graph with the roles of `A` and `B` exchanged.
    pub fn transposed(&self) -> Result<Self> {
        let mut t = Self::empty(self.n, self.m)?;
        for (a, b) in self.edges() {
            t.add_edge(b, a);
        }
        Ok(t)
    }
}

/// A set of pairwise-disjoint `A`–`B` edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        Self { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Endpoints are distinct on both sides.
    pub fn is_disjoint(&self) -> bool {
        let a: BTreeSet<_> = self.pairs.iter().map(|p| p.0).collect();
        let b: BTreeSet<_> = self.pairs.iter().map(|p| p.1).collect();
        a.len() == self.pairs.len() && b.len() == self.pairs.len()
    }

    /// Disjoint and every pair is an edge of `g`.
    pub fn is_valid_in(&self, g: &BipartiteGraph) -> bool {
        self.is_disjoint() && self.pairs.iter().all(|&(a, b)| g.has_edge(a, b))
    }

    /// Keeps the first `k` pairs.
    pub fn truncated(&self, k: usize) -> Self {
        Self::new(self.pairs.iter().copied().take(k).collect())
    }
}

/// A set `S ⊆ A` together with `N(S)`, certifying the deficiency
/// `|S| - |N(S)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyWitness {
    pub s_set: Vec<usize>,
    pub neighborhood: Vec<usize>,
    pub deficiency: usize,
}

impl DeficiencyWitness {
    /// `neighborhood` is exactly `N(s_set)` and the deficiency matches.
    pub fn is_valid_in(&self, g: &BipartiteGraph) -> bool {
        let nbhd: Vec<usize> = bits(g.neighborhood_of(self.s_set.iter().copied())).collect();
        nbhd == self.neighborhood
            && self.s_set.len() >= self.neighborhood.len()
            && self.deficiency == self.s_set.len() - self.neighborhood.len()
    }
}

/// Maximum-cardinality matching by repeated augmenting-path search, scanning
/// `A` and `B` in ascending order. Pairs are sorted by `A`-vertex.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let mate_b = maximum_mates(g.m, g.n, &g.adjacency);
    let mut pairs: Vec<(usize, usize)> = mate_b
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != UNMATCHED)
        .map(|(b, &a)| (a, b))
        .collect();
    pairs.sort_unstable();
    Matching::new(pairs)
}

fn maximum_mates(m: usize, n: usize, adjacency: &[u64]) -> Vec<usize> {
    let mut mate_b = vec![UNMATCHED; n];
    fill_mates(&adjacency[..m], &mut mate_b);
    mate_b
}

/// Runs the augmenting-path search into a caller-owned buffer of `B`-mates
/// and returns the matching size.
pub(crate) fn fill_mates(adjacency: &[u64], mate_b: &mut [usize]) -> usize {
    mate_b.fill(UNMATCHED);
    let mut size = 0;
    for a in 0..adjacency.len() {
        let mut visited = 0u64;
        if augment(a, adjacency, mate_b, &mut visited) {
            size += 1;
        }
    }
    size
}

fn augment(a: usize, adjacency: &[u64], mate_b: &mut [usize], visited: &mut u64) -> bool {
    let mut candidates = adjacency[a] & !*visited;
    while candidates != 0 {
        let b = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        if *visited >> b & 1 == 1 {
            continue;
        }
        *visited |= 1 << b;
        if mate_b[b] == UNMATCHED || augment(mate_b[b], adjacency, mate_b, visited) {
            mate_b[b] = a;
            return true;
        }
    }
    false
}

/// Whether an augmenting path exists for `matching` in `g`. A maximum
/// matching has none.
pub fn has_augmenting_path(g: &BipartiteGraph, matching: &Matching) -> bool {
    let (mate_a, mate_b) = mate_arrays(g, matching);
    let reach = alternating_reach(g, &mate_a, &mate_b);
    bits(reach.b).any(|b| mate_b[b] == UNMATCHED)
}

/// The canonical maximal deficiency witness: unmatched `A`-vertices plus
/// every `A`-vertex reachable from them along alternating paths of a
/// maximum matching.
pub fn deficiency_witness(g: &BipartiteGraph) -> DeficiencyWitness {
    let matching = max_matching(g);
    let (mate_a, mate_b) = mate_arrays(g, &matching);
    let reach = alternating_reach(g, &mate_a, &mate_b);
    let s_set: Vec<usize> = (0..g.m).filter(|&a| reach.a[a]).collect();
    let neighborhood: Vec<usize> = bits(g.neighborhood_of(s_set.iter().copied())).collect();
    // Every vertex of N(S) is matched into S, so this never underflows.
    let deficiency = s_set.len() - neighborhood.len();
    DeficiencyWitness {
        s_set,
        neighborhood,
        deficiency,
    }
}

/// Maximum matching size and deficiency, computed by separate routes, and
/// whether `size = m - d` holds.
pub fn verify_defect_formula(g: &BipartiteGraph) -> (usize, usize, bool) {
    let size = max_matching(g).len();
    let witness = deficiency_witness(g);
    let consistent = witness.is_valid_in(g) && size + witness.deficiency == g.m;
    (size, witness.deficiency, consistent)
}

fn mate_arrays(g: &BipartiteGraph, matching: &Matching) -> (Vec<usize>, Vec<usize>) {
    let mut mate_a = vec![UNMATCHED; g.m];
    let mut mate_b = vec![UNMATCHED; g.n];
    for &(a, b) in &matching.pairs {
        mate_a[a] = b;
        mate_b[b] = a;
    }
    (mate_a, mate_b)
}

struct Reach {
    a: Vec<bool>,
    b: u64,
}

/// BFS from unmatched `A`-vertices: non-matching edges `A → B`, matching
/// edges `B → A`.
fn alternating_reach(g: &BipartiteGraph, mate_a: &[usize], mate_b: &[usize]) -> Reach {
    let mut seen_a = vec![false; g.m];
    let mut seen_b = 0u64;
    let mut queue: VecDeque<usize> = (0..g.m).filter(|&a| mate_a[a] == UNMATCHED).collect();
    queue.iter().for_each(|&a| seen_a[a] = true);
    while let Some(a) = queue.pop_front() {
        for b in bits(g.adjacency[a] & !seen_b) {
            if mate_a[a] == b {
                continue;
            }
            seen_b |= 1 << b;
            let next = mate_b[b];
            if next != UNMATCHED && !seen_a[next] {
                seen_a[next] = true;
                queue.push_back(next);
            }
        }
    }
    Reach {
        a: seen_a,
        b: seen_b,
    }
}

/// Mask with the lowest `count` bits set.
pub(crate) fn low_bits(count: usize) -> u64 {
    if count >= 64 {
        u64::MAX
    } else {
        (1u64 << count) - 1
    }
}

/// Indices of set bits, ascending.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

/// JSON interchange form: `{"m": .., "n": .., "edges": [[a, b], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub m: usize,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&BipartiteGraph> for GraphFile {
    fn from(g: &BipartiteGraph) -> Self {
        Self {
            m: g.m,
            n: g.n,
            edges: g.edges(),
        }
    }
}

impl TryFrom<GraphFile> for BipartiteGraph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Self> {
        BipartiteGraph::from_edges(file.m, file.n, &file.edges)
    }
}

impl BipartiteGraph {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidGraph(e.to_string()))?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph serializes")
    }
}
