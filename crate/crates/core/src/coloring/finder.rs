//! Exact rainbow-matching search.
//!
//! Backtracking over `A`-vertices in ascending order: each vertex is either
//! matched to a free `B`-vertex whose edge color is still unused, or
//! skipped. A branch is cut when the remaining `A`-vertices, the distinct
//! unused colors left in the residual graph, or the maximum matching of the
//! residual graph cannot cover the edges still needed.

use crate::bipartite::{fill_mates, Matching};

use super::{ColoredCompleteBipartite, RainbowCertificate};

/// Reusable search state for colorings of a fixed `K_{m,n}`.
///
/// The oracle calls the finder millions of times on the same shape, so all
/// buffers live here rather than in the call.
#[derive(Debug, Clone)]
pub struct RainbowFinder {
    m: usize,
    n: usize,
    used_colors: Vec<u64>,
    seen_colors: Vec<u64>,
    residual: Vec<u64>,
    mates: Vec<usize>,
    chosen: Vec<(usize, usize)>,
}

impl RainbowFinder {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(n <= 64, "part B is limited to 64 vertices");
        Self {
            m,
            n,
            used_colors: Vec::new(),
            seen_colors: Vec::new(),
            residual: vec![0; m],
            mates: vec![0; n],
            chosen: Vec::with_capacity(m.min(n)),
        }
    }

    /// Whether `colors` (indexed `a·n + b`, ids below `color_count`) has a
    /// rainbow matching of size `k`. On success the matching is available
    /// from [`RainbowFinder::matching`].
    pub fn search(&mut self, colors: &[u32], color_count: usize, k: usize) -> bool {
        assert_eq!(
            colors.len(),
            self.m * self.n,
            "coloring does not fit K_{{m,n}}"
        );
        self.chosen.clear();
        if k > self.m.min(self.n) || k > color_count {
            return false;
        }
        let words = color_count.div_ceil(64);
        self.used_colors.clear();
        self.used_colors.resize(words, 0);
        self.seen_colors.clear();
        self.seen_colors.resize(words, 0);
        self.extend(colors, 0, k, 0)
    }

    /// Pairs of the last successful search, in `A` order.
    pub fn matching(&self) -> &[(usize, usize)] {
        &self.chosen
    }

    fn extend(&mut self, colors: &[u32], a: usize, need: usize, used_b: u64) -> bool {
        if need == 0 {
            return true;
        }
        if self.m - a < need {
            return false;
        }
        if self.residual_colors(colors, a, need, used_b) < need {
            return false;
        }
        if self.residual_matching(colors, a, used_b) < need {
            return false;
        }
        let row = &colors[a * self.n..(a + 1) * self.n];
        for (b, &color) in row.iter().enumerate() {
            if used_b >> b & 1 == 1 {
                continue;
            }
            let color = color as usize;
            let (word, bit) = (color / 64, 1u64 << (color % 64));
            if self.used_colors[word] & bit != 0 {
                continue;
            }
            self.used_colors[word] |= bit;
            self.chosen.push((a, b));
            if self.extend(colors, a + 1, need - 1, used_b | 1 << b) {
                return true;
            }
            self.chosen.pop();
            self.used_colors[word] &= !bit;
        }
        self.extend(colors, a + 1, need, used_b)
    }

    /// Distinct unused colors on residual edges, counted up to `cap`.
    fn residual_colors(&mut self, colors: &[u32], a: usize, cap: usize, used_b: u64) -> usize {
        self.seen_colors.fill(0);
        let mut count = 0;
        for row in colors[a * self.n..].chunks_exact(self.n) {
            for (b, &color) in row.iter().enumerate() {
                if used_b >> b & 1 == 1 {
                    continue;
                }
                let color = color as usize;
                let (word, bit) = (color / 64, 1u64 << (color % 64));
                if (self.used_colors[word] | self.seen_colors[word]) & bit == 0 {
                    self.seen_colors[word] |= bit;
                    count += 1;
                    if count >= cap {
                        return count;
                    }
                }
            }
        }
        count
    }

    /// Maximum matching of `A[a..] × (free B)` restricted to edges of
    /// unused colors.
    fn residual_matching(&mut self, colors: &[u32], a: usize, used_b: u64) -> usize {
        let rows = self.m - a;
        for (slot, row) in self.residual[..rows]
            .iter_mut()
            .zip(colors[a * self.n..].chunks_exact(self.n))
        {
            let mut adj = 0u64;
            for (b, &color) in row.iter().enumerate() {
                let color = color as usize;
                if used_b >> b & 1 == 0 && self.used_colors[color / 64] >> (color % 64) & 1 == 0 {
                    adj |= 1 << b;
                }
            }
            *slot = adj;
        }
        fill_mates(&self.residual[..rows], &mut self.mates)
    }
}

/// A rainbow `kK2` in `c`, if one exists. Exact: absent means no rainbow
/// matching of size `k` exists at all.
pub fn find_rainbow(c: &ColoredCompleteBipartite, k: usize) -> Option<RainbowCertificate> {
    let mut finder = RainbowFinder::new(c.m(), c.n());
    if !finder.search(c.colors(), c.color_count(), k) {
        return None;
    }
    let pairs = finder.matching().to_vec();
    let colors_used = pairs.iter().map(|&(a, b)| c.color(a, b)).collect();
    Some(RainbowCertificate {
        matching: Matching::new(pairs),
        colors_used,
    })
}
