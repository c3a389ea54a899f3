//! Edge-colorings of `K_{m,n}` and rainbow numbers of matchings.
//!
//! `rb(K_{m,n}, kK2)` is the least `c` such that every edge-coloring of
//! `K_{m,n}` using exactly `c` colors contains a rainbow `kK2`. With
//! `m >= n`:
//!
//! | regime       | condition          | value          |
//! |--------------|--------------------|----------------|
//! | `K1`         | `k = 1`            | `1`            |
//! | `K2_SMALL`   | `k = 2, m = n = 2` | `3`            |
//! | `K2_GENERAL` | `k = 2, m >= 3`    | `2`            |
//! | `MAIN`       | `3 <= k <= n`      | `m(k-2) + 2`   |

mod finder;
mod special;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::bipartite::{Matching, MAX_PART};
use crate::extremal::check_params;
use crate::{Error, Result};

pub use finder::{find_rainbow, RainbowFinder};
pub use special::{
    build_sg1, build_sg2, recognize_sg1, recognize_sg2, Sg1Roles, Sg2Roles, Side, Vertex,
};

/// A total edge-coloring of `K_{m,n}` with dense color ids.
///
/// Edge `(a, b)` has index `a·n + b`. Ids are `0..color_count`, assigned in
/// order of first appearance, so every id is used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredCompleteBipartite {
    m: usize,
    n: usize,
    colors: Vec<u32>,
    color_count: usize,
}

impl ColoredCompleteBipartite {
    /// Relabels arbitrary color values to dense ids. Rainbow subgraphs are
    /// unchanged by relabeling.
    pub fn new<C: Copy + Eq + std::hash::Hash>(m: usize, n: usize, raw: &[C]) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::EmptyPart { m, n });
        }
        if n > MAX_PART {
            return Err(Error::PartTooLarge { n, max: MAX_PART });
        }
        if raw.len() != m * n {
            return Err(Error::InvalidColoring(format!(
                "expected {} edge colors, got {}",
                m * n,
                raw.len()
            )));
        }
        let mut ids = HashMap::new();
        let colors = raw
            .iter()
            .map(|c| {
                let next = ids.len() as u32;
                *ids.entry(*c).or_insert(next)
            })
            .collect();
        Ok(Self {
            m,
            n,
            colors,
            color_count: ids.len(),
        })
    }

    /// Every edge gets color 0.
    pub fn monochromatic(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, &vec![0u32; m * n])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn color(&self, a: usize, b: usize) -> u32 {
        self.colors[a * self.n + b]
    }

    /// Colors indexed by `a·n + b`.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ColoringFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidColoring(e.to_string()))?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColoringFile::from(self)).expect("coloring serializes")
    }
}

/// JSON interchange form: `{"m": .., "n": .., "colors": [[a, b, color], ..]}`
/// with one entry per edge of `K_{m,n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringFile {
    pub m: usize,
    pub n: usize,
    pub colors: Vec<(usize, usize, u64)>,
}

impl From<&ColoredCompleteBipartite> for ColoringFile {
    fn from(c: &ColoredCompleteBipartite) -> Self {
        let colors = (0..c.m)
            .flat_map(|a| (0..c.n).map(move |b| (a, b)))
            .map(|(a, b)| (a, b, u64::from(c.color(a, b))))
            .collect();
        Self {
            m: c.m,
            n: c.n,
            colors,
        }
    }
}

impl TryFrom<ColoringFile> for ColoredCompleteBipartite {
    type Error = Error;

    fn try_from(file: ColoringFile) -> Result<Self> {
        let (m, n) = (file.m, file.n);
        if m == 0 || n == 0 {
            return Err(Error::EmptyPart { m, n });
        }
        let mut by_edge = BTreeMap::new();
        for &(a, b, color) in &file.colors {
            if a >= m || b >= n {
                return Err(Error::InvalidColoring(format!(
                    "edge ({a}, {b}) out of range for parts of size {m} and {n}"
                )));
            }
            if by_edge.insert(a * n + b, color).is_some() {
                return Err(Error::InvalidColoring(format!("duplicate edge ({a}, {b})")));
            }
        }
        if by_edge.len() != m * n {
            return Err(Error::InvalidColoring(format!(
                "partial coloring: {} of {} edges colored",
                by_edge.len(),
                m * n
            )));
        }
        let raw: Vec<u64> = by_edge.into_values().collect();
        ColoredCompleteBipartite::new(m, n, &raw)
    }
}

/// A rainbow matching: `colors_used[i]` is the color of `matching.pairs[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowCertificate {
    pub matching: Matching,
    pub colors_used: Vec<u32>,
}

impl RainbowCertificate {
    /// Disjoint edges, distinct colors, and colors agreeing with `c`.
    pub fn is_valid_for(&self, c: &ColoredCompleteBipartite) -> bool {
        let pairs = &self.matching.pairs;
        let mut sorted = self.colors_used.clone();
        sorted.sort_unstable();
        sorted.dedup();
        self.matching.is_disjoint()
            && pairs.len() == self.colors_used.len()
            && sorted.len() == self.colors_used.len()
            && pairs
                .iter()
                .zip(&self.colors_used)
                .all(|(&(a, b), &col)| a < c.m && b < c.n && c.color(a, b) == col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    #[serde(rename = "K1")]
    K1,
    #[serde(rename = "K2_SMALL")]
    K2Small,
    #[serde(rename = "K2_GENERAL")]
    K2General,
    #[serde(rename = "MAIN")]
    Main,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::K1 => "K1",
            Regime::K2Small => "K2_SMALL",
            Regime::K2General => "K2_GENERAL",
            Regime::Main => "MAIN",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RbRegime {
    pub regime: Regime,
    pub value: usize,
}

/// Returns `(max, min, swapped)`.
pub fn normalize_orientation(m: usize, n: usize) -> (usize, usize, bool) {
    if m < n {
        (n, m, true)
    } else {
        (m, n, false)
    }
}

/// `rb(K_{m,n}, kK2)`. The part sizes may be given in either order.
pub fn rb_value(m: usize, n: usize, k: usize) -> Result<RbRegime> {
    let (m, n, _) = normalize_orientation(m, n);
    check_params(m, n, k)?;
    let (regime, value) = match k {
        1 => (Regime::K1, 1),
        2 if m == 2 => (Regime::K2Small, 3),
        2 => (Regime::K2General, 2),
        _ => (Regime::Main, m * (k - 2) + 2),
    };
    Ok(RbRegime { regime, value })
}

/// `(ext(m, n, (k-1)K2) + 2, ext(m, n, kK2) + 1)`, the lower and upper
/// bounds on `rb(K_{m,n}, kK2)`. Requires `k >= 2`; part sizes may be given
/// in either order.
pub fn bounds(m: usize, n: usize, k: usize) -> Result<(usize, usize)> {
    let (m, n, _) = normalize_orientation(m, n);
    check_params(m, n, k)?;
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    Ok((m * (k - 2) + 2, m * (k - 1) + 1))
}

/// Coloring of `K_{m,n}` with `m(k-2) + 1` colors and no rainbow `kK2`:
/// the edges into the first `k-2` vertices of `B` are colored pairwise
/// distinctly and every other edge shares one extra color. Requires
/// `m >= n >= k >= 2`.
pub fn build_extremal_coloring(m: usize, n: usize, k: usize) -> Result<ColoredCompleteBipartite> {
    check_params(m, n, k)?;
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    let rainbow_width = k - 2;
    let shared = m * rainbow_width;
    let raw: Vec<usize> = (0..m)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| {
            if b < rainbow_width {
                a * rainbow_width + b
            } else {
                shared
            }
        })
        .collect();
    ColoredCompleteBipartite::new(m, n, &raw)
}
