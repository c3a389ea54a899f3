//! Brute-force anti-Ramsey numbers `f(K_{m,n}, kK2)`.
//!
//! Colorings are enumerated up to relabeling as set partitions of the edge
//! set, each encoded by its restricted-growth string: edge `i` gets class
//! `s[i] <= 1 + max(s[..i])`. Every partition is checked with the exact
//! rainbow finder.
//!
//! The partition space splits into shards by fixing a prefix of the string.
//! Shards are independent: maxima and counts merge across them.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{normalize_orientation, rb_value, RainbowFinder};
use crate::extremal::check_params;
use crate::{Error, Result};

/// Default ceiling on the number of edges `mn` the oracle accepts.
pub const DEFAULT_LIMIT: usize = 12;

/// Restricted-growth strings of a fixed length, in lexicographic order.
///
/// The enumerator always sits on a valid string; [`advance`] moves to the
/// next one and returns `false` once the space is exhausted.
///
/// [`advance`]: PartitionEnumerator::advance
#[derive(Debug, Clone)]
pub struct PartitionEnumerator {
    current: Vec<u32>,
    // classes[i] = number of classes used by current[..=i]
    classes: Vec<u32>,
    fixed: usize,
    cap: u32,
}

impl PartitionEnumerator {
    /// Starts at the one-class partition of `len >= 1` elements.
    pub fn new(len: usize) -> Self {
        assert!(len > 0, "cannot partition an empty set");
        Self {
            current: vec![0; len],
            classes: vec![1; len],
            fixed: 0,
            cap: u32::MAX,
        }
    }

    /// Enumerates only the strings that start with `prefix`. Returns `None`
    /// if `prefix` is longer than `len` or not a restricted-growth string.
    pub fn with_prefix(len: usize, prefix: &[u32]) -> Option<Self> {
        if prefix.len() > len || !is_restricted_growth(prefix) {
            return None;
        }
        let mut e = Self::new(len);
        let mut classes = 0;
        for (i, &c) in prefix.iter().enumerate() {
            classes = classes.max(c + 1);
            e.current[i] = c;
            e.classes[i] = classes;
        }
        for i in prefix.len()..len {
            e.classes[i] = classes.max(1);
        }
        e.fixed = prefix.len();
        Some(e)
    }

    /// Restricts the enumeration to partitions with at most `cap` classes.
    /// The prefix, if any, must already respect the cap.
    pub fn with_class_cap(mut self, cap: usize) -> Self {
        assert!(cap >= 1, "class cap must be positive");
        assert!(
            self.class_count() <= cap,
            "prefix already uses more than {cap} classes"
        );
        self.cap = cap.min(u32::MAX as usize) as u32;
        self
    }

    pub fn current(&self) -> &[u32] {
        &self.current
    }

    pub fn len(&self) -> usize {
        self.current.len()
    }

    pub fn is_empty(&self) -> bool {
        self.current.is_empty()
    }

    pub fn class_count(&self) -> usize {
        *self.classes.last().expect("non-empty") as usize
    }

    pub fn advance(&mut self) -> bool {
        self.advance_bounded(0)
    }

    /// Moves to the next string whose subtree can still reach
    /// `min_classes` classes, skipping whole subtrees that cannot. The
    /// string landed on may itself use fewer classes.
    pub fn advance_bounded(&mut self, min_classes: usize) -> bool {
        let last = self.current.len() - 1;
        let mut pos = last;
        loop {
            let Some(j) = self.bump(pos) else {
                return false;
            };
            if self.classes[j] as usize + (last - j) >= min_classes {
                return true;
            }
            pos = j;
        }
    }

    /// Increments the rightmost position `<= upto` that can grow and
    /// resets everything after it to class 0.
    fn bump(&mut self, upto: usize) -> Option<usize> {
        let mut j = upto;
        loop {
            if j < self.fixed {
                return None;
            }
            let before = if j == 0 { 0 } else { self.classes[j - 1] };
            let max_id = before.min(self.cap - 1);
            if self.current[j] < max_id {
                self.current[j] += 1;
                self.classes[j] = before.max(self.current[j] + 1);
                let classes = self.classes[j];
                self.current[j + 1..].fill(0);
                self.classes[j + 1..].fill(classes);
                return Some(j);
            }
            j = j.checked_sub(1)?;
        }
    }
}

pub fn is_restricted_growth(s: &[u32]) -> bool {
    let mut classes = 0u32;
    for &c in s {
        if c > classes {
            return false;
        }
        classes = classes.max(c + 1);
    }
    true
}

/// All restricted-growth strings of length `depth`, in enumeration order.
pub fn shard_prefixes(depth: usize) -> Vec<Vec<u32>> {
    if depth == 0 {
        return vec![Vec::new()];
    }
    let mut e = PartitionEnumerator::new(depth);
    let mut out = vec![e.current().to_vec()];
    while e.advance() {
        out.push(e.current().to_vec());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    /// Most classes over rainbow-free partitions; 0 when none exists.
    pub f_exact: usize,
    pub rb_exact: usize,
    /// First maximizer in enumeration order, as a class per edge `a·n + b`.
    pub witness_partition: Option<Vec<u32>>,
    pub partitions_scanned: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub formula_rb: usize,
    pub oracle_rb: usize,
    pub agree: bool,
}

/// Normalizes the orientation and checks `1 <= k <= n` and `mn <= limit`.
fn validate(m: usize, n: usize, k: usize, limit: usize) -> Result<(usize, usize)> {
    let (m, n, _) = normalize_orientation(m, n);
    check_params(m, n, k)?;
    if m * n > limit {
        return Err(Error::LimitExceeded {
            elements: m * n,
            limit,
        });
    }
    Ok((m, n))
}

/// Exact `f(K_{m,n}, kK2)` and `rb = f + 1`, single-threaded.
pub fn brute_force_f(m: usize, n: usize, k: usize, limit: usize) -> Result<OracleResult> {
    brute_force_f_parallel(m, n, k, limit, 1)
}

/// As [`brute_force_f`], spreading shards over `jobs` threads. The value
/// and witness do not depend on `jobs`; `partitions_scanned` does, since
/// pruning is per shard.
pub fn brute_force_f_parallel(
    m: usize,
    n: usize,
    k: usize,
    limit: usize,
    jobs: usize,
) -> Result<OracleResult> {
    let (m, n) = validate(m, n, k, limit)?;
    let shards = run_sharded(m * n, jobs, |prefix| scan_max(m, n, k, prefix));
    let mut best = ShardMax::default();
    for shard in shards {
        best.partitions_scanned += shard.partitions_scanned;
        if shard.f > best.f {
            best.f = shard.f;
            best.witness = shard.witness;
        }
    }
    Ok(OracleResult {
        m,
        n,
        k,
        f_exact: best.f,
        rb_exact: best.f + 1,
        witness_partition: best.witness,
        partitions_scanned: best.partitions_scanned,
    })
}

/// Number of partitions of the edges of `K_{m,n}` into exactly
/// `class_count` classes that admit no rainbow `kK2`.
pub fn count_rainbow_free_partitions(
    m: usize,
    n: usize,
    k: usize,
    class_count: usize,
    limit: usize,
) -> Result<u64> {
    count_rainbow_free_partitions_parallel(m, n, k, class_count, limit, 1)
}

pub fn count_rainbow_free_partitions_parallel(
    m: usize,
    n: usize,
    k: usize,
    class_count: usize,
    limit: usize,
    jobs: usize,
) -> Result<u64> {
    let (m, n) = validate(m, n, k, limit)?;
    if class_count == 0 || class_count > m * n {
        return Ok(0);
    }
    let counts = run_sharded(m * n, jobs, |prefix| {
        scan_count(m, n, k, class_count, prefix)
    });
    Ok(counts.into_iter().sum())
}

/// Compares `rb_value` with the oracle for every `k <= n <= m` with
/// `mn <= limit`.
pub fn sweep_verify(limit: usize, jobs: usize) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for m in 1..=limit {
        for n in 1..=m.min(limit / m) {
            for k in 1..=n {
                let formula_rb = rb_value(m, n, k)?.value;
                let oracle_rb = brute_force_f_parallel(m, n, k, limit, jobs)?.rb_exact;
                rows.push(SweepRow {
                    m,
                    n,
                    k,
                    formula_rb,
                    oracle_rb,
                    agree: formula_rb == oracle_rb,
                });
            }
        }
    }
    Ok(rows)
}

/// Runs `task` once per shard prefix, on `jobs` threads, returning results
/// in enumeration order.
fn run_sharded<T, F>(len: usize, jobs: usize, task: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[u32]) -> T + Sync,
{
    if jobs <= 1 {
        return vec![task(&[])];
    }
    // Aim for several shards per thread; shard sizes are very uneven.
    let mut depth = 1;
    while depth < len && shard_prefixes(depth).len() < 8 * jobs {
        depth += 1;
    }
    let prefixes = shard_prefixes(depth);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| prefixes.par_iter().map(|p| task(p)).collect())
}

#[derive(Debug, Default)]
struct ShardMax {
    f: usize,
    witness: Option<Vec<u32>>,
    partitions_scanned: u64,
}

fn scan_max(m: usize, n: usize, k: usize, prefix: &[u32]) -> ShardMax {
    let mut e = PartitionEnumerator::with_prefix(m * n, prefix).expect("valid shard prefix");
    let mut finder = RainbowFinder::new(m, n);
    let mut out = ShardMax::default();
    loop {
        out.partitions_scanned += 1;
        let classes = e.class_count();
        if classes > out.f && !finder.search(e.current(), classes, k) {
            out.f = classes;
            out.witness = Some(e.current().to_vec());
        }
        if !e.advance_bounded(out.f + 1) {
            return out;
        }
    }
}

fn scan_count(m: usize, n: usize, k: usize, class_count: usize, prefix: &[u32]) -> u64 {
    let Some(e) = PartitionEnumerator::with_prefix(m * n, prefix) else {
        return 0;
    };
    if e.class_count() > class_count {
        return 0;
    }
    let mut e = e.with_class_cap(class_count);
    let mut finder = RainbowFinder::new(m, n);
    let mut count = 0;
    loop {
        if e.class_count() == class_count && !finder.search(e.current(), class_count, k) {
            count += 1;
        }
        if !e.advance_bounded(class_count) {
            return count;
        }
    }
}
