//! Moore bound arithmetic, excess/defect classification, outlier sets and
//! repeat multisets, and the multiset lifts of vertex-set-valued functions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::{DegreeProfile, Digraph, Vertex};

/// A finite multiset of vertices, stored as multiplicity counts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexMultiset {
    counts: BTreeMap<Vertex, u64>,
}

impl VertexMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: Vertex) {
        self.insert_n(v, 1);
    }

    pub fn insert_n(&mut self, v: Vertex, n: u64) {
        if n > 0 {
            *self.counts.entry(v).or_insert(0) += n;
        }
    }

    pub fn multiplicity(&self, v: Vertex) -> u64 {
        self.counts.get(&v).copied().unwrap_or(0)
    }

    /// Total size counting multiplicities.
    pub fn len(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.counts.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, u64)> + '_ {
        self.counts.iter().map(|(&v, &m)| (v, m))
    }

    /// Expansion with repeats, ascending: `{a, a, b}` iterates `a, a, b`.
    pub fn expanded(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        for (v, m) in self.iter() {
            for _ in 0..m {
                out.push(v);
            }
        }
        out
    }
}

impl FromIterator<Vertex> for VertexMultiset {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut ms = VertexMultiset::new();
        for v in iter {
            ms.insert(v);
        }
        ms
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MooreBoundOverflow;

impl fmt::Display for MooreBoundOverflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Moore bound does not fit in u64")
    }
}

impl core::error::Error for MooreBoundOverflow {}

/// The directed Moore bound `1 + d + d^2 + ... + d^k`, with overflow reported
/// rather than wrapped.
pub fn moore_bound(d: usize, k: usize) -> Result<u64, MooreBoundOverflow> {
    let d = d as u64;
    let mut total: u64 = 1;
    let mut power: u64 = 1;
    for _ in 0..k {
        power = power.checked_mul(d).ok_or(MooreBoundOverflow)?;
        total = total.checked_add(power).ok_or(MooreBoundOverflow)?;
    }
    Ok(total)
}

/// Vertices at distance at least `k + 1` from `u` (the complement of the
/// `k`-ball), ascending.
pub fn outlier_set(g: &Digraph, u: Vertex, k: usize) -> Vec<Vertex> {
    let ball = g.ball(u, k);
    (0..g.order()).filter(|v| !ball.contains(v)).collect()
}

/// Multiset union of the outlier sets over a multiset of base vertices.
pub fn outlier_multiset(g: &Digraph, bases: &VertexMultiset, k: usize) -> VertexMultiset {
    let mut out = VertexMultiset::new();
    for (u, m) in bases.iter() {
        for v in outlier_set(g, u, k) {
            out.insert_n(v, m);
        }
    }
    out
}

/// Multiset union of the out-neighbourhoods over a multiset of base vertices.
pub fn out_neighbour_multiset(g: &Digraph, bases: &VertexMultiset) -> VertexMultiset {
    let mut out = VertexMultiset::new();
    for (u, m) in bases.iter() {
        for &v in g.out(u) {
            out.insert_n(v, m);
        }
    }
    out
}

/// Repeat structure of a vertex: `v` carries multiplicity `t` when there are
/// `t + 1` distinct paths of length `<= k` from the base to `v`. A closed walk
/// of length `1..=k` registers as a repeat at the base vertex itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepeatMultiset {
    pub base: Vertex,
    pub entries: BTreeMap<Vertex, u64>,
}

impl RepeatMultiset {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn repeat_multiset(g: &Digraph, u: Vertex, k: usize) -> RepeatMultiset {
    let mut paths: BTreeMap<Vertex, u64> = BTreeMap::new();
    for l in 1..=k.min(g.order()) {
        for (v, count) in g.tier(u, l) {
            *paths.entry(v).or_insert(0) += count;
        }
    }
    let mut entries = BTreeMap::new();
    for (v, count) in paths {
        if v != u && count > 1 {
            entries.insert(v, count - 1);
        }
    }
    let closed = closed_walk_count(g, u, k);
    if closed > 0 {
        entries.insert(u, closed);
    }
    RepeatMultiset { base: u, entries }
}

/// Number of closed walks of length `1..=k` based at `u`, by dynamic
/// programming over walk counts.
fn closed_walk_count(g: &Digraph, u: Vertex, k: usize) -> u64 {
    let n = g.order();
    let mut walks = alloc::vec![0u64; n];
    walks[u] = 1;
    let mut total = 0u64;
    for _ in 1..=k {
        let mut next = alloc::vec![0u64; n];
        for (x, &count) in walks.iter().enumerate() {
            if count > 0 {
                for &w in g.out(x) {
                    next[w] += count;
                }
            }
        }
        total += next[u];
        walks = next;
    }
    total
}

/// Which side of the Moore bound the order lands on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Deviation {
    /// `n - M(d,k)` when the order is at least the bound.
    Excess(u64),
    /// `M(d,k) - n` when the order falls short (strictly positive).
    Defect(u64),
}

/// Per-digraph classification against the Moore bound for parameters `(d, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreReport {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub moore_bound: u64,
    pub deviation: Deviation,
    pub degrees: DegreeProfile,
    pub diregular: bool,
    pub geodetic: bool,
    /// Per-vertex sorted outlier lists; populated only when geodetic.
    pub outliers: Option<Vec<Vec<Vertex>>>,
}

impl MooreReport {
    pub fn excess(&self) -> Option<u64> {
        match self.deviation {
            Deviation::Excess(e) => Some(e),
            Deviation::Defect(_) => None,
        }
    }

    pub fn defect(&self) -> Option<u64> {
        match self.deviation {
            Deviation::Defect(d) => Some(d),
            Deviation::Excess(_) => None,
        }
    }
}

/// Classifies `g` against the `(d, k)` Moore bound. Outliers are computed for
/// geodetic digraphs regardless of degree surplus; the degree profile in the
/// report lets callers spot out-degrees above `d`.
pub fn classify(g: &Digraph, d: usize, k: usize) -> Result<MooreReport, MooreBoundOverflow> {
    let bound = moore_bound(d, k)?;
    let n = g.order();
    let deviation = if (n as u64) >= bound {
        Deviation::Excess(n as u64 - bound)
    } else {
        Deviation::Defect(bound - n as u64)
    };
    let geodetic = g.is_k_geodetic(k);
    let outliers = geodetic.then(|| (0..n).map(|u| outlier_set(g, u, k)).collect());
    Ok(MooreReport {
        n,
        d,
        k,
        moore_bound: bound,
        deviation,
        degrees: g.degree_profile(),
        diregular: g.is_diregular(d),
        geodetic,
        outliers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cages::{left_cage, right_cage};
    use alloc::vec;

    #[test]
    fn moore_bound_values() {
        assert_eq!(moore_bound(2, 2), Ok(7));
        assert_eq!(moore_bound(2, 3), Ok(15));
        for k in 1..=10 {
            assert_eq!(moore_bound(1, k), Ok(k as u64 + 1));
        }
        assert_eq!(moore_bound(u32::MAX as usize, 64), Err(MooreBoundOverflow));
    }

    #[test]
    fn moore_bound_geometric_recurrence() {
        for d in 1..=5usize {
            for k in 2..=8usize {
                let m = moore_bound(d, k).unwrap();
                let prev = moore_bound(d, k - 1).unwrap();
                assert_eq!(m, d as u64 * prev + 1);
            }
        }
    }

    #[test]
    fn outlier_sets_of_cages() {
        let left = left_cage();
        assert_eq!(outlier_set(&left, 0, 2), vec![7, 8]);
        let right = right_cage();
        assert_eq!(outlier_set(&right, 0, 2), vec![7, 8]);
        let k3 = Digraph::complete(3);
        for u in 0..3 {
            assert!(outlier_set(&k3, u, 1).is_empty());
        }
    }

    #[test]
    fn outlier_multiset_examples() {
        let left = left_cage();
        let bases: VertexMultiset = [1, 2].into_iter().collect();
        let lifted = outlier_multiset(&left, &bases, 2);
        assert_eq!(lifted.expanded(), vec![0, 3, 4, 8]);

        assert!(outlier_multiset(&left, &VertexMultiset::new(), 2).is_empty());

        let mut doubled = VertexMultiset::new();
        doubled.insert_n(0, 2);
        let lifted = outlier_multiset(&left, &doubled, 2);
        assert_eq!(lifted.multiplicity(7), 2);
        assert_eq!(lifted.multiplicity(8), 2);
        assert_eq!(lifted.len(), 4);
    }

    #[test]
    fn repeat_multisets() {
        let left = left_cage();
        for u in 0..left.order() {
            assert!(repeat_multiset(&left, u, 2).is_empty());
        }

        let k3 = Digraph::complete(3);
        let r = repeat_multiset(&k3, 0, 2);
        // 1 and 2 are each reached by a 1-path and a 2-path; the closed
        // 2-walks through 0 register at the base.
        assert_eq!(r.entries.get(&1), Some(&1));
        assert_eq!(r.entries.get(&2), Some(&1));
        assert_eq!(r.entries.get(&0), Some(&2));

        let digon = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        let r = repeat_multiset(&digon, 0, 2);
        assert_eq!(r.entries, [(0, 1)].into_iter().collect());
    }

    #[test]
    fn classify_examples() {
        let left = left_cage();
        let report = classify(&left, 2, 2).unwrap();
        assert_eq!(report.n, 9);
        assert_eq!(report.moore_bound, 7);
        assert_eq!(report.excess(), Some(2));
        assert!(report.diregular);
        assert!(report.geodetic);
        let outliers = report.outliers.unwrap();
        assert!(outliers.iter().all(|o| o.len() == 2));

        let c4 = Digraph::directed_cycle(4);
        let report = classify(&c4, 1, 3).unwrap();
        assert_eq!(report.excess(), Some(0));
        assert!(report.geodetic);

        let k3 = Digraph::complete(3);
        let report = classify(&k3, 2, 2).unwrap();
        assert_eq!(report.defect(), Some(4));
        assert!(!report.geodetic);
        assert!(report.outliers.is_none());
    }

    #[test]
    fn outlier_set_size_matches_ball_complement() {
        let right = right_cage();
        for u in 0..right.order() {
            let ball = right.ball(u, 2);
            assert_eq!(outlier_set(&right, u, 2).len(), right.order() - ball.len());
        }
    }
}
