//! Immutable simple digraphs stored as sorted out-adjacency lists, plus the
//! reachability machinery everything else is built on: tier path counts,
//! distance balls, geodecity checking with concrete witnesses, reversal,
//! line digraphs and out-neighbourhood intersection queries.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Vertices are dense indices `0..n`.
pub type Vertex = usize;

/// Sentinel depth for "no recorded visit" in breadth-first scans.
const UNSEEN: usize = usize::MAX;

/// A finite simple digraph: no loops, no parallel arcs.
///
/// Out-lists are stored strictly ascending, so structural equality of two
/// `Digraph` values is label-for-label arc equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
}

/// Construction-time violations of the simple-digraph invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DigraphError {
    VertexOutOfRange { vertex: Vertex, order: usize },
    SelfLoop { vertex: Vertex },
    DuplicateArc { from: Vertex, to: Vertex },
}

impl fmt::Display for DigraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DigraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            DigraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            DigraphError::DuplicateArc { from, to } => {
                write!(f, "duplicate arc {from} -> {to}")
            }
        }
    }
}

impl core::error::Error for DigraphError {}

/// Extremes of the out- and in-degree sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_out: usize,
    pub max_out: usize,
    pub min_in: usize,
    pub max_in: usize,
}

impl Digraph {
    /// Builds a digraph from per-vertex out-neighbour lists.
    ///
    /// Lists are sorted into canonical (strictly ascending) order; loops,
    /// duplicate targets and out-of-range indices are rejected.
    pub fn from_out_lists(mut out: Vec<Vec<Vertex>>) -> Result<Self, DigraphError> {
        let n = out.len();
        for (v, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            for (i, &w) in list.iter().enumerate() {
                if w >= n {
                    return Err(DigraphError::VertexOutOfRange { vertex: w, order: n });
                }
                if w == v {
                    return Err(DigraphError::SelfLoop { vertex: v });
                }
                if i > 0 && list[i - 1] == w {
                    return Err(DigraphError::DuplicateArc { from: v, to: w });
                }
            }
        }
        Ok(Digraph { out })
    }

    /// Builds a digraph of order `n` from an arc list.
    pub fn from_arcs(n: usize, arcs: &[(Vertex, Vertex)]) -> Result<Self, DigraphError> {
        let mut out = vec![Vec::new(); n];
        for &(u, v) in arcs {
            if u >= n {
                return Err(DigraphError::VertexOutOfRange { vertex: u, order: n });
            }
            out[u].push(v);
        }
        Self::from_out_lists(out)
    }

    /// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> Self {
        let out = (0..n).map(|v| vec![(v + 1) % n]).collect();
        Digraph { out }
    }

    /// The complete digraph on `n` vertices (every ordered pair an arc).
    pub fn complete(n: usize) -> Self {
        let out = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        Digraph { out }
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Out-neighbours of `v`, strictly ascending.
    pub fn out(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// All arcs in (source, target) lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    pub fn out_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.out.iter().map(Vec::len)
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order()];
        for (_, v) in self.arcs() {
            deg[v] += 1;
        }
        deg
    }

    /// In-neighbours of `v`, ascending.
    pub fn in_neighbours(&self, v: Vertex) -> Vec<Vertex> {
        (0..self.order()).filter(|&u| self.has_arc(u, v)).collect()
    }

    /// Exact extrema of the degree sequences. All zeros for the empty digraph.
    pub fn degree_profile(&self) -> DegreeProfile {
        if self.order() == 0 {
            return DegreeProfile { min_out: 0, max_out: 0, min_in: 0, max_in: 0 };
        }
        let ins = self.in_degrees();
        DegreeProfile {
            min_out: self.out_degrees().min().unwrap(),
            max_out: self.out_degrees().max().unwrap(),
            min_in: ins.iter().copied().min().unwrap(),
            max_in: ins.iter().copied().max().unwrap(),
        }
    }

    /// True iff every vertex has out-degree and in-degree exactly `d`.
    pub fn is_diregular(&self, d: usize) -> bool {
        let p = self.degree_profile();
        self.order() > 0 && p.min_out == d && p.max_out == d && p.min_in == d && p.max_in == d
    }

    /// Counts distinct paths (no repeated vertices) of length exactly `l`
    /// from `u`. The support of the returned map is the depth-`l` tier.
    pub fn tier(&self, u: Vertex, l: usize) -> BTreeMap<Vertex, u64> {
        let mut counts = BTreeMap::new();
        let mut on_path = vec![false; self.order()];
        on_path[u] = true;
        self.tier_walk(u, l, &mut on_path, &mut counts);
        counts
    }

    fn tier_walk(
        &self,
        at: Vertex,
        remaining: usize,
        on_path: &mut [bool],
        counts: &mut BTreeMap<Vertex, u64>,
    ) {
        if remaining == 0 {
            *counts.entry(at).or_insert(0) += 1;
            return;
        }
        for &w in self.out(at) {
            if !on_path[w] {
                on_path[w] = true;
                self.tier_walk(w, remaining - 1, on_path, counts);
                on_path[w] = false;
            }
        }
    }

    /// Vertices at distance at most `l` from `u` (the union of tiers `0..=l`).
    pub fn ball(&self, u: Vertex, l: usize) -> BTreeSet<Vertex> {
        let mut depth = vec![UNSEEN; self.order()];
        depth[u] = 0;
        let mut frontier = vec![u];
        for level in 1..=l {
            let mut next = Vec::new();
            for &x in &frontier {
                for &w in self.out(x) {
                    if depth[w] == UNSEEN {
                        depth[w] = level;
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        depth
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != UNSEEN)
            .map(|(v, _)| v)
            .collect()
    }

    /// Checks the geodecity condition: no ordered pair joined by two distinct
    /// paths of length `<= k`, and no closed walk of length `1..=k`.
    ///
    /// On violation returns a concrete, independently checkable witness.
    pub fn check_k_geodetic(&self, k: usize) -> Result<(), GeodecityWitness> {
        for source in 0..self.order() {
            self.scan_source(source, k)?;
        }
        Ok(())
    }

    pub fn is_k_geodetic(&self, k: usize) -> bool {
        self.check_k_geodetic(k).is_ok()
    }

    /// Truncated breadth-first scan from one source with first-visit depth
    /// recording. A probed arc back into the source is a short closed walk; a
    /// probed arc into an already visited vertex yields two distinct walks,
    /// which resolve to either a duplicate-path or a closed-walk witness.
    fn scan_source(&self, source: Vertex, k: usize) -> Result<(), GeodecityWitness> {
        let n = self.order();
        let mut depth = vec![UNSEEN; n];
        let mut parent = vec![UNSEEN; n];
        depth[source] = 0;
        let mut frontier = vec![source];
        for level in 1..=k {
            let mut next = Vec::new();
            for &x in &frontier {
                for &w in self.out(x) {
                    if w == source {
                        let mut walk = chain_to(&parent, x);
                        walk.push(source);
                        return Err(GeodecityWitness::ShortClosedWalk { walk });
                    }
                    if depth[w] == UNSEEN {
                        depth[w] = level;
                        parent[w] = x;
                        next.push(w);
                    } else {
                        return Err(self.second_arrival(&parent, source, x, w));
                    }
                }
            }
            frontier = next;
        }
        Ok(())
    }

    /// Builds the witness for a second arrival at `w` via the probed arc
    /// `x -> w`. If `w` already lies on the chain of `x` the second walk is
    /// not simple and its closed sub-walk is reported instead.
    fn second_arrival(
        &self,
        parent: &[usize],
        source: Vertex,
        x: Vertex,
        w: Vertex,
    ) -> GeodecityWitness {
        let chain_x = chain_to(parent, x);
        if let Some(pos) = chain_x.iter().position(|&v| v == w) {
            let mut walk: Vec<Vertex> = chain_x[pos..].to_vec();
            walk.push(w);
            return GeodecityWitness::ShortClosedWalk { walk };
        }
        let path_a = chain_to(parent, w);
        let mut path_b = chain_x;
        path_b.push(w);
        GeodecityWitness::DuplicatePath { source, target: w, path_a, path_b }
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        let mut out = vec![Vec::new(); self.order()];
        for (u, v) in self.arcs() {
            out[v].push(u);
        }
        for list in &mut out {
            list.sort_unstable();
        }
        Digraph { out }
    }

    /// Relabels vertices: `perm[old] = new`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Digraph, DigraphError> {
        let n = self.order();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n {
                return Err(DigraphError::VertexOutOfRange { vertex: p, order: n });
            }
            seen[p] = true;
        }
        if perm.len() != n || seen.iter().any(|&s| !s) {
            return Err(DigraphError::VertexOutOfRange { vertex: perm.len(), order: n });
        }
        let mut out = vec![Vec::new(); n];
        for (u, v) in self.arcs() {
            out[perm[u]].push(perm[v]);
        }
        for list in &mut out {
            list.sort_unstable();
        }
        Ok(Digraph { out })
    }

    /// All unordered pairs `u < v` whose out-neighbourhoods intersect in
    /// exactly one vertex, together with that shared vertex.
    pub fn unique_common_outneighbour_pairs(&self) -> Vec<(Vertex, Vertex, Vertex)> {
        let mut pairs = Vec::new();
        for u in 0..self.order() {
            for v in (u + 1)..self.order() {
                let mut common = sorted_intersection(self.out(u), self.out(v));
                if common.len() == 1 {
                    pairs.push((u, v, common.pop().unwrap()));
                }
            }
        }
        pairs
    }

    /// True iff every two out-neighbourhoods are equal or disjoint — the
    /// adjacency condition characterizing line digraphs.
    pub fn heuchenne_holds(&self) -> bool {
        for u in 0..self.order() {
            for v in (u + 1)..self.order() {
                let common = sorted_intersection(self.out(u), self.out(v));
                if !common.is_empty() && self.out(u) != self.out(v) {
                    return false;
                }
            }
        }
        true
    }

    /// The line digraph: one vertex per arc of `self` (in lexicographic arc
    /// order), with an arc from `a -> b` to `c -> d` exactly when `b = c`.
    pub fn line_digraph(&self) -> Digraph {
        let arcs: Vec<(Vertex, Vertex)> = self.arcs().collect();
        let mut index = BTreeMap::new();
        for (i, &a) in arcs.iter().enumerate() {
            index.insert(a, i);
        }
        let mut out = vec![Vec::new(); arcs.len()];
        for (i, &(_, b)) in arcs.iter().enumerate() {
            for &d in self.out(b) {
                out[i].push(index[&(b, d)]);
            }
            out[i].sort_unstable();
        }
        Digraph { out }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}", self.order())?;
        for (v, list) in self.out.iter().enumerate() {
            write!(f, "; {v}->{list:?}")?;
        }
        write!(f, ")")
    }
}

/// Reconstructs the first-visit walk from the scan source to `v` (inclusive).
fn chain_to(parent: &[usize], v: Vertex) -> Vec<Vertex> {
    let mut walk = vec![v];
    let mut at = v;
    while parent[at] != UNSEEN {
        at = parent[at];
        walk.push(at);
    }
    walk.reverse();
    walk
}

fn sorted_intersection(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Concrete evidence that a digraph is not `k`-geodetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeodecityWitness {
    /// Two distinct paths of length `<= k` with the same endpoints. Paths are
    /// vertex sequences including both endpoints.
    DuplicatePath {
        source: Vertex,
        target: Vertex,
        path_a: Vec<Vertex>,
        path_b: Vec<Vertex>,
    },
    /// A closed walk of length `1..=k`; the sequence starts and ends at the
    /// same vertex.
    ShortClosedWalk { walk: Vec<Vertex> },
}

impl GeodecityWitness {
    pub fn source(&self) -> Vertex {
        match self {
            GeodecityWitness::DuplicatePath { source, .. } => *source,
            GeodecityWitness::ShortClosedWalk { walk } => walk[0],
        }
    }

    pub fn target(&self) -> Vertex {
        match self {
            GeodecityWitness::DuplicatePath { target, .. } => *target,
            GeodecityWitness::ShortClosedWalk { walk } => walk[walk.len() - 1],
        }
    }

    /// Re-checks the witness against `g` from scratch: every claimed arc must
    /// exist, lengths must fit in `k`, and the evidence must be genuinely
    /// violating (distinct simple paths with shared endpoints, or a closed
    /// walk).
    pub fn validate(&self, g: &Digraph, k: usize) -> bool {
        let arcs_ok = |seq: &[Vertex]| seq.windows(2).all(|w| g.has_arc(w[0], w[1]));
        match self {
            GeodecityWitness::DuplicatePath { source, target, path_a, path_b } => {
                let len_ok = |p: &[Vertex]| p.len() >= 2 && p.len() - 1 <= k;
                let simple = |p: &[Vertex]| {
                    let set: BTreeSet<_> = p.iter().collect();
                    set.len() == p.len()
                };
                let ends = |p: &[Vertex]| p[0] == *source && p[p.len() - 1] == *target;
                len_ok(path_a)
                    && len_ok(path_b)
                    && path_a != path_b
                    && ends(path_a)
                    && ends(path_b)
                    && simple(path_a)
                    && simple(path_b)
                    && arcs_ok(path_a)
                    && arcs_ok(path_b)
            }
            GeodecityWitness::ShortClosedWalk { walk } => {
                walk.len() >= 2
                    && walk.len() - 1 <= k
                    && walk[0] == walk[walk.len() - 1]
                    && arcs_ok(walk)
            }
        }
    }
}

impl fmt::Display for GeodecityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeodecityWitness::DuplicatePath { source, target, path_a, path_b } => write!(
                f,
                "duplicate paths {source} -> {target}: {path_a:?} and {path_b:?}"
            ),
            GeodecityWitness::ShortClosedWalk { walk } => {
                write!(f, "closed walk of length {}: {walk:?}", walk.len() - 1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cages::{left_cage, right_cage};
    use alloc::vec;

    #[test]
    fn construction_rejects_violations() {
        assert!(matches!(
            Digraph::from_arcs(2, &[(0, 0)]),
            Err(DigraphError::SelfLoop { vertex: 0 })
        ));
        assert!(matches!(
            Digraph::from_arcs(2, &[(0, 1), (0, 1)]),
            Err(DigraphError::DuplicateArc { from: 0, to: 1 })
        ));
        assert!(matches!(
            Digraph::from_arcs(2, &[(0, 2)]),
            Err(DigraphError::VertexOutOfRange { vertex: 2, order: 2 })
        ));
        // Unsorted input is normalized, not rejected.
        let g = Digraph::from_out_lists(vec![vec![2, 1], vec![], vec![]]).unwrap();
        assert_eq!(g.out(0), &[1, 2]);
    }

    #[test]
    fn degree_profile_examples() {
        let c3 = Digraph::directed_cycle(3);
        assert_eq!(
            c3.degree_profile(),
            DegreeProfile { min_out: 1, max_out: 1, min_in: 1, max_in: 1 }
        );

        let left = left_cage();
        assert_eq!(
            left.degree_profile(),
            DegreeProfile { min_out: 2, max_out: 2, min_in: 2, max_in: 2 }
        );

        let star = Digraph::from_arcs(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(
            star.degree_profile(),
            DegreeProfile { min_out: 0, max_out: 2, min_in: 0, max_in: 1 }
        );
    }

    #[test]
    fn diregularity() {
        assert!(right_cage().is_diregular(2));
        let path = Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!path.is_diregular(1));
        assert!(Digraph::complete(3).is_diregular(2));
    }

    #[test]
    fn tier_counts_paths_not_walks() {
        let left = left_cage();
        let t2: BTreeMap<Vertex, u64> = left.tier(0, 2);
        let expect: BTreeMap<Vertex, u64> = [(3, 1), (4, 1), (5, 1), (6, 1)].into_iter().collect();
        assert_eq!(t2, expect);

        assert_eq!(left.tier(4, 0), [(4, 1)].into_iter().collect());

        // K3: the length-2 walks 0->x->0 revisit the origin and are excluded.
        let k3 = Digraph::complete(3);
        assert_eq!(k3.tier(0, 2), [(1, 1), (2, 1)].into_iter().collect());
    }

    #[test]
    fn ball_examples() {
        let left = left_cage();
        assert_eq!(left.ball(0, 2), (0..=6).collect());
        assert_eq!(left.ball(3, 0), [3].into_iter().collect());
        let c4 = Digraph::directed_cycle(4);
        assert_eq!(c4.ball(0, 3), (0..4).collect());
    }

    #[test]
    fn geodecity_of_cages_and_digon() {
        assert!(left_cage().is_k_geodetic(2));
        assert!(right_cage().is_k_geodetic(2));

        let digon = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        let w = digon.check_k_geodetic(2).unwrap_err();
        assert!(matches!(w, GeodecityWitness::ShortClosedWalk { .. }));
        assert!(w.validate(&digon, 2));
    }

    #[test]
    fn line_digraph_of_left_cage_fails_at_k3() {
        let lg = left_cage().line_digraph();
        assert_eq!(lg.order(), 18);
        let w = lg.check_k_geodetic(3).unwrap_err();
        assert!(w.validate(&lg, 3));
    }

    #[test]
    fn witnesses_validate() {
        let k3 = Digraph::complete(3);
        let w = k3.check_k_geodetic(2).unwrap_err();
        assert!(w.validate(&k3, 2));

        // A tampered witness must not validate.
        let bogus = GeodecityWitness::DuplicatePath {
            source: 0,
            target: 1,
            path_a: vec![0, 1],
            path_b: vec![0, 1],
        };
        assert!(!bogus.validate(&k3, 2));
    }

    #[test]
    fn reverse_is_involutive_and_preserves_cycles() {
        let c3 = Digraph::directed_cycle(3);
        let r = c3.reverse();
        assert_eq!(r.out(0), &[2]);
        let left = left_cage();
        assert_eq!(left.reverse().reverse(), left);
        assert!(left.reverse().is_k_geodetic(2));
    }

    #[test]
    fn unique_common_pairs_on_left_cage() {
        let left = left_cage();
        let pairs = left.unique_common_outneighbour_pairs();
        assert!(pairs.contains(&(0, 3, 2)));
        assert!(!pairs.iter().any(|&(u, v, _)| (u, v) == (2, 4)));
        let c3 = Digraph::directed_cycle(3);
        assert!(c3.unique_common_outneighbour_pairs().is_empty());
    }

    #[test]
    fn heuchenne_condition() {
        assert!(Digraph::directed_cycle(5).heuchenne_holds());
        assert!(!left_cage().heuchenne_holds());
        assert!(Digraph::complete(3).line_digraph().heuchenne_holds());
    }

    #[test]
    fn line_digraph_shape() {
        let c3 = Digraph::directed_cycle(3);
        let lg = c3.line_digraph();
        assert_eq!(lg.order(), 3);
        assert!(lg.is_diregular(1));

        let left = left_cage();
        let lg = left.line_digraph();
        assert_eq!(lg.order(), left.arc_count());
        assert!(lg.is_diregular(2));
        assert!(right_cage().line_digraph().heuchenne_holds());
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let c3 = Digraph::directed_cycle(3);
        assert!(c3.relabel(&[0, 0, 1]).is_err());
        assert!(c3.relabel(&[2, 0, 1]).is_ok());
    }
}
