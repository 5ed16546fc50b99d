//! Independent reference implementations for test suites: matrix-based walk
//! counting, a brute-force enumerator of out-regular digraphs, permutation
//! isomorphism checking, and a tiny deterministic RNG. Nothing here shares
//! code with the production paths it is used to check.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{Digraph, Vertex};

/// Dense nonnegative-integer matrix power walk counts: `result[u][v]` is the
/// number of walks of length exactly `l` from `u` to `v`.
pub fn walk_count_matrix(g: &Digraph, l: usize) -> Vec<Vec<u64>> {
    let n = g.order();
    let mut acc: Vec<Vec<u64>> = (0..n)
        .map(|u| (0..n).map(|v| u64::from(u == v)).collect())
        .collect();
    for _ in 0..l {
        acc = step_walks(g, &acc);
    }
    acc
}

/// Matrix oracle for geodecity: `g` is k-geodetic exactly when every entry of
/// `sum_{i=0..=k} A^i` is at most 1, including the diagonal.
pub fn matrix_is_k_geodetic(g: &Digraph, k: usize) -> bool {
    let n = g.order();
    let mut total: Vec<Vec<u64>> = vec![vec![0; n]; n];
    let mut power: Vec<Vec<u64>> = (0..n)
        .map(|u| (0..n).map(|v| u64::from(u == v)).collect())
        .collect();
    for _ in 0..=k {
        for (total_row, power_row) in total.iter_mut().zip(&power) {
            for (cell, add) in total_row.iter_mut().zip(power_row) {
                *cell += add;
                if *cell > 1 {
                    return false;
                }
            }
        }
        power = step_walks(g, &power);
    }
    true
}

/// One multiplication by the adjacency matrix: walks one arc longer.
fn step_walks(g: &Digraph, rows: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = g.order();
    let mut next = vec![vec![0u64; n]; n];
    for (row, out) in rows.iter().zip(&mut next) {
        for (x, &count) in row.iter().enumerate() {
            if count > 0 {
                for &w in g.out(x) {
                    out[w] += count;
                }
            }
        }
    }
    next
}

/// Brute-force isomorphism test by trying all vertex permutations. Only
/// usable for very small orders.
pub fn isomorphic_by_permutation(a: &Digraph, b: &Digraph) -> bool {
    if a.order() != b.order() || a.arc_count() != b.arc_count() {
        return false;
    }
    let mut perm: Vec<Vertex> = (0..a.order()).collect();
    permute(&mut perm, 0, &mut |p| a.relabel(p).unwrap() == *b)
}

fn permute(perm: &mut Vec<Vertex>, at: usize, check: &mut impl FnMut(&[Vertex]) -> bool) -> bool {
    if at == perm.len() {
        return check(perm);
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        if permute(perm, at + 1, check) {
            perm.swap(at, i);
            return true;
        }
        perm.swap(at, i);
    }
    false
}

/// Enumerates every labelled digraph of order `n` in which each vertex has
/// out-degree exactly `d`, invoking `visit` on each.
pub fn for_each_out_regular(n: usize, d: usize, visit: &mut impl FnMut(&Digraph)) {
    let mut out: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    enumerate_vertex(0, n, d, &mut out, visit);
}

fn enumerate_vertex(
    v: usize,
    n: usize,
    d: usize,
    out: &mut Vec<Vec<Vertex>>,
    visit: &mut impl FnMut(&Digraph),
) {
    if v == n {
        let g = Digraph::from_out_lists(out.clone()).unwrap();
        visit(&g);
        return;
    }
    let targets: Vec<Vertex> = (0..n).filter(|&w| w != v).collect();
    let mut chosen = Vec::with_capacity(d);
    choose_targets(&targets, 0, d, &mut chosen, &mut |set| {
        out[v] = set.to_vec();
        enumerate_vertex(v + 1, n, d, out, visit);
        out[v].clear();
    });
}

fn choose_targets(
    targets: &[Vertex],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<Vertex>,
    apply: &mut impl FnMut(&[Vertex]),
) {
    if remaining == 0 {
        apply(chosen);
        return;
    }
    if targets.len() - from < remaining {
        return;
    }
    for i in from..targets.len() {
        chosen.push(targets[i]);
        choose_targets(targets, i + 1, remaining - 1, chosen, apply);
        chosen.pop();
    }
}

/// Brute-force reference search: enumerate all labelled d-out-regular
/// digraphs of the target order, filter by the matrix geodecity oracle and
/// the diregularity flag, then dedup by canonical form. The enumeration and
/// the filter are independent of the search engine; the canonical-form step
/// is itself validated against permutation isomorphism elsewhere.
pub fn brute_force_search(d: usize, k: usize, epsilon: usize, diregular: bool) -> Vec<Digraph> {
    let n = crate::moore::moore_bound(d, k).unwrap() as usize + epsilon;
    let mut seen: BTreeSet<crate::canon::CanonicalForm> = BTreeSet::new();
    let mut classes: Vec<Digraph> = Vec::new();
    for_each_out_regular(n, d, &mut |g| {
        if diregular && !g.is_diregular(d) {
            return;
        }
        if !matrix_is_k_geodetic(g, k) {
            return;
        }
        if seen.insert(crate::canon::canonical_form(g)) {
            classes.push(g.clone());
        }
    });
    classes
}

/// SplitMix64: a tiny deterministic RNG for sampling random digraphs without
/// external dependencies.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Bernoulli draw with probability `num / den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Samples a random simple digraph of order `n` with arc probability
/// `num/den` per ordered pair.
pub fn random_digraph(rng: &mut SplitMix64, n: usize, num: u64, den: u64) -> Digraph {
    let mut out: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for (u, list) in out.iter_mut().enumerate() {
        for v in 0..n {
            if u != v && rng.chance(num, den) {
                list.push(v);
            }
        }
    }
    Digraph::from_out_lists(out).unwrap()
}

/// Samples a uniformly random permutation of `0..n`.
pub fn random_permutation(rng: &mut SplitMix64, n: usize) -> Vec<Vertex> {
    let mut perm: Vec<Vertex> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        perm.swap(i, j);
    }
    perm
}

/// Distinct canonical forms of a list of digraphs, for cross-checking search
/// output against brute-force enumeration.
pub fn canonical_set(graphs: &[Digraph]) -> BTreeSet<crate::canon::CanonicalForm> {
    graphs.iter().map(crate::canon::canonical_form).collect()
}
