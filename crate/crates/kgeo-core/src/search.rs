//! Exhaustive, isomorphism-free generation of d-out-regular k-geodetic
//! digraphs of order M(d,k) + epsilon.
//!
//! Generation discipline: vertex 0 is the root; out-lists are filled in label
//! order with targets chosen in strictly ascending order per vertex; a target
//! is either an already-introduced label or the next fresh label. When every
//! introduced vertex is fully assigned while unintroduced vertices remain,
//! the next vertex starts a new root, so digraphs that are not reachable
//! from a single root are generated too. Every digraph therefore appears
//! once per labelling consistent with this discipline; leaves are deduped by
//! canonical form, which collapses the remaining symmetry.
//!
//! Geodecity is maintained incrementally: a per-ordered-pair table stores the
//! length of the unique walk of length <= k between the pair, if any. Adding
//! an arc merges the in-cone of its tail with the out-cone of its head; any
//! collision with an existing entry or the diagonal rejects the branch.
//! Every emitted leaf is re-verified by the independent breadth-first
//! geodecity checker before it reaches the result set.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, CanonicalForm};
use crate::digraph::{Digraph, Vertex};
use crate::moore::moore_bound;

const NO_WALK: u8 = u8::MAX;

/// Problem instance: degree, geodecity length, excess, and search budgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchParams {
    pub d: usize,
    pub k: usize,
    pub epsilon: usize,
    pub require_diregular: bool,
    /// Budget on accepted search-tree nodes; exceeding it truncates the
    /// search and flags the outcome incomplete.
    pub max_nodes: Option<u64>,
    /// Wall-clock budget in seconds; enforced by drivers with access to a
    /// clock, echoed here so outcomes carry the full instance description.
    pub time_budget_secs: Option<u64>,
    /// Tree depth (number of placed arcs) at which the search splits into
    /// independently runnable tasks.
    pub split_depth: usize,
    /// Checkpoint file path; consumed by drivers, echoed here.
    pub checkpoint_path: Option<String>,
}

pub const DEFAULT_SPLIT_DEPTH: usize = 4;

impl SearchParams {
    pub fn new(d: usize, k: usize, epsilon: usize) -> Self {
        SearchParams {
            d,
            k,
            epsilon,
            require_diregular: false,
            max_nodes: None,
            time_budget_secs: None,
            split_depth: DEFAULT_SPLIT_DEPTH,
            checkpoint_path: None,
        }
    }

    pub fn diregular(mut self, yes: bool) -> Self {
        self.require_diregular = yes;
        self
    }

    /// The order every candidate digraph has: `M(d,k) + epsilon`.
    pub fn target_order(&self) -> Result<usize, SearchError> {
        self.validate()?;
        Ok(self.order_unchecked())
    }

    fn order_unchecked(&self) -> usize {
        (moore_bound(self.d, self.k).unwrap() as usize) + self.epsilon
    }

    pub fn total_slots(&self) -> Result<usize, SearchError> {
        Ok(self.target_order()? * self.d)
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.d < 1 {
            return Err(SearchError::InvalidDegree);
        }
        if self.k < 1 || self.k >= NO_WALK as usize {
            return Err(SearchError::InvalidLength);
        }
        let bound = moore_bound(self.d, self.k).map_err(|_| SearchError::OrderTooLarge)?;
        let order = bound
            .checked_add(self.epsilon as u64)
            .ok_or(SearchError::OrderTooLarge)?;
        // The pair table is n*n cells; cap the order well below anything a
        // complete search could traverse anyway.
        if order > 4096 {
            return Err(SearchError::OrderTooLarge);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    InvalidDegree,
    InvalidLength,
    OrderTooLarge,
    /// A replayed task prefix was rejected: it does not describe a valid
    /// branch of this instance's search tree.
    InvalidPrefix,
    /// An emitted leaf failed independent re-verification. This indicates a
    /// defect in the incremental pruning tables, never a property of the
    /// input.
    LeafVerification { detail: String },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::InvalidDegree => write!(f, "degree must be at least 1"),
            SearchError::InvalidLength => write!(f, "k must be in 1..255"),
            SearchError::OrderTooLarge => write!(f, "target order M(d,k)+epsilon is too large"),
            SearchError::InvalidPrefix => write!(f, "task prefix is not a valid search branch"),
            SearchError::LeafVerification { detail } => {
                write!(f, "leaf failed independent re-verification: {detail}")
            }
        }
    }
}

impl core::error::Error for SearchError {}

/// Budget accounting shared by one search run. `note_node` is called once per
/// accepted placement; the optional hook lets drivers wire in wall clocks and
/// cross-thread budgets.
pub struct SearchControl<'a> {
    nodes: u64,
    max_nodes: Option<u64>,
    hook: Option<&'a mut dyn FnMut() -> bool>,
    stopped: bool,
}

impl<'a> SearchControl<'a> {
    pub fn new(max_nodes: Option<u64>) -> Self {
        SearchControl { nodes: 0, max_nodes, hook: None, stopped: false }
    }

    /// `hook` returning true requests a stop.
    pub fn with_hook(max_nodes: Option<u64>, hook: &'a mut dyn FnMut() -> bool) -> Self {
        SearchControl { nodes: 0, max_nodes, hook: Some(hook), stopped: false }
    }

    fn note_node(&mut self) -> bool {
        self.nodes += 1;
        if let Some(max) = self.max_nodes {
            if self.nodes > max {
                self.stopped = true;
            }
        }
        if let Some(hook) = self.hook.as_mut() {
            if hook() {
                self.stopped = true;
            }
        }
        !self.stopped
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn stopped(&self) -> bool {
        self.stopped
    }
}

/// A growing digraph inside the search: assigned out-lists for a prefix of
/// vertices, the earliest-walk-length table for pairs within distance k,
/// in-degree counts, and the next fresh label.
pub struct PartialDigraph {
    n: usize,
    d: usize,
    k: usize,
    require_diregular: bool,
    out: Vec<Vec<Vertex>>,
    /// walk[a*n + b]: length of the unique walk of length <= k from a to b,
    /// or NO_WALK. The diagonal is implicit (always the trivial walk).
    walk: Vec<u8>,
    in_deg: Vec<usize>,
    next_fresh: usize,
    /// Vertex whose out-list is currently being filled.
    cur: usize,
    placed: usize,
    frames: Vec<Frame>,
    touched: Vec<usize>,
}

struct Frame {
    target: Vertex,
    cur_before: usize,
    fresh_before: usize,
    touched_from: usize,
}

impl PartialDigraph {
    pub fn new(params: &SearchParams) -> Result<Self, SearchError> {
        let n = params.target_order()?;
        Ok(PartialDigraph {
            n,
            d: params.d,
            k: params.k,
            require_diregular: params.require_diregular,
            out: vec![Vec::new(); n],
            walk: vec![NO_WALK; n * n],
            in_deg: vec![0; n],
            next_fresh: 1,
            cur: 0,
            placed: 0,
            frames: Vec::new(),
            touched: Vec::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn placed_arcs(&self) -> usize {
        self.placed
    }

    pub fn next_fresh(&self) -> usize {
        self.next_fresh
    }

    pub fn is_complete(&self) -> bool {
        self.placed == self.n * self.d
    }

    /// Smallest admissible target for the current slot (ascending storage).
    fn candidate_floor(&self) -> Vertex {
        self.out[self.cur].last().map_or(0, |&t| t + 1)
    }

    /// Largest admissible target: existing labels plus one fresh label. A
    /// vertex reached while unintroduced starts a new root, which shifts the
    /// fresh label past it.
    fn candidate_ceiling(&self) -> Vertex {
        let fresh = if self.cur == self.next_fresh { self.cur + 1 } else { self.next_fresh };
        fresh.min(self.n - 1)
    }

    /// Attempts to place the arc `cur -> target`, enforcing simpleness,
    /// in-degree caps and prefix geodecity. Returns false and leaves the
    /// state untouched when the arc is inadmissible.
    fn try_place(&mut self, target: Vertex) -> bool {
        debug_assert!(!self.is_complete());
        let cur = self.cur;
        debug_assert!(target >= self.candidate_floor() && target <= self.candidate_ceiling());
        if target == cur {
            return false;
        }
        if self.require_diregular && self.in_deg[target] >= self.d {
            return false;
        }
        if !self.walks_admit(cur, target) {
            return false;
        }
        if self.require_diregular && !self.completion_feasible(cur, target) {
            return false;
        }

        let frame = Frame {
            target,
            cur_before: cur,
            fresh_before: self.next_fresh,
            touched_from: self.touched.len(),
        };
        if cur == self.next_fresh {
            self.next_fresh = cur + 1;
        }
        if target == self.next_fresh {
            self.next_fresh += 1;
        }
        self.record_walks(cur, target);
        self.out[cur].push(target);
        self.in_deg[target] += 1;
        self.placed += 1;
        if self.out[cur].len() == self.d {
            self.cur += 1;
        }
        self.frames.push(frame);
        true
    }

    fn unplace(&mut self) {
        let frame = self.frames.pop().expect("unplace without matching place");
        for &cell in &self.touched[frame.touched_from..] {
            self.walk[cell] = NO_WALK;
        }
        self.touched.truncate(frame.touched_from);
        self.cur = frame.cur_before;
        self.next_fresh = frame.fresh_before;
        let popped = self.out[self.cur].pop();
        debug_assert_eq!(popped, Some(frame.target));
        self.in_deg[frame.target] -= 1;
        self.placed -= 1;
    }

    /// Checks that adding `x -> y` creates no second walk and no short closed
    /// walk. Every new walk of length <= k through the arc decomposes as
    /// (walk into x) + arc + (walk out of y) with both parts in the current
    /// digraph.
    fn walks_admit(&self, x: Vertex, y: Vertex) -> bool {
        let n = self.n;
        let k = self.k as u32;
        for a in 0..n {
            let p = if a == x { 0 } else { self.walk[a * n + x] as u32 };
            if p + 1 > k {
                continue;
            }
            let row = a * n;
            for b in 0..n {
                let q = if b == y { 0 } else { self.walk[y * n + b] as u32 };
                if p + 1 + q > k {
                    continue;
                }
                if a == b {
                    return false; // closed walk of length <= k
                }
                if self.walk[row + b] != NO_WALK {
                    return false; // second walk between a and b
                }
            }
        }
        true
    }

    fn record_walks(&mut self, x: Vertex, y: Vertex) {
        let n = self.n;
        let k = self.k as u32;
        for a in 0..n {
            let p = if a == x { 0 } else { self.walk[a * n + x] as u32 };
            if p + 1 > k {
                continue;
            }
            for b in 0..n {
                let q = if b == y { 0 } else { self.walk[y * n + b] as u32 };
                if p + 1 + q > k {
                    continue;
                }
                debug_assert_ne!(a, b);
                let cell = a * n + b;
                debug_assert_eq!(self.walk[cell], NO_WALK);
                self.walk[cell] = (p + 1 + q) as u8;
                self.touched.push(cell);
            }
        }
    }

    /// Counting feasibility for the diregular constraint after hypothetically
    /// placing `cur -> target`: every in-degree deficit must be coverable by
    /// the remaining slots, where `cur` can still contribute at most one arc
    /// per target above `target` and each later vertex at most one arc per
    /// non-self target.
    fn completion_feasible(&self, cur: Vertex, target: Vertex) -> bool {
        let later_vertices = self.n - 1 - cur;
        // Deficits are bounded by d, so only the endgame can fail.
        if later_vertices > self.d {
            return true;
        }
        let cur_slots_after = self.d - (self.out[cur].len() + 1);
        for y in 0..self.n {
            let have = self.in_deg[y] + usize::from(y == target);
            if have >= self.d {
                continue;
            }
            let need = self.d - have;
            let from_cur = usize::from(cur_slots_after > 0 && y > target && y != cur);
            let from_later = later_vertices - usize::from(y > cur);
            if need > from_cur + from_later {
                return false;
            }
        }
        true
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_out_lists(self.out.clone()).expect("partial state is a valid simple digraph")
    }

    /// Flattened placement choices so far, in placement order.
    pub fn prefix(&self) -> TaskPrefix {
        TaskPrefix { choices: self.frames.iter().map(|f| f.target).collect() }
    }
}

/// A branch of the search tree identified by its arc-target choices from the
/// root, in placement order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaskPrefix {
    pub choices: Vec<Vertex>,
}

/// Result of exhausting (or truncating) one subtree.
#[derive(Debug)]
pub struct SubtreeOutcome {
    pub leaves: Vec<Digraph>,
    pub nodes: u64,
    pub complete: bool,
}

/// Deterministic enumeration of all viable branches at `split_depth`.
#[derive(Debug)]
pub struct PrefixEnumeration {
    pub prefixes: Vec<TaskPrefix>,
    pub nodes: u64,
    pub complete: bool,
}

/// Certified outcome of a search run.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub params: SearchParams,
    /// Canonical representatives, sorted by canonical form; pairwise
    /// non-isomorphic.
    pub results: Vec<Digraph>,
    pub canonical_forms: Vec<CanonicalForm>,
    pub nodes_explored: u64,
    /// True only when the whole tree was exhausted within budgets.
    pub complete: bool,
    /// Filled by drivers that own a clock.
    pub duration_ms: Option<u64>,
}

impl SearchOutcome {
    /// A completed run with an empty result set is an exhaustion certificate
    /// for nonexistence.
    pub fn certifies_nonexistence(&self) -> bool {
        self.complete && self.results.is_empty()
    }
}

/// Enumerates every viable search branch of depth `min(split_depth,
/// total_slots)`. Nodes at those depths are counted here and nowhere else.
pub fn enumerate_prefixes(
    params: &SearchParams,
    ctl: &mut SearchControl,
) -> Result<PrefixEnumeration, SearchError> {
    let depth = params.split_depth.min(params.total_slots()?);
    let mut pd = PartialDigraph::new(params)?;
    let mut prefixes = Vec::new();
    enumerate_rec(&mut pd, depth, ctl, &mut prefixes);
    Ok(PrefixEnumeration { prefixes, nodes: ctl.nodes(), complete: !ctl.stopped() })
}

fn enumerate_rec(
    pd: &mut PartialDigraph,
    depth: usize,
    ctl: &mut SearchControl,
    sink: &mut Vec<TaskPrefix>,
) {
    if pd.placed_arcs() == depth {
        sink.push(pd.prefix());
        return;
    }
    let floor = pd.candidate_floor();
    let ceiling = pd.candidate_ceiling();
    for target in floor..=ceiling {
        if ctl.stopped() {
            return;
        }
        if pd.try_place(target) {
            if !ctl.note_node() {
                pd.unplace();
                return;
            }
            enumerate_rec(pd, depth, ctl, sink);
            pd.unplace();
        }
    }
}

/// Replays `prefix` and exhausts the subtree below it. Replayed placements
/// are not counted; deeper placements are.
pub fn run_prefix(
    params: &SearchParams,
    prefix: &TaskPrefix,
    ctl: &mut SearchControl,
) -> Result<SubtreeOutcome, SearchError> {
    let mut pd = PartialDigraph::new(params)?;
    for &target in &prefix.choices {
        if target < pd.candidate_floor() || target > pd.candidate_ceiling() || !pd.try_place(target)
        {
            return Err(SearchError::InvalidPrefix);
        }
    }
    let mut leaves = Vec::new();
    let before = ctl.nodes();
    dfs(&mut pd, ctl, &mut leaves)?;
    Ok(SubtreeOutcome { leaves, nodes: ctl.nodes() - before, complete: !ctl.stopped() })
}

fn dfs(
    pd: &mut PartialDigraph,
    ctl: &mut SearchControl,
    sink: &mut Vec<Digraph>,
) -> Result<(), SearchError> {
    if pd.is_complete() {
        sink.push(verified_leaf(pd)?);
        return Ok(());
    }
    let floor = pd.candidate_floor();
    let ceiling = pd.candidate_ceiling();
    for target in floor..=ceiling {
        if ctl.stopped() {
            return Ok(());
        }
        if pd.try_place(target) {
            if !ctl.note_node() {
                pd.unplace();
                return Ok(());
            }
            dfs(pd, ctl, sink)?;
            pd.unplace();
        }
    }
    Ok(())
}

/// Independent post-hoc verification of a completed assignment: degree
/// checks and the breadth-first geodecity checker, none of which look at
/// the incremental walk table.
fn verified_leaf(pd: &PartialDigraph) -> Result<Digraph, SearchError> {
    let g = pd.to_digraph();
    let profile = g.degree_profile();
    if profile.min_out != pd.d || profile.max_out != pd.d {
        return Err(SearchError::LeafVerification {
            detail: alloc::format!("out-degrees {}..{}", profile.min_out, profile.max_out),
        });
    }
    if pd.require_diregular && !g.is_diregular(pd.d) {
        return Err(SearchError::LeafVerification {
            detail: alloc::format!("in-degrees {}..{}", profile.min_in, profile.max_in),
        });
    }
    if let Err(witness) = g.check_k_geodetic(pd.k) {
        return Err(SearchError::LeafVerification {
            detail: alloc::format!("geodecity violation: {witness}"),
        });
    }
    Ok(g)
}

/// Exhaustive single-threaded search. When complete, the results are exactly
/// the isomorphism classes of d-out-regular (and, when flagged, diregular)
/// k-geodetic digraphs of order M(d,k) + epsilon, independent of
/// `split_depth`.
pub fn search(params: &SearchParams) -> Result<SearchOutcome, SearchError> {
    params.validate()?;
    let mut ctl = SearchControl::new(params.max_nodes);
    let enumeration = enumerate_prefixes(params, &mut ctl)?;
    let mut complete = enumeration.complete;
    let mut forms: BTreeSet<CanonicalForm> = BTreeSet::new();
    for prefix in &enumeration.prefixes {
        if ctl.stopped() {
            complete = false;
            break;
        }
        let sub = run_prefix(params, prefix, &mut ctl)?;
        complete &= sub.complete;
        for leaf in sub.leaves {
            forms.insert(canonical_form(&leaf));
        }
    }
    Ok(assemble_outcome(params.clone(), forms, ctl.nodes(), complete))
}

/// Runs the same exhaustive engine with the intent of certifying
/// nonexistence: the value of the outcome is `complete = true` with an empty
/// result set, plus the node count as the exhaustion certificate.
pub fn certify_nonexistence(params: &SearchParams) -> Result<SearchOutcome, SearchError> {
    search(params)
}

/// Builds the sorted, deduplicated outcome from collected canonical forms.
pub fn assemble_outcome(
    params: SearchParams,
    forms: BTreeSet<CanonicalForm>,
    nodes_explored: u64,
    complete: bool,
) -> SearchOutcome {
    let canonical_forms: Vec<CanonicalForm> = forms.into_iter().collect();
    let results: Vec<Digraph> = canonical_forms.iter().map(CanonicalForm::to_digraph).collect();
    SearchOutcome { params, results, canonical_forms, nodes_explored, complete, duration_ms: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cages::{left_cage, right_cage};

    fn run(d: usize, k: usize, epsilon: usize, diregular: bool) -> SearchOutcome {
        let params = SearchParams::new(d, k, epsilon).diregular(diregular);
        search(&params).unwrap()
    }

    #[test]
    fn moore_digraphs_for_degree_one_are_cycles() {
        for k in 1..=4 {
            let outcome = run(1, k, 0, false);
            assert!(outcome.complete);
            assert_eq!(outcome.results.len(), 1, "k={k}");
            let expected = canonical_form(&Digraph::directed_cycle(k + 1));
            assert_eq!(outcome.canonical_forms[0], expected);
        }
    }

    #[test]
    fn no_moore_digraphs_for_degree_two() {
        let outcome = run(2, 2, 0, false);
        assert!(outcome.complete);
        assert!(outcome.results.is_empty());
        assert!(outcome.certifies_nonexistence());
    }

    #[test]
    fn no_excess_one_digraphs_for_degree_two() {
        for diregular in [false, true] {
            let outcome = run(2, 2, 1, diregular);
            assert!(outcome.complete);
            assert!(outcome.results.is_empty());
        }
    }

    #[test]
    fn exactly_two_excess_two_digraphs() {
        let outcome = run(2, 2, 2, false);
        assert!(outcome.complete);
        assert_eq!(outcome.results.len(), 2);
        let expected: BTreeSet<CanonicalForm> =
            [canonical_form(&left_cage()), canonical_form(&right_cage())].into_iter().collect();
        let got: BTreeSet<CanonicalForm> = outcome.canonical_forms.iter().cloned().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn split_depth_does_not_change_results_or_node_counts() {
        let mut baseline = None;
        for split_depth in [0, 3, 7] {
            let mut params = SearchParams::new(2, 2, 1);
            params.split_depth = split_depth;
            let outcome = search(&params).unwrap();
            assert!(outcome.complete);
            let key = (outcome.canonical_forms.clone(), outcome.nodes_explored);
            match &baseline {
                None => baseline = Some(key),
                Some(b) => assert_eq!(*b, key, "split_depth={split_depth}"),
            }
        }
    }

    #[test]
    fn node_budget_truncates_and_flags_incomplete() {
        let mut params = SearchParams::new(2, 2, 2);
        params.max_nodes = Some(10);
        let outcome = search(&params).unwrap();
        assert!(!outcome.complete);
        assert!(!outcome.certifies_nonexistence());
    }

    #[test]
    fn prefix_replay_rejects_garbage() {
        let params = SearchParams::new(2, 2, 0);
        let mut ctl = SearchControl::new(None);
        let bad = TaskPrefix { choices: alloc::vec![5] };
        assert_eq!(run_prefix(&params, &bad, &mut ctl).unwrap_err(), SearchError::InvalidPrefix);
    }

    #[test]
    fn stop_hook_halts_search() {
        let mut calls = 0u64;
        let mut hook = || {
            calls += 1;
            calls > 2
        };
        let params = SearchParams::new(2, 2, 2);
        let mut ctl = SearchControl::with_hook(None, &mut hook);
        let enumeration = enumerate_prefixes(&params, &mut ctl).unwrap();
        assert!(!enumeration.complete);
        assert!(ctl.stopped());
    }
}
