//! Labelled configurations around a pair of vertices with a unique common
//! out-neighbour in a 2-out-regular digraph.
//!
//! The labelling follows a fixed inductive scheme on the pair's out-trees:
//! `u1` is the private out-neighbour of `u`, `u2` the shared one, and each
//! labelled vertex `u_i` passes its two out-neighbours to labels `u_{2i+1}`
//! and `u_{2i+2}` in ascending vertex order. The `v` side mirrors this with
//! `v2 = u2`. Side vertices `u^-`/`v^-` (the second in-neighbour of `u1`/`v1`)
//! and `u^+`/`v^+` (the second out-neighbour of `u^-`/`v^-`) are recorded only
//! when uniquely determined; otherwise the ambiguity is reported, not guessed.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::{Digraph, Vertex};

/// Tree labels populated in a [`PairConfig`]: `U(i)` for `u_i` with
/// `3 <= i <= 14`, `V(i)` for `v_i` with `3 <= i <= 10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PairLabel {
    U(u8),
    V(u8),
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairLabel::U(i) => write!(f, "u{i}"),
            PairLabel::V(i) => write!(f, "v{i}"),
        }
    }
}

/// A side label that could not be bound to a unique vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelAmbiguity {
    /// `u^-` needs `u1` to have in-degree exactly 2.
    UMinus { in_degree: usize },
    /// `v^-` needs `v1` to have in-degree exactly 2.
    VMinus { in_degree: usize },
}

/// The configuration around a unique-common-out-neighbour pair `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairConfig {
    pub u: Vertex,
    pub v: Vertex,
    /// Private out-neighbour of `u`.
    pub u1: Vertex,
    /// The unique common out-neighbour (also plays the role of `v2`).
    pub u2: Vertex,
    /// Private out-neighbour of `v`.
    pub v1: Vertex,
    pub u_minus: Option<Vertex>,
    pub u_plus: Option<Vertex>,
    pub v_minus: Option<Vertex>,
    pub v_plus: Option<Vertex>,
    /// Tree labels `u3..u14` and `v3..v10`.
    pub labels: BTreeMap<PairLabel, Vertex>,
    pub ambiguities: Vec<LabelAmbiguity>,
}

impl PairConfig {
    pub fn label(&self, label: PairLabel) -> Option<Vertex> {
        self.labels.get(&label).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairConfigError {
    /// `u` and `v` do not have exactly one common out-neighbour.
    NotAValidPair { u: Vertex, v: Vertex, common: Vec<Vertex> },
    /// The labelling scheme is only defined on 2-out-regular digraphs.
    NotTwoOutRegular { vertex: Vertex, out_degree: usize },
    VertexOutOfRange { vertex: Vertex, order: usize },
}

impl fmt::Display for PairConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairConfigError::NotAValidPair { u, v, common } => write!(
                f,
                "vertices {u} and {v} share {} out-neighbours {common:?}, need exactly 1",
                common.len()
            ),
            PairConfigError::NotTwoOutRegular { vertex, out_degree } => {
                write!(f, "vertex {vertex} has out-degree {out_degree}, need 2")
            }
            PairConfigError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
        }
    }
}

impl core::error::Error for PairConfigError {}

/// Builds the labelled configuration for the pair `(u, v)`.
///
/// `g` must be 2-out-regular and `(u, v)` must share exactly one common
/// out-neighbour. Tree labels are always fully determined under those
/// preconditions; the side labels may be ambiguous and are then left unset
/// with the reason recorded.
pub fn build_pair_config(g: &Digraph, u: Vertex, v: Vertex) -> Result<PairConfig, PairConfigError> {
    let n = g.order();
    for x in [u, v] {
        if x >= n {
            return Err(PairConfigError::VertexOutOfRange { vertex: x, order: n });
        }
    }
    for x in 0..n {
        if g.out(x).len() != 2 {
            return Err(PairConfigError::NotTwoOutRegular { vertex: x, out_degree: g.out(x).len() });
        }
    }

    let common: Vec<Vertex> =
        g.out(u).iter().copied().filter(|w| g.out(v).contains(w)).collect();
    if common.len() != 1 || u == v {
        return Err(PairConfigError::NotAValidPair { u, v, common });
    }
    let u2 = common[0];
    let u1 = other_of(g.out(u), u2);
    let v1 = other_of(g.out(v), u2);

    let mut labels = BTreeMap::new();
    // u-tree: u1, u2 seed labels 1 and 2; children of u_i are u_{2i+1}, u_{2i+2}.
    let mut u_tree: BTreeMap<u8, Vertex> = BTreeMap::new();
    u_tree.insert(1, u1);
    u_tree.insert(2, u2);
    for i in 1..=6u8 {
        let x = u_tree[&i];
        let (a, b) = (g.out(x)[0], g.out(x)[1]);
        u_tree.insert(2 * i + 1, a);
        u_tree.insert(2 * i + 2, b);
    }
    for i in 3..=14u8 {
        labels.insert(PairLabel::U(i), u_tree[&i]);
    }
    // v-tree: v2 = u2, so only the v1 branch introduces new labels; v5/v6
    // coincide with u5/u6.
    let mut v_tree: BTreeMap<u8, Vertex> = BTreeMap::new();
    v_tree.insert(1, v1);
    v_tree.insert(2, u2);
    for i in 1..=4u8 {
        let x = v_tree[&i];
        let (a, b) = (g.out(x)[0], g.out(x)[1]);
        v_tree.insert(2 * i + 1, a);
        v_tree.insert(2 * i + 2, b);
    }
    for i in 3..=10u8 {
        labels.insert(PairLabel::V(i), v_tree[&i]);
    }

    let mut ambiguities = Vec::new();
    let (u_minus, u_plus) = side_labels(g, u, u1, |d| {
        ambiguities.push(LabelAmbiguity::UMinus { in_degree: d })
    });
    let (v_minus, v_plus) = side_labels(g, v, v1, |d| {
        ambiguities.push(LabelAmbiguity::VMinus { in_degree: d })
    });

    Ok(PairConfig {
        u,
        v,
        u1,
        u2,
        v1,
        u_minus,
        u_plus,
        v_minus,
        v_plus,
        labels,
        ambiguities,
    })
}

/// Resolves the second in-neighbour of `private` (other than `base`) and its
/// second out-neighbour. Defined only when `private` has in-degree exactly 2.
fn side_labels(
    g: &Digraph,
    base: Vertex,
    private: Vertex,
    mut ambiguous: impl FnMut(usize),
) -> (Option<Vertex>, Option<Vertex>) {
    let ins = g.in_neighbours(private);
    if ins.len() != 2 || !ins.contains(&base) {
        ambiguous(ins.len());
        return (None, None);
    }
    let minus = if ins[0] == base { ins[1] } else { ins[0] };
    let plus = other_of(g.out(minus), private);
    (Some(minus), Some(plus))
}

fn other_of(pair: &[Vertex], not: Vertex) -> Vertex {
    if pair[0] == not {
        pair[1]
    } else {
        pair[0]
    }
}
