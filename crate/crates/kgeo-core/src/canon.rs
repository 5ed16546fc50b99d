//! Relabelling-invariant canonical forms.
//!
//! The canonical form of a digraph is the lexicographically minimal encoding
//! of its concatenated out-lists over all labellings consistent with a
//! breadth-first discipline: some vertex receives label 0, labelled vertices
//! are expanded in label order, and at each expansion the unlabelled
//! out-neighbours receive the next fresh labels in every possible order. When
//! the expansion queue empties before all vertices are labelled (the digraph
//! is not fully reachable from the root), every unlabelled vertex is tried as
//! the next root, so arbitrary digraphs canonicalize uniformly.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{Digraph, Vertex};

const UNSET: usize = usize::MAX;

/// A canonical encoding: equal encodings exactly when digraphs are
/// isomorphic. Encodings order lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Rebuilds the canonical representative digraph from the encoding.
    pub fn to_digraph(&self) -> Digraph {
        let words = decode_words(&self.bytes);
        let n = words[0] as usize;
        let mut out = Vec::with_capacity(n);
        let mut at = 1;
        for _ in 0..n {
            let deg = words[at] as usize;
            at += 1;
            let list: Vec<Vertex> = words[at..at + deg].iter().map(|&w| w as usize).collect();
            at += deg;
            out.push(list);
        }
        Digraph::from_out_lists(out).expect("canonical encodings decode to valid digraphs")
    }

    /// Lowercase hex rendering of the encoding.
    pub fn to_hex(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::with_capacity(self.bytes.len() * 2);
        for b in &self.bytes {
            let _ = write!(s, "{b:02x}");
        }
        s
    }

    pub fn from_hex(hex: &str) -> Option<CanonicalForm> {
        if !hex.len().is_multiple_of(2) {
            return None;
        }
        let mut bytes = Vec::with_capacity(hex.len() / 2);
        let raw = hex.as_bytes();
        for pair in raw.chunks(2) {
            let hi = (pair[0] as char).to_digit(16)?;
            let lo = (pair[1] as char).to_digit(16)?;
            bytes.push((hi * 16 + lo) as u8);
        }
        Some(CanonicalForm { bytes })
    }
}

/// Computes the canonical form of `g`.
pub fn canonical_form(g: &Digraph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm { bytes: encode_words(&[0]) };
    }
    let mut search = Labelling {
        g,
        n,
        label_of: vec![UNSET; n],
        orig_of: Vec::with_capacity(n),
        code: Vec::with_capacity(1 + n + g.arc_count()),
        best: None,
    };
    search.code.push(n as u32);
    // The byte after the order is the root's out-degree, so only roots of
    // minimal out-degree can begin a lexicographically minimal labelling.
    let min_deg = g.out_degrees().min().unwrap();
    for r in 0..n {
        if g.out(r).len() == min_deg {
            search.with_root(r, 0);
        }
    }
    CanonicalForm { bytes: encode_words(&search.best.expect("at least one labelling exists")) }
}

struct Labelling<'a> {
    g: &'a Digraph,
    n: usize,
    label_of: Vec<usize>,
    orig_of: Vec<Vertex>,
    code: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Labelling<'_> {
    fn with_root(&mut self, root: Vertex, next_to_expand: usize) {
        self.label_of[root] = self.orig_of.len();
        self.orig_of.push(root);
        self.expand(next_to_expand);
        self.orig_of.pop();
        self.label_of[root] = UNSET;
    }

    fn expand(&mut self, label: usize) {
        if label == self.n {
            if self.best.as_ref().is_none_or(|b| self.code < *b) {
                self.best = Some(self.code.clone());
            }
            return;
        }
        if label == self.orig_of.len() {
            // Queue exhausted: restart from every unlabelled vertex of
            // minimal out-degree (the degree is the next encoded word, so
            // larger degrees cannot be minimal).
            let min_deg = (0..self.n)
                .filter(|&v| self.label_of[v] == UNSET)
                .map(|v| self.g.out(v).len())
                .min()
                .unwrap();
            for v in 0..self.n {
                if self.label_of[v] == UNSET && self.g.out(v).len() == min_deg {
                    self.with_root(v, label);
                }
            }
            return;
        }

        let x = self.orig_of[label];
        let nbrs = self.g.out(x);
        let fresh: Vec<Vertex> =
            nbrs.iter().copied().filter(|&w| self.label_of[w] == UNSET).collect();

        // The encoded out-list is independent of the order fresh labels are
        // handed out: append it once, then branch over assignments.
        let mark = self.code.len();
        let base = self.orig_of.len();
        let mut labels: Vec<u32> = nbrs
            .iter()
            .filter(|&&w| self.label_of[w] != UNSET)
            .map(|&w| self.label_of[w] as u32)
            .collect();
        labels.extend((base..base + fresh.len()).map(|l| l as u32));
        labels.sort_unstable();
        self.code.push(nbrs.len() as u32);
        self.code.extend_from_slice(&labels);

        if self.prefix_viable() {
            self.assign_fresh(&fresh, 0, label);
        }
        self.code.truncate(mark);
    }

    /// Tries every order of handing fresh labels to the vertices in `fresh`.
    fn assign_fresh(&mut self, fresh: &[Vertex], chosen: usize, label: usize) {
        if chosen == fresh.len() {
            self.expand(label + 1);
            return;
        }
        for &v in fresh {
            if self.label_of[v] != UNSET {
                continue;
            }
            self.label_of[v] = self.orig_of.len();
            self.orig_of.push(v);
            self.assign_fresh(fresh, chosen + 1, label);
            self.orig_of.pop();
            self.label_of[v] = UNSET;
        }
    }

    /// False when the current partial encoding already exceeds the best
    /// complete one (all encodings of a digraph have equal length, so the
    /// prefix comparison is decisive at the first difference).
    fn prefix_viable(&self) -> bool {
        match &self.best {
            None => true,
            Some(best) => self.code[..] <= best[..self.code.len()],
        }
    }
}

fn encode_words(words: &[u32]) -> Vec<u8> {
    let mut bytes = Vec::with_capacity(words.len() * 4);
    for w in words {
        bytes.extend_from_slice(&w.to_be_bytes());
    }
    bytes
}

fn decode_words(bytes: &[u8]) -> Vec<u32> {
    bytes
        .chunks(4)
        .map(|c| u32::from_be_bytes([c[0], c[1], c[2], c[3]]))
        .collect()
}
