//! Analysis and exhaustive generation of k-geodetic digraphs near the
//! directed Moore bound.
//!
//! A digraph is k-geodetic when between any ordered pair of vertices there is
//! at most one directed path of length at most k (and, in this crate's
//! convention, no closed walk of length 1..=k). A k-geodetic digraph with
//! minimum out-degree d has order at least M(d,k) = 1 + d + ... + d^k; the
//! amount above the bound is its excess. This crate computes the associated
//! structure (tiers, balls, outlier sets, repeat multisets), mechanically
//! audits structural facts about small-excess digraphs, and exhaustively
//! generates all digraphs with a given degree, geodecity and excess up to
//! isomorphism, with exhaustion certificates for nonexistence.
//!
//! The crate is `no_std` (with `alloc`) and completely pure: budgets beyond
//! node counting, wall clocks, parallel drivers and file formats live in the
//! companion CLI crate.

#![cfg_attr(not(any(test, feature = "testkit")), no_std)]
#![cfg_attr(all(feature = "testkit", not(test)), no_std)]

extern crate alloc;

pub mod audit;
pub mod cages;
pub mod canon;
pub mod digraph;
pub mod moore;
pub mod pair;
pub mod search;
#[cfg(feature = "testkit")]
pub mod testkit;

pub use canon::{canonical_form, CanonicalForm};
pub use digraph::{DegreeProfile, Digraph, DigraphError, GeodecityWitness, Vertex};
pub use moore::{
    classify, moore_bound, out_neighbour_multiset, outlier_multiset, outlier_set, repeat_multiset,
    Deviation, MooreBoundOverflow, MooreReport, RepeatMultiset, VertexMultiset,
};
pub use pair::{build_pair_config, LabelAmbiguity, PairConfig, PairConfigError, PairLabel};
pub use search::{
    certify_nonexistence, enumerate_prefixes, run_prefix, search, PartialDigraph,
    PrefixEnumeration, SearchControl, SearchError, SearchOutcome, SearchParams, SubtreeOutcome,
    TaskPrefix,
};
