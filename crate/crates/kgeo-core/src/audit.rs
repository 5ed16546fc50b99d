//! Mechanical audits of structural facts about geodetic digraphs near the
//! Moore bound. Each audit first evaluates its hypotheses against the input;
//! when they hold it checks the conclusion and reports `Holds` or `Fails`
//! with an independently re-checkable witness, and when they do not hold it
//! reports `Vacuous`. The pair-position audits additionally evaluate their
//! conclusions on gated-out inputs and attach the result as informational
//! data, clearly separated from the verdict.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::{Digraph, Vertex};
use crate::moore::{
    moore_bound, out_neighbour_multiset, outlier_multiset, outlier_set, VertexMultiset,
};
use crate::pair::PairConfig;

pub const CHECK_NEIGHBOURHOOD: &str = "neighbourhood-lemma";
pub const CHECK_IDENTICAL_NEIGHBOURHOODS: &str = "identical-out-neighbourhoods";
pub const CHECK_OUTLIER_REGULARITY: &str = "outlier-regularity";
pub const CHECK_PAIR_VERTEX_POSITION: &str = "pair-vertex-position";
pub const CHECK_PAIR_OUT_NEIGHBOUR_POSITION: &str = "pair-out-neighbour-position";
pub const CHECK_PAIR_MUTUAL_OUTLIERS: &str = "pair-mutual-outliers";
pub const CHECK_PAIR_OUTLIER_INTERSECTION: &str = "pair-outlier-intersection";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuditStatus {
    Holds,
    Fails,
    Vacuous,
}

impl fmt::Display for AuditStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditStatus::Holds => write!(f, "holds"),
            AuditStatus::Fails => write!(f, "fails"),
            AuditStatus::Vacuous => write!(f, "vacuous"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuditSubject {
    Graph,
    Vertex(Vertex),
    Pair(Vertex, Vertex),
}

impl fmt::Display for AuditSubject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditSubject::Graph => write!(f, "graph"),
            AuditSubject::Vertex(v) => write!(f, "vertex {v}"),
            AuditSubject::Pair(a, b) => write!(f, "pair ({a}, {b})"),
        }
    }
}

/// Structured counterexample data. Every variant stores the concrete sets it
/// compared so that [`AuditWitness::revalidate`] can recompute them from
/// scratch and confirm the violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditWitness {
    /// The two multiset lifts around `base` disagree (or have the wrong size).
    MultisetMismatch {
        base: Vertex,
        outliers_of_out: VertexMultiset,
        out_of_outliers: VertexMultiset,
        expected_size: u64,
    },
    /// Outlier sets of an identical-out-neighbourhood pair do not decompose
    /// as `{other} ∪ X` with a shared `X` of the expected size.
    IdenticalPairMismatch {
        z: Vertex,
        z_prime: Vertex,
        outliers_z: Vec<Vertex>,
        outliers_z_prime: Vec<Vertex>,
        expected_shared: usize,
    },
    /// `vertex` lies in `containers.len()` outlier sets instead of `expected`.
    OutlierCount {
        vertex: Vertex,
        expected: usize,
        containers: Vec<Vertex>,
    },
    /// `vertex` lies outside the allowed region (a `(k-1)`-tier and/or an
    /// outlier set). `premise`, when set, is a membership `(member, base)`
    /// meaning `member ∈ O(base)` that must hold for the claim to apply.
    PositionViolation {
        vertex: Vertex,
        tier_base: Option<Vertex>,
        tier: Vec<Vertex>,
        outlier_base: Vertex,
        outliers: Vec<Vertex>,
        premise: Option<(Vertex, Vertex)>,
    },
    /// An outlier-set / out-neighbourhood intersection has the wrong size.
    IntersectionSize {
        outlier_base: Vertex,
        neighbour_base: Vertex,
        intersection: Vec<Vertex>,
        expected: usize,
    },
}

impl AuditWitness {
    /// Recomputes every set stored in the witness directly from the digraph
    /// and confirms both that the recorded data is accurate and that it
    /// demonstrates a genuine violation.
    pub fn revalidate(&self, g: &Digraph, k: usize) -> bool {
        match self {
            AuditWitness::MultisetMismatch {
                base,
                outliers_of_out,
                out_of_outliers,
                expected_size,
            } => {
                let out_ms: VertexMultiset = g.out(*base).iter().copied().collect();
                let lhs = outlier_multiset(g, &out_ms, k);
                let o_ms: VertexMultiset = outlier_set(g, *base, k).into_iter().collect();
                let rhs = out_neighbour_multiset(g, &o_ms);
                lhs == *outliers_of_out
                    && rhs == *out_of_outliers
                    && (lhs != rhs || lhs.len() != *expected_size || rhs.len() != *expected_size)
            }
            AuditWitness::IdenticalPairMismatch {
                z,
                z_prime,
                outliers_z,
                outliers_z_prime,
                expected_shared,
            } => {
                let o_z = outlier_set(g, *z, k);
                let o_zp = outlier_set(g, *z_prime, k);
                o_z == *outliers_z
                    && o_zp == *outliers_z_prime
                    && !identical_pair_conclusion(&o_z, &o_zp, *z, *z_prime, *expected_shared)
            }
            AuditWitness::OutlierCount { vertex, expected, containers } => {
                let recomputed: Vec<Vertex> = (0..g.order())
                    .filter(|&u| outlier_set(g, u, k).contains(vertex))
                    .collect();
                recomputed == *containers && recomputed.len() != *expected
            }
            AuditWitness::PositionViolation {
                vertex,
                tier_base,
                tier,
                outlier_base,
                outliers,
                premise,
            } => {
                if let Some((member, base)) = premise {
                    if !outlier_set(g, *base, k).contains(member) {
                        return false;
                    }
                }
                let tier_ok = match tier_base {
                    Some(b) => {
                        let support: Vec<Vertex> =
                            g.tier(*b, k - 1).keys().copied().collect();
                        support == *tier
                    }
                    None => tier.is_empty(),
                };
                let o = outlier_set(g, *outlier_base, k);
                tier_ok && o == *outliers && !tier.contains(vertex) && !o.contains(vertex)
            }
            AuditWitness::IntersectionSize {
                outlier_base,
                neighbour_base,
                intersection,
                expected,
            } => {
                let o: BTreeSet<Vertex> = outlier_set(g, *outlier_base, k).into_iter().collect();
                let recomputed: Vec<Vertex> = g
                    .out(*neighbour_base)
                    .iter()
                    .copied()
                    .filter(|w| o.contains(w))
                    .collect();
                recomputed == *intersection && recomputed.len() != *expected
            }
        }
    }
}

impl fmt::Display for AuditWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditWitness::MultisetMismatch {
                base,
                outliers_of_out,
                out_of_outliers,
                expected_size,
            } => write!(
                f,
                "at vertex {base}: O(N+) = {:?}, N+(O) = {:?}, expected size {expected_size}",
                outliers_of_out.expanded(),
                out_of_outliers.expanded()
            ),
            AuditWitness::IdenticalPairMismatch {
                z,
                z_prime,
                outliers_z,
                outliers_z_prime,
                expected_shared,
            } => write!(
                f,
                "pair ({z}, {z_prime}): O({z}) = {outliers_z:?}, O({z_prime}) = \
                 {outliers_z_prime:?} do not share {expected_shared} vertices around each other"
            ),
            AuditWitness::OutlierCount { vertex, expected, containers } => write!(
                f,
                "vertex {vertex} is an outlier of {} vertices {containers:?}, expected {expected}",
                containers.len()
            ),
            AuditWitness::PositionViolation {
                vertex,
                tier_base,
                tier,
                outlier_base,
                outliers,
                premise,
            } => {
                if let Some((member, base)) = premise {
                    write!(f, "given {member} in O({base}): ")?;
                }
                match tier_base {
                    Some(b) => write!(
                        f,
                        "vertex {vertex} lies outside tier({b}, k-1) = {tier:?} and \
                         O({outlier_base}) = {outliers:?}"
                    ),
                    None => {
                        write!(f, "vertex {vertex} lies outside O({outlier_base}) = {outliers:?}")
                    }
                }
            }
            AuditWitness::IntersectionSize {
                outlier_base,
                neighbour_base,
                intersection,
                expected,
            } => write!(
                f,
                "O({outlier_base}) meets N+({neighbour_base}) in {intersection:?}, \
                 expected exactly {expected} vertices"
            ),
        }
    }
}

/// Conclusion evaluated on a gated-out input, reported alongside a `Vacuous`
/// verdict for information only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InformationalOutcome {
    pub conclusion_holds: bool,
    pub witness: Option<AuditWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditVerdict {
    pub check: &'static str,
    pub subject: AuditSubject,
    pub status: AuditStatus,
    pub witness: Option<AuditWitness>,
    pub informational: Option<InformationalOutcome>,
}

impl AuditVerdict {
    fn vacuous(check: &'static str, subject: AuditSubject) -> Self {
        AuditVerdict { check, subject, status: AuditStatus::Vacuous, witness: None, informational: None }
    }

    fn decided(check: &'static str, subject: AuditSubject, witness: Option<AuditWitness>) -> Self {
        AuditVerdict {
            check,
            subject,
            status: if witness.is_some() { AuditStatus::Fails } else { AuditStatus::Holds },
            witness,
            informational: None,
        }
    }
}

/// Hypothesis gate shared by the diregular audits: diregular with degree `d`,
/// `k`-geodetic, and order on the excess side of the Moore bound. Returns the
/// excess when satisfied.
fn diregular_excess(g: &Digraph, d: usize, k: usize) -> Option<u64> {
    if !g.is_diregular(d) || !g.is_k_geodetic(k) {
        return None;
    }
    let bound = moore_bound(d, k).ok()?;
    (g.order() as u64).checked_sub(bound)
}

/// Checks, for every vertex `u`, that lifting the outlier sets over the
/// out-neighbourhood gives the same multiset as lifting out-neighbourhoods
/// over the outlier set. Both multisets must have size `d * excess` before
/// equality is tested. Hypotheses: diregular degree `d`, `k`-geodetic,
/// excess at least 1.
pub fn audit_neighbourhood_lemma(g: &Digraph, d: usize, k: usize) -> Vec<AuditVerdict> {
    let excess = match diregular_excess(g, d, k) {
        Some(e) if e >= 1 => e,
        _ => return vec![AuditVerdict::vacuous(CHECK_NEIGHBOURHOOD, AuditSubject::Graph)],
    };
    let expected_size = d as u64 * excess;
    (0..g.order())
        .map(|u| {
            let out_ms: VertexMultiset = g.out(u).iter().copied().collect();
            let lhs = outlier_multiset(g, &out_ms, k);
            let o_ms: VertexMultiset = outlier_set(g, u, k).into_iter().collect();
            let rhs = out_neighbour_multiset(g, &o_ms);
            let witness = (lhs != rhs || lhs.len() != expected_size || rhs.len() != expected_size)
                .then_some(AuditWitness::MultisetMismatch {
                    base: u,
                    outliers_of_out: lhs,
                    out_of_outliers: rhs,
                    expected_size,
                });
            AuditVerdict::decided(CHECK_NEIGHBOURHOOD, AuditSubject::Vertex(u), witness)
        })
        .collect()
}

fn identical_pair_conclusion(
    o_z: &[Vertex],
    o_zp: &[Vertex],
    z: Vertex,
    z_prime: Vertex,
    expected_shared: usize,
) -> bool {
    let x_z: BTreeSet<Vertex> = o_z.iter().copied().filter(|&w| w != z_prime).collect();
    let x_zp: BTreeSet<Vertex> = o_zp.iter().copied().filter(|&w| w != z).collect();
    o_z.contains(&z_prime)
        && o_zp.contains(&z)
        && x_z == x_zp
        && x_z.len() == expected_shared
}

/// For every unordered pair with identical out-neighbourhoods, checks that the
/// outlier sets decompose as `O(z) = {z'} ∪ X` and `O(z') = {z} ∪ X` for a
/// common set `X` of size `excess - 1`. The degree parameter is the minimum
/// out-degree. Vacuous when the digraph is not geodetic with excess at least
/// 1, or when no such pair exists.
pub fn audit_identical_neighbourhoods(g: &Digraph, k: usize) -> Vec<AuditVerdict> {
    let check = CHECK_IDENTICAL_NEIGHBOURHOODS;
    let d = g.out_degrees().min().unwrap_or(0);
    let gate = g.is_k_geodetic(k)
        && moore_bound(d, k)
            .ok()
            .and_then(|b| (g.order() as u64).checked_sub(b))
            .map(|e| e >= 1)
            .unwrap_or(false);
    if !gate {
        return vec![AuditVerdict::vacuous(check, AuditSubject::Graph)];
    }
    let excess = g.order() as u64 - moore_bound(d, k).unwrap();
    let expected_shared = (excess - 1) as usize;

    let mut verdicts = Vec::new();
    for z in 0..g.order() {
        for zp in (z + 1)..g.order() {
            if g.out(z) != g.out(zp) || g.out(z).is_empty() {
                continue;
            }
            let o_z = outlier_set(g, z, k);
            let o_zp = outlier_set(g, zp, k);
            let ok = identical_pair_conclusion(&o_z, &o_zp, z, zp, expected_shared);
            let witness = (!ok).then_some(AuditWitness::IdenticalPairMismatch {
                z,
                z_prime: zp,
                outliers_z: o_z,
                outliers_z_prime: o_zp,
                expected_shared,
            });
            verdicts.push(AuditVerdict::decided(check, AuditSubject::Pair(z, zp), witness));
        }
    }
    if verdicts.is_empty() {
        verdicts.push(AuditVerdict::vacuous(check, AuditSubject::Graph));
    }
    verdicts
}

/// Checks that every vertex lies in exactly `excess` outlier sets.
/// Hypotheses: diregular degree `d` and `k`-geodetic.
pub fn audit_outlier_regularity(g: &Digraph, d: usize, k: usize) -> AuditVerdict {
    let check = CHECK_OUTLIER_REGULARITY;
    let excess = match diregular_excess(g, d, k) {
        Some(e) => e as usize,
        None => return AuditVerdict::vacuous(check, AuditSubject::Graph),
    };
    let outliers: Vec<Vec<Vertex>> = (0..g.order()).map(|u| outlier_set(g, u, k)).collect();
    for v in 0..g.order() {
        let containers: Vec<Vertex> =
            (0..g.order()).filter(|&u| outliers[u].contains(&v)).collect();
        if containers.len() != excess {
            return AuditVerdict::decided(
                check,
                AuditSubject::Graph,
                Some(AuditWitness::OutlierCount { vertex: v, expected: excess, containers }),
            );
        }
    }
    AuditVerdict::decided(check, AuditSubject::Graph, None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidConfig {
    pub reason: &'static str,
}

impl fmt::Display for InvalidConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid pair configuration: {}", self.reason)
    }
}

impl core::error::Error for InvalidConfig {}

/// Audits the positional facts around a unique-common-out-neighbour pair.
///
/// Hypotheses per statement: the digraph must be diregular with degree 2,
/// `k`-geodetic with excess exactly 3, and `k >= 3` (the intersection
/// statement needs `k >= 4`). Gated-out statements still evaluate their
/// conclusions and report them as informational data on a `Vacuous` verdict.
pub fn audit_pair_positions(
    g: &Digraph,
    cfg: &PairConfig,
    k: usize,
) -> Result<Vec<AuditVerdict>, InvalidConfig> {
    audit_pair_positions_with(g, cfg, k, false)
}

/// As [`audit_pair_positions`], but `force_hypotheses` treats every gate as
/// satisfied, turning the informational evaluations into real verdicts. Meant
/// for exercising the audit logic on synthetic fixtures.
pub fn audit_pair_positions_with(
    g: &Digraph,
    cfg: &PairConfig,
    k: usize,
    force_hypotheses: bool,
) -> Result<Vec<AuditVerdict>, InvalidConfig> {
    validate_config(g, cfg)?;
    if k < 1 {
        return Err(InvalidConfig { reason: "k must be at least 1" });
    }

    let base_gate = force_hypotheses
        || matches!(diregular_excess(g, 2, k), Some(3) if k >= 3);
    let intersection_gate = force_hypotheses
        || matches!(diregular_excess(g, 2, k), Some(3) if k >= 4);

    let subject = AuditSubject::Pair(cfg.u, cfg.v);
    let statements: [(&'static str, bool, Option<AuditWitness>); 4] = [
        (CHECK_PAIR_VERTEX_POSITION, base_gate, eval_vertex_position(g, cfg, k)),
        (CHECK_PAIR_OUT_NEIGHBOUR_POSITION, base_gate, eval_out_neighbour_position(g, cfg, k)),
        (CHECK_PAIR_MUTUAL_OUTLIERS, base_gate, eval_mutual_outliers(g, cfg, k)),
        (CHECK_PAIR_OUTLIER_INTERSECTION, intersection_gate, eval_outlier_intersection(g, cfg, k)),
    ];

    Ok(statements
        .into_iter()
        .map(|(check, gated_in, witness)| {
            if gated_in {
                AuditVerdict::decided(check, subject, witness)
            } else {
                AuditVerdict {
                    check,
                    subject,
                    status: AuditStatus::Vacuous,
                    witness: None,
                    informational: Some(InformationalOutcome {
                        conclusion_holds: witness.is_none(),
                        witness,
                    }),
                }
            }
        })
        .collect())
}

fn validate_config(g: &Digraph, cfg: &PairConfig) -> Result<(), InvalidConfig> {
    let n = g.order();
    if cfg.u >= n || cfg.v >= n || cfg.u1 >= n || cfg.u2 >= n || cfg.v1 >= n {
        return Err(InvalidConfig { reason: "configuration vertex out of range" });
    }
    if !(g.has_arc(cfg.u, cfg.u1) && g.has_arc(cfg.u, cfg.u2)) {
        return Err(InvalidConfig { reason: "u1/u2 are not the out-neighbours of u" });
    }
    if !(g.has_arc(cfg.v, cfg.v1) && g.has_arc(cfg.v, cfg.u2)) {
        return Err(InvalidConfig { reason: "v1/u2 are not the out-neighbours of v" });
    }
    let common: Vec<Vertex> =
        g.out(cfg.u).iter().copied().filter(|w| g.out(cfg.v).contains(w)).collect();
    if common != [cfg.u2] {
        return Err(InvalidConfig { reason: "u and v do not share exactly the vertex u2" });
    }
    Ok(())
}

fn tier_support(g: &Digraph, base: Vertex, l: usize) -> Vec<Vertex> {
    g.tier(base, l).keys().copied().collect()
}

/// Membership of `vertex` in `tier(tier_base, k-1) ∪ O(outlier_base)`; on
/// violation returns the witness.
fn position_check(
    g: &Digraph,
    k: usize,
    vertex: Vertex,
    tier_base: Option<Vertex>,
    outlier_base: Vertex,
    premise: Option<(Vertex, Vertex)>,
) -> Option<AuditWitness> {
    if let Some((member, base)) = premise {
        if !outlier_set(g, base, k).contains(&member) {
            return None; // premise unsatisfied: conditional claim holds
        }
    }
    let tier = tier_base.map(|b| tier_support(g, b, k - 1)).unwrap_or_default();
    let outliers = outlier_set(g, outlier_base, k);
    if tier.contains(&vertex) || outliers.contains(&vertex) {
        return None;
    }
    Some(AuditWitness::PositionViolation {
        vertex,
        tier_base,
        tier,
        outlier_base,
        outliers,
        premise,
    })
}

fn eval_vertex_position(g: &Digraph, cfg: &PairConfig, k: usize) -> Option<AuditWitness> {
    position_check(g, k, cfg.v, Some(cfg.u1), cfg.u, None)
        .or_else(|| position_check(g, k, cfg.u, Some(cfg.v1), cfg.v, None))
        .or_else(|| position_check(g, k, cfg.u2, None, cfg.u1, Some((cfg.v, cfg.u))))
        .or_else(|| position_check(g, k, cfg.u2, None, cfg.v1, Some((cfg.u, cfg.v))))
}

fn eval_out_neighbour_position(g: &Digraph, cfg: &PairConfig, k: usize) -> Option<AuditWitness> {
    position_check(g, k, cfg.v1, Some(cfg.u1), cfg.u, None)
        .or_else(|| position_check(g, k, cfg.u1, Some(cfg.v1), cfg.v, None))
}

fn eval_mutual_outliers(g: &Digraph, cfg: &PairConfig, k: usize) -> Option<AuditWitness> {
    position_check(g, k, cfg.v1, None, cfg.u, None)
        .or_else(|| position_check(g, k, cfg.u1, None, cfg.v, None))
}

fn eval_outlier_intersection(g: &Digraph, cfg: &PairConfig, k: usize) -> Option<AuditWitness> {
    let one_side = |outlier_base: Vertex, neighbour_base: Vertex| {
        let o: BTreeSet<Vertex> = outlier_set(g, outlier_base, k).into_iter().collect();
        let intersection: Vec<Vertex> =
            g.out(neighbour_base).iter().copied().filter(|w| o.contains(w)).collect();
        (intersection.len() != 1).then_some(AuditWitness::IntersectionSize {
            outlier_base,
            neighbour_base,
            intersection,
            expected: 1,
        })
    };
    one_side(cfg.u, cfg.v1).or_else(|| one_side(cfg.v, cfg.u1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cages::{left_cage, right_cage};
    use crate::pair::build_pair_config;

    #[test]
    fn neighbourhood_lemma_holds_on_both_cages() {
        for g in [left_cage(), right_cage()] {
            let verdicts = audit_neighbourhood_lemma(&g, 2, 2);
            assert_eq!(verdicts.len(), 9);
            assert!(verdicts.iter().all(|v| v.status == AuditStatus::Holds));
        }
    }

    #[test]
    fn neighbourhood_lemma_vacuous_on_non_geodetic() {
        let verdicts = audit_neighbourhood_lemma(&Digraph::complete(3), 2, 2);
        assert_eq!(verdicts.len(), 1);
        assert_eq!(verdicts[0].status, AuditStatus::Vacuous);
    }

    #[test]
    fn neighbourhood_multiset_sizes_are_checked() {
        // Left cage, u = 0: both lifts have size d * excess = 4.
        let g = left_cage();
        let out_ms: VertexMultiset = g.out(0).iter().copied().collect();
        let lhs = outlier_multiset(&g, &out_ms, 2);
        assert_eq!(lhs.len(), 4);
        assert_eq!(lhs.expanded(), alloc::vec![0, 3, 4, 8]);
        let o_ms: VertexMultiset = outlier_set(&g, 0, 2).into_iter().collect();
        let rhs = out_neighbour_multiset(&g, &o_ms);
        assert_eq!(rhs.len(), 4);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn identical_neighbourhoods_on_left_cage() {
        let g = left_cage();
        let verdicts = audit_identical_neighbourhoods(&g, 2);
        // Three identical-out-neighbourhood pairs: (1,8), (2,4), (5,7).
        assert_eq!(verdicts.len(), 3);
        assert!(verdicts.iter().all(|v| v.status == AuditStatus::Holds));
        assert!(verdicts.iter().any(|v| v.subject == AuditSubject::Pair(2, 4)));
    }

    #[test]
    fn identical_neighbourhoods_vacuous_cases() {
        let verdicts = audit_identical_neighbourhoods(&right_cage(), 2);
        assert_eq!(verdicts.len(), 1);
        assert_eq!(verdicts[0].status, AuditStatus::Vacuous);

        let c5 = Digraph::directed_cycle(5);
        let verdicts = audit_identical_neighbourhoods(&c5, 2);
        assert_eq!(verdicts.len(), 1);
        assert_eq!(verdicts[0].status, AuditStatus::Vacuous);
    }

    #[test]
    fn outlier_regularity_on_cages() {
        for g in [left_cage(), right_cage()] {
            let verdict = audit_outlier_regularity(&g, 2, 2);
            assert_eq!(verdict.status, AuditStatus::Holds);
        }
        let path = Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(audit_outlier_regularity(&path, 1, 2).status, AuditStatus::Vacuous);
    }

    #[test]
    fn pair_positions_vacuous_with_informational_on_left_cage() {
        let g = left_cage();
        let cfg = build_pair_config(&g, 0, 3).unwrap();
        let verdicts = audit_pair_positions(&g, &cfg, 2).unwrap();
        assert_eq!(verdicts.len(), 4);
        for v in &verdicts {
            assert_eq!(v.status, AuditStatus::Vacuous, "{}", v.check);
            let info = v.informational.as_ref().expect("informational evaluation");
            assert!(info.conclusion_holds, "{} should hold informally here", v.check);
        }
    }

    #[test]
    fn forced_fixture_exercises_the_fails_path() {
        // 2-out-regular fixture: (0, 3) share exactly vertex 2; with k = 2
        // the private neighbour v1 = 4 of v is reachable from u = 0 within 2
        // steps yet is not in tier(u1 = 1, 1), so the positional claims fail
        // under forced hypotheses.
        let g = Digraph::from_arcs(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 2),
                (3, 4),
                (4, 0),
                (4, 3),
                (5, 0),
                (5, 3),
            ],
        )
        .unwrap();
        let cfg = build_pair_config(&g, 0, 3).unwrap();
        let verdicts = audit_pair_positions_with(&g, &cfg, 2, true).unwrap();
        let mutual = verdicts
            .iter()
            .find(|v| v.check == CHECK_PAIR_MUTUAL_OUTLIERS)
            .unwrap();
        assert_eq!(mutual.status, AuditStatus::Fails);
        let witness = mutual.witness.as_ref().unwrap();
        assert!(witness.revalidate(&g, 2));
    }

    #[test]
    fn pair_audit_rejects_inconsistent_config() {
        let g = left_cage();
        let mut cfg = build_pair_config(&g, 0, 3).unwrap();
        cfg.u2 = 5;
        assert!(audit_pair_positions(&g, &cfg, 2).is_err());
    }

    #[test]
    fn failing_witnesses_revalidate() {
        // Force a neighbourhood-lemma failure by auditing a non-regular
        // digraph with the gate bypassed via direct evaluation: use a digraph
        // that is diregular and geodetic but audit with mismatched k so the
        // verdict is vacuous, then check a hand-built witness rejects.
        let g = left_cage();
        let bogus = AuditWitness::OutlierCount { vertex: 0, expected: 3, containers: alloc::vec![1, 8] };
        // Containers recompute equal, but expected is wrong in the right way:
        // witness claims a violation (2 != 3), and recomputation confirms the
        // container list, so it revalidates.
        assert!(bogus.revalidate(&g, 2));
        let wrong_data = AuditWitness::OutlierCount { vertex: 0, expected: 3, containers: alloc::vec![1, 2] };
        assert!(!wrong_data.revalidate(&g, 2));
    }
}
