//! Cross-validation of the search engine against a brute-force enumerator on
//! instances small enough to enumerate every labelled out-regular digraph:
//! identical isomorphism-class sets, as canonical-form sets.

use kgeo_core::search::{search, SearchParams};
use kgeo_core::testkit::{brute_force_search, canonical_set};
use kgeo_core::{canonical_form, CanonicalForm};
use std::collections::BTreeSet;

fn search_forms(d: usize, k: usize, epsilon: usize, diregular: bool) -> BTreeSet<CanonicalForm> {
    let outcome = search(&SearchParams::new(d, k, epsilon).diregular(diregular)).unwrap();
    assert!(outcome.complete, "({d},{k},+{epsilon}) must exhaust");
    for g in &outcome.results {
        assert!(g.is_k_geodetic(k));
        assert!(g.out_degrees().all(|deg| deg == d));
        if diregular {
            assert!(g.is_diregular(d));
        }
    }
    outcome.canonical_forms.into_iter().collect()
}

#[test]
fn degree_one_matches_brute_force() {
    for k in 1..=4 {
        for epsilon in 0..=2 {
            // Orders stay at k + 1 + epsilon <= 7: brute force enumerates
            // (n-1)^n labelled digraphs.
            for diregular in [false, true] {
                let brute = canonical_set(&brute_force_search(1, k, epsilon, diregular));
                let searched = search_forms(1, k, epsilon, diregular);
                assert_eq!(
                    searched, brute,
                    "mismatch at (1,{k},+{epsilon}) diregular={diregular}"
                );
            }
        }
    }
}

#[test]
fn degree_two_diameter_one_matches_brute_force() {
    for epsilon in 0..=1 {
        for diregular in [false, true] {
            let brute = canonical_set(&brute_force_search(2, 1, epsilon, diregular));
            let searched = search_forms(2, 1, epsilon, diregular);
            assert_eq!(searched, brute, "mismatch at (2,1,+{epsilon}) diregular={diregular}");
        }
    }
}

#[test]
fn degree_one_excess_two_includes_disconnected_classes() {
    // (1,1,+2): order 4, 1-out-regular, 1-geodetic (simple + loop-free is
    // enough at k=1). The two disjoint digons form a valid disconnected
    // class, so the generator's root restarts are load-bearing here.
    let searched = search_forms(1, 1, 2, false);
    let two_digons =
        kgeo_core::Digraph::from_arcs(4, &[(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
    assert!(searched.contains(&canonical_form(&two_digons)));
    let brute = canonical_set(&brute_force_search(1, 1, 2, false));
    assert_eq!(searched, brute);
}

#[test]
fn diregular_results_are_the_diregular_slice_of_the_full_set() {
    for (d, k, epsilon) in [(2, 2, 2), (2, 2, 3)] {
        let all = search(&SearchParams::new(d, k, epsilon)).unwrap();
        let diregular_only = search(&SearchParams::new(d, k, epsilon).diregular(true)).unwrap();
        assert!(all.complete && diregular_only.complete);
        let filtered: BTreeSet<CanonicalForm> = all
            .results
            .iter()
            .filter(|g| g.is_diregular(d))
            .map(canonical_form)
            .collect();
        let searched: BTreeSet<CanonicalForm> =
            diregular_only.canonical_forms.into_iter().collect();
        assert_eq!(filtered, searched, "({d},{k},+{epsilon})");
    }
}

#[test]
fn rooting_invariance_of_emitted_results() {
    let outcome = search(&SearchParams::new(2, 2, 2)).unwrap();
    for g in &outcome.results {
        let base = canonical_form(g);
        // Rotate labels so each vertex takes the role of vertex 0 once.
        let n = g.order();
        for shift in 0..n {
            let perm: Vec<usize> = (0..n).map(|v| (v + shift) % n).collect();
            let rotated = g.relabel(&perm).unwrap();
            assert_eq!(canonical_form(&rotated), base);
        }
    }
}
