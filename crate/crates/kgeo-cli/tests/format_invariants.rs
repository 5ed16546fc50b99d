//! Round-trip and determinism invariants of the external formats.

use kgeo_cli::checkpoint::Checkpoint;
use kgeo_cli::report::{to_json, CheckReport, SearchSummary};
use kgeo_cli::{emit_digraph, parse_digraph};
use kgeo_core::search::{search, SearchParams};
use kgeo_core::testkit::{random_digraph, SplitMix64};
use kgeo_core::{classify, TaskPrefix};
use proptest::prelude::*;

proptest! {
    #[test]
    fn digraph_text_round_trips(n in 0usize..=9, seed in any::<u64>(), density in 1u64..=7) {
        let mut rng = SplitMix64::new(seed);
        let g = random_digraph(&mut rng, n, density, 8);
        prop_assert_eq!(parse_digraph(&emit_digraph(&g)).unwrap(), g);
    }

    #[test]
    fn checkpoint_round_trips(seed in any::<u64>(), nodes in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let mut cp = Checkpoint::fresh(&SearchParams::new(2, 2, 2));
        cp.prefix_nodes = nodes.rotate_left(7);
        cp.task_nodes = nodes;
        for _ in 0..rng.below(5) {
            let len = rng.below(6) as usize;
            let choices = (0..len).map(|_| rng.below(9) as usize).collect();
            cp.completed.insert(TaskPrefix { choices });
        }
        let g = random_digraph(&mut rng, 6, 2, 5);
        cp.forms.insert(kgeo_core::canonical_form(&g));
        prop_assert_eq!(Checkpoint::parse(&cp.render()).unwrap(), cp);
    }
}

#[test]
fn reports_are_byte_deterministic_across_runs() {
    let outcome_a = search(&SearchParams::new(2, 2, 2)).unwrap();
    let outcome_b = search(&SearchParams::new(2, 2, 2)).unwrap();
    let summary_a = SearchSummary::build(&outcome_a);
    let summary_b = SearchSummary::build(&outcome_b);
    assert_eq!(summary_a.to_text(), summary_b.to_text());
    assert_eq!(to_json(&summary_a), to_json(&summary_b));

    let g = kgeo_core::cages::right_cage();
    let m = classify(&g, 2, 2).unwrap();
    let doc = CheckReport::build(&g, &m);
    assert_eq!(doc.to_text(), CheckReport::build(&g, &m).to_text());
    assert_eq!(to_json(&doc), to_json(&CheckReport::build(&g, &m)));
}
