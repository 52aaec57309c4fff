mod common;

use proptest::prelude::*;
use tollhull::graph::{cycle, g12, k4, random_connected_gnp, theta7};
use tollhull::*;

#[test]
fn every_emission_is_valid_up_to_six() {
    let mut incomplete = 0;
    for g in common::corpus_up_to(6) {
        let report = completeness_report(&g).expect("no invalid emission");
        assert!(!report.emitted.is_empty());
        assert!(report.emitted.iter().all(|s| report.expected.contains(s)));
        incomplete += usize::from(!report.is_complete());
    }
    // the product construction does not reach every minimum set
    assert!(incomplete > 0);
}

#[test]
fn g12_sets() {
    let g = g12();
    let sets: Vec<_> = enumerate_min_hull_sets(&g, None).unwrap().map(|s| s.unwrap()).collect();
    assert!(sets.contains(&g.set_of([0, 1, 2, 10])));
    assert!(sets.iter().all(|s| g.set_of([0, 1, 2]).is_subset(s) && s.len() == 4));
}

#[test]
fn complete_graph_has_one_set() {
    let g = k4();
    let sets: Vec<_> = enumerate_min_hull_sets(&g, None).unwrap().collect::<Result<_>>().unwrap();
    assert_eq!(sets, vec![g.all()]);
}

#[test]
fn theta_sets() {
    let g = theta7();
    let sets: Vec<_> = enumerate_min_hull_sets(&g, None).unwrap().collect::<Result<_>>().unwrap();
    assert_eq!(sets.len(), 6);
    assert_eq!(sets[0], solve(&g).unwrap().hull_set);
}

#[test]
fn disconnected_rejected() {
    assert!(enumerate_min_hull_sets(&Graph::empty(2), None).is_err());
}

#[test]
fn delay_is_polynomial() {
    for seed in 0..40 {
        let n = 8 + (seed % 30) as usize;
        let g = random_connected_gnp(n, 0.2f64.max(2.5 / n as f64), seed).unwrap();
        let r = solve(&g).unwrap();
        let mut it = MinHullSets::new(&g, &r, Some(500));
        for s in it.by_ref() {
            s.unwrap();
        }
        assert!(it.max_gap() <= 4 * (n as u64).pow(4), "gap {} at n={n}", it.max_gap());
    }
}

#[test]
fn limit_caps_the_stream() {
    let g = cycle(8);
    assert_eq!(enumerate_min_hull_sets(&g, Some(3)).unwrap().count(), 3);
    assert_eq!(enumerate_min_hull_sets(&g, Some(0)).unwrap().count(), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn stream_is_sorted_distinct_and_valid(n in 2usize..16, p in 0.1f64..0.6, seed in any::<u64>()) {
        let g = random_connected_gnp(n, p.max(2.5 / n as f64).min(1.0), seed).unwrap();
        let r = solve(&g).unwrap();
        let menu = selection_menu(&g, &r);
        prop_assert!(menu.entries.iter().all(|e| !e.options.is_empty()));
        prop_assert!(menu.entries.iter().all(|e| e.options.contains(&e.block.chosen)));
        let sets: Vec<_> = MinHullSets::new(&g, &r, Some(200)).collect::<Result<_>>().unwrap();
        prop_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        let h = r.hull_number;
        for s in &sets {
            prop_assert_eq!(s.len(), h);
            prop_assert_eq!(toll_hull(&g, s).unwrap(), g.all());
        }
        prop_assert!(sets.contains(&r.hull_set) || sets.len() == 200);
    }
}
