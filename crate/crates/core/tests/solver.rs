mod common;

use proptest::prelude::*;
use tollhull::graph::{generate, random_connected_gnp, Model};
use tollhull::oracles::{bf_hull_number, BfIntervals};
use tollhull::{extreme_vertices, solve, toll_hull, ConcaveType, Graph};

fn check_against_oracle(g: &Graph) {
    let r = solve(g).unwrap();
    let expected = bf_hull_number(g).unwrap();
    assert_eq!(r.hull_number, expected, "hull number of {:?}", g.edges().collect::<Vec<_>>());
    assert_eq!(toll_hull(g, &r.hull_set).unwrap(), g.all());
    let total: usize = r.family.iter().map(|b| b.granularity).sum();
    assert_eq!(total, r.hull_number);
    assert_eq!(r.extreme, extreme_vertices(g));
}

#[test]
fn corpus_matches_oracle() {
    for g in common::corpus() {
        check_against_oracle(&g);
    }
}

#[test]
fn random_graphs_match_oracle() {
    let mut seed = 0u64;
    let mut checked = 0;
    while checked < 10_000 {
        seed += 1;
        let n = 2 + (seed % 8) as usize;
        let p = [0.2, 0.35, 0.5, 0.7][(seed / 8 % 4) as usize];
        let g = random_connected_gnp(n, p, seed).unwrap();
        check_against_oracle(&g);
        checked += 1;
    }
}

#[test]
fn random_trees_match_oracle() {
    for seed in 0..300 {
        let g = generate(Model::RandomTree, 2 + (seed % 8) as usize, None, seed).unwrap();
        check_against_oracle(&g);
    }
}

#[test]
fn deterministic() {
    let g = random_connected_gnp(30, 0.15, 7).unwrap();
    let (a, b) = (solve(&g).unwrap(), solve(&g).unwrap());
    assert_eq!((a.hull_set, a.family, a.trace), (b.hull_set, b.family, b.trace));
}

#[test]
fn type3_blocks_are_extreme_sets() {
    for g in common::corpus_up_to(6) {
        let bf = BfIntervals::new(&g).unwrap();
        let r = solve(&g).unwrap();
        for b in r.family.iter().filter(|b| b.kind == ConcaveType::Type3) {
            assert!(b.interior.iter().all(|v| bf.is_extreme(v)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn blocks_hold_granularity(n in 2usize..40, p in 0.05f64..0.6, seed in any::<u64>()) {
        let g = random_connected_gnp(n, p.max(3.0 / n as f64).min(1.0), seed).unwrap();
        let r = solve(&g).unwrap();
        for b in &r.family {
            prop_assert_eq!(r.hull_set.intersection(&b.interior).len(), b.granularity);
        }
        prop_assert_eq!(toll_hull(&g, &r.hull_set).unwrap(), g.all());
        prop_assert!(r.hull_number >= r.extreme.len());
    }
}
