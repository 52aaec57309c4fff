mod common;

use proptest::prelude::*;
use tollhull::graph::{g12, k4, path, random_connected_gnp, star3, theta7};
use tollhull::oracles::*;
use tollhull::{solve, Error};

#[test]
fn tolled_walk_definition() {
    let t = theta7();
    // p s z1 z2 t q
    assert!(is_tolled_walk(&t, &[4, 0, 2, 3, 1, 6]));
    // the start may not see a later vertex: p s t q has p ~ s only, but q ~ t at k-1 is fine
    assert!(is_tolled_walk(&t, &[4, 0, 1, 6]));
    // s reappears after position 2 next to p
    assert!(!is_tolled_walk(&t, &[4, 0, 2, 0, 1, 6]));
    // not a walk
    assert!(!is_tolled_walk(&t, &[4, 6]));
    let s = star3();
    // x c z c y: c is adjacent to x at position 4
    assert!(!is_tolled_walk(&s, &[1, 0, 3, 0, 2]));
    assert!(is_tolled_walk(&s, &[1, 0, 2]));
}

#[test]
fn interval_examples() {
    let g = g12();
    let i = bf_toll_interval(&g, 2, 10).unwrap();
    assert!(g.set_of([3, 5, 7, 9]).is_subset(&i));
    let w = bf_witness(&g, 2, 10, 9).unwrap().unwrap();
    assert!(w.is_valid(&g));
    assert_eq!(bf_toll_interval(&g, 0, 1).unwrap(), g.set_of([0, 1]));
    let s = star3();
    assert_eq!(bf_toll_interval(&s, 1, 2).unwrap(), s.set_of([0, 1, 2]));
    assert!(bf_toll_interval(&s, 1, 1).is_err());
}

#[test]
fn hull_numbers() {
    assert_eq!(bf_hull_number(&g12()).unwrap(), 4);
    assert_eq!(bf_hull_number(&k4()).unwrap(), 4);
    assert_eq!(bf_hull_number(&star3()).unwrap(), 3);
    assert_eq!(bf_all_min_hull_sets(&star3()).unwrap(), vec![star3().set_of([1, 2, 3])]);
    assert_eq!(bf_hull(&g12(), &g12().set_of([0, 1, 2, 10])).unwrap(), g12().all());
}

#[test]
fn atom_examples() {
    let p = path(3);
    assert_eq!(bf_atoms(&p).unwrap(), vec![p.set_of([0, 1]), p.set_of([1, 2])]);
    let t = theta7();
    let mut got = bf_atoms(&t).unwrap();
    got.sort();
    assert_eq!(got, vec![t.set_of([0, 1, 2, 3]), t.set_of([0, 1, 4, 5, 6])]);
    let g = g12();
    let (first9, _) = g.induced_subgraph(&g.set_of(0..9));
    let mut got = bf_atoms(&first9).unwrap();
    got.sort();
    assert_eq!(got, vec![first9.set_of(0..5), first9.set_of([3, 4, 5, 6]), first9.set_of([5, 6, 7, 8])]);
}

#[test]
fn size_guards() {
    let big = tollhull::graph::cycle(13);
    assert_eq!(bf_hull_number(&big).unwrap_err(), Error::SizeGuard { order: 13, limit: HULL_LIMIT });
    assert!(bf_toll_interval(&big, 0, 2).is_err());
    let ten = tollhull::graph::cycle(10);
    assert_eq!(bf_all_min_hull_sets(&ten).unwrap_err(), Error::SizeGuard { order: 10, limit: ENUMERATION_LIMIT });
    assert!(bf_atoms(&ten).is_err());
}

#[test]
fn toll_number_bounds_hull_number() {
    for g in common::corpus_up_to(6) {
        let h = bf_hull_number(&g).unwrap();
        assert!(bf_toll_number(&g).unwrap() >= h);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn witnesses_exist_exactly_for_members(n in 3usize..9, p in 0.2f64..0.7, seed in any::<u64>()) {
        let g = random_connected_gnp(n, p, seed).unwrap();
        let (x, y) = (0, n - 1);
        let interval = bf_toll_interval(&g, x, y).unwrap();
        for v in g.vertices() {
            let w = bf_witness(&g, x, y, v).unwrap();
            prop_assert_eq!(w.is_some(), interval.contains(v));
            if let Some(w) = w {
                prop_assert!(w.is_valid(&g));
                prop_assert!(w.walk.len() <= default_walk_cap(n) + 1);
            }
        }
    }

    #[test]
    fn min_sets_have_solver_size(n in 2usize..8, p in 0.2f64..0.8, seed in any::<u64>()) {
        let g = random_connected_gnp(n, p, seed).unwrap();
        let h = solve(&g).unwrap().hull_number;
        let sets = bf_all_min_hull_sets(&g).unwrap();
        prop_assert!(!sets.is_empty());
        prop_assert!(sets.iter().all(|s| s.len() == h));
    }
}
