mod common;

use proptest::prelude::*;
use tollhull::graph::{components, g12, is_clique, random_connected_gnp, theta7};
use tollhull::oracles::bf_atoms;
use tollhull::*;

fn sets(d: &AtomDecomposition) -> Vec<VertexSet> {
    d.atoms.iter().map(|a| a.vertices.clone()).collect()
}

#[test]
fn atoms_match_oracle_on_corpus() {
    for g in common::corpus() {
        let d = atoms(&g).unwrap();
        let mut got = sets(&d);
        got.sort();
        let mut want = bf_atoms(&g).unwrap();
        want.sort();
        assert_eq!(got, want, "{:?}", g.edges().collect::<Vec<_>>());
    }
}

#[test]
fn non_extremal_atoms_disconnect() {
    for g in common::corpus() {
        let d = atoms(&g).unwrap();
        for a in d.non_extremal_atoms() {
            assert!(components(&g, &a.vertices).len() >= 2);
        }
    }
}

#[test]
fn g12_decomposition() {
    let g = g12();
    let d = atoms(&g).unwrap();
    let labels: Vec<String> = d.atoms.iter().map(|a| g.labels_of(&a.vertices).join(",")).collect();
    assert_eq!(labels, ["v1,v2,v3,v4,v5", "v4,v5,v6,v7", "v6,v7,v8,v9", "v8,v9,v10,v11,v12"]);
    let extremal: Vec<_> = d.extremal_atoms().map(|a| a.vertices.clone()).collect();
    assert_eq!(extremal, [g.set_of(0..5), g.set_of(7..12)]);
    let b = block_of(&g, &g.set_of(0..5));
    assert_eq!((b.border, b.interior), (g.set_of([3, 4]), g.set_of([0, 1, 2])));
    assert!(!is_prime(&g).unwrap());
}

#[test]
fn theta_and_prime_graphs() {
    let t = theta7();
    let d = atoms(&t).unwrap();
    assert_eq!(sets(&d), vec![t.set_of([0, 1, 2, 3]), t.set_of([0, 1, 4, 5, 6])]);
    assert_eq!(extremal_atoms(&d).unwrap().len(), 2);
    let c5 = tollhull::graph::c5();
    assert!(is_prime(&c5).unwrap());
    assert!(extremal_atoms(&atoms(&c5).unwrap()).is_err());
    assert!(atoms(&Graph::empty(2)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn atom_structure(n in 2usize..30, p in 0.05f64..0.6, seed in any::<u64>()) {
        let g = random_connected_gnp(n, p.max(2.0 / n as f64).min(1.0), seed).unwrap();
        let d = atoms(&g).unwrap();
        let mut covered = g.empty_set();
        for (i, a) in d.atoms.iter().enumerate() {
            covered.union_with(&a.vertices);
            // no clique separates an atom internally
            let (sub, _) = g.induced_subgraph(&a.vertices);
            prop_assert!(sub.is_connected());
            for b in &d.atoms[i + 1..] {
                prop_assert!(!a.vertices.is_subset(&b.vertices) && !b.vertices.is_subset(&a.vertices));
            }
        }
        prop_assert_eq!(covered, g.all());
        for (u, v) in g.edges() {
            prop_assert!(d.atoms.iter().any(|a| a.vertices.contains(u) && a.vertices.contains(v)));
        }
        for a in d.non_extremal_atoms() {
            prop_assert!(components(&g, &a.vertices).len() >= 2);
        }
        // an extremal atom meets the union of the others in a clique
        if d.atoms.len() >= 2 {
            for a in d.extremal_atoms() {
                let rest = d.atoms.iter().filter(|b| b.vertices != a.vertices).fold(g.empty_set(), |acc, b| acc.union(&b.vertices));
                prop_assert!(is_clique(&g, &a.vertices.intersection(&rest)));
            }
        }
    }
}
