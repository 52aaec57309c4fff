mod common;

use proptest::prelude::*;
use tollhull::graph::*;
use tollhull::{Error, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        let back = parse_graph(&to_graph6(&g), InputFormat::Graph6).unwrap();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(back.order(), g.order());
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        let back = parse_graph(&to_edge_list(&g), InputFormat::EdgeList).unwrap();
        prop_assert_eq!(back.order(), g.order());
        let relabel = |h: &Graph| {
            let mut e: Vec<(String, String)> = h.edges().map(|(u, v)| {
                let (a, b) = (h.label(u).to_string(), h.label(v).to_string());
                if a < b { (a, b) } else { (b, a) }
            }).collect();
            e.sort();
            e
        };
        prop_assert_eq!(relabel(&back), relabel(&g));
    }

    #[test]
    fn components_partition_the_rest(g in arb_graph(14), removed in proptest::collection::vec(any::<bool>(), 14)) {
        let r = g.set_of(g.vertices().filter(|&v| removed[v]));
        let comps = components(&g, &r);
        let mut seen = r.clone();
        for c in &comps {
            prop_assert!(is_connected_set(&g, c));
            prop_assert!(c.is_disjoint(&seen));
            seen.union_with(c);
            // no edge leaves a component except into the removed set
            prop_assert!(g.set_neighbors(c).is_subset(&r));
        }
        prop_assert_eq!(seen, g.all());
    }

    #[test]
    fn separation_matches_components(g in arb_graph(10), bits in proptest::collection::vec(any::<bool>(), 10)) {
        prop_assume!(g.order() >= 2 && g.is_connected());
        let (u, v) = (0, g.order() - 1);
        let s = g.set_of(g.vertices().filter(|&w| w != u && w != v && bits[w]));
        let apart = components(&g, &s).iter().all(|c| !(c.contains(u) && c.contains(v)));
        prop_assert_eq!(separates(&g, &s, u, v).unwrap(), apart);
    }
}

#[test]
fn g12_shape() {
    let g = g12();
    assert_eq!((g.order(), g.size()), (12, 26));
    assert_eq!(g.labels_of(g.neighbors(10).unwrap()), ["v10", "v12"]);
    assert!(is_clique(&g, &g.set_of(0..5)));
}

#[test]
fn graph6_example() {
    let g = parse_graph("DQc", InputFormat::Graph6).unwrap();
    assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    assert_eq!(to_graph6(&g), "DQc");
}

#[test]
fn edge_list_errors() {
    assert!(matches!(parse_graph("a a\n", InputFormat::EdgeList), Err(Error::SelfLoop(_))));
    assert!(matches!(parse_graph("a b c\n", InputFormat::EdgeList), Err(Error::Malformed { line: 1, .. })));
    assert_eq!(parse_graph("# nothing\n", InputFormat::EdgeList).unwrap_err(), Error::EmptyInput);
    let g = parse_graph("x y\ny x\nz\n", InputFormat::EdgeList).unwrap();
    assert_eq!((g.order(), g.size()), (3, 1));
    assert!(!g.is_connected());
    assert_eq!(g.require_connected().unwrap_err(), Error::Disconnected);
}

#[test]
fn separates_rejects_members() {
    let g = path(3);
    assert!(separates(&g, &g.set_of([1]), 0, 2).unwrap());
    assert!(separates(&g, &g.set_of([0]), 0, 2).is_err());
}

#[test]
fn corpus_is_complete() {
    let corpus = common::corpus();
    // connected graphs on 1..=7 vertices up to isomorphism
    let per_order: Vec<usize> = (1..=7).map(|n| corpus.iter().filter(|g| g.order() == n).count()).collect();
    assert_eq!(per_order, vec![1, 1, 2, 6, 21, 112, 853]);
    assert!(corpus.iter().all(Graph::is_connected));
}

#[test]
fn generators_are_deterministic() {
    for model in [Model::Gnp, Model::RandomTree] {
        let a = generate(model, 25, Some(0.2), 99).unwrap();
        let b = generate(model, 25, Some(0.2), 99).unwrap();
        assert_eq!(to_graph6(&a), to_graph6(&b));
    }
    let t = generate(Model::RandomTree, 30, None, 5).unwrap();
    assert_eq!(t.size(), 29);
    assert!(t.is_connected());
    assert!(is_caterpillar(&path(6)).unwrap());
    assert!(is_caterpillar(&star(5)).unwrap());
    assert!(is_caterpillar(&cycle(5)).is_err());
}

#[test]
fn fixtures_by_name() {
    for name in FIXTURE_NAMES {
        assert!(fixture(name).unwrap().is_connected(), "{name}");
    }
    assert!(fixture("theta7").is_some());
    assert!(fixture("nope").is_none());
}
