//! Named graphs used throughout the tests and by the CLI.

use super::Graph;

pub const FIXTURE_NAMES: [&str; 7] = ["G12", "THETA7", "K4", "C5", "STAR3", "PETERSEN", "P4"];

/// Looks up a fixture by name, case-insensitively.
pub fn fixture(name: &str) -> Option<Graph> {
    match name.to_ascii_uppercase().as_str() {
        "G12" => Some(g12()),
        "THETA7" => Some(theta7()),
        "K4" => Some(k4()),
        "C5" => Some(c5()),
        "STAR3" => Some(star3()),
        "PETERSEN" => Some(petersen()),
        "P4" => Some(path(4)),
        _ => None,
    }
}

fn labelled(labels: &[&str], edges: &[(&str, &str)]) -> Graph {
    let id = |l: &str| labels.iter().position(|&x| x == l).expect("fixture label");
    Graph::from_edges(labels.len(), edges.iter().map(|&(a, b)| (id(a), id(b))))
        .and_then(|g| g.with_labels(labels.to_vec()))
        .expect("fixture is a simple graph")
}

/// Twelve-vertex graph with four atoms, labelled `v1..v12`.
pub fn g12() -> Graph {
    let labels: Vec<String> = (1..=12).map(|i| format!("v{i}")).collect();
    let edges = [
        (1, 2), (1, 3), (2, 3), (4, 1), (4, 2), (4, 3),
        (5, 1), (5, 2), (5, 3), (5, 4), (6, 4), (6, 5),
        (7, 4), (7, 5), (7, 6), (8, 6), (8, 7), (9, 6),
        (9, 7), (9, 8), (10, 8), (10, 9), (10, 11), (11, 12),
        (12, 8), (12, 9),
    ];
    Graph::from_edges(12, edges.iter().map(|&(a, b)| (a - 1, b - 1)))
        .and_then(|g| g.with_labels(labels))
        .expect("fixture is a simple graph")
}

/// Two `s`-`t` routes, one of them short, joined by the edge `st`.
pub fn theta7() -> Graph {
    labelled(
        &["s", "t", "z1", "z2", "p", "r", "q"],
        &[("s", "t"), ("s", "z1"), ("z1", "z2"), ("z2", "t"), ("s", "p"), ("p", "r"), ("r", "q"), ("q", "t")],
    )
}

pub fn k4() -> Graph {
    complete(4).with_labels(vec!["a", "b", "c", "d"]).expect("labels")
}

pub fn c5() -> Graph {
    cycle(5).with_labels(vec!["a", "b", "c", "d", "e"]).expect("labels")
}

/// K1,3 with centre `c` and leaves `x`, `y`, `z`.
pub fn star3() -> Graph {
    labelled(&["c", "x", "y", "z"], &[("c", "x"), ("c", "y"), ("c", "z")])
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("simple")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("simple")
}

/// K1,k with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("simple")
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_sizes() {
        assert_eq!((g12().order(), g12().size()), (12, 26));
        assert_eq!((theta7().order(), theta7().size()), (7, 8));
        assert_eq!(petersen().size(), 15);
        assert!(petersen().vertices().all(|v| petersen().degree(v) == 3));
        for name in FIXTURE_NAMES {
            assert!(fixture(name).is_some(), "{name}");
        }
        assert!(fixture("nope").is_none());
    }

    #[test]
    fn g12_neighborhoods() {
        let g = g12();
        let n11 = g.neighbors(10).unwrap();
        assert_eq!(g.labels_of(n11), ["v10", "v12"]);
        let n5 = g.neighbors(4).unwrap();
        assert_eq!(g.labels_of(n5), ["v1", "v2", "v3", "v4", "v6", "v7"]);
    }
}
