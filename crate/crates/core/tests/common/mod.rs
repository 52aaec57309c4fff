#![allow(dead_code)]

use tollhull::graph::parse_graph6_corpus;
use tollhull::Graph;

pub fn corpus() -> Vec<Graph> {
    parse_graph6_corpus(include_str!("../data/connected_le7.g6")).expect("corpus parses")
}

pub fn corpus_up_to(n: usize) -> Vec<Graph> {
    corpus().into_iter().filter(|g| g.order() <= n).collect()
}
