//! Immutable simple undirected graphs and the basic primitives on them.

mod fixtures;
mod generate;
mod ops;
mod parse;
mod vertex_set;

use std::collections::HashMap;

pub use fixtures::{c5, complete, cycle, fixture, g12, k4, path, petersen, star, star3, theta7, FIXTURE_NAMES};
pub use generate::{generate, is_caterpillar, random_connected_gnp, Model};
pub use ops::{components, components_within, is_clique, is_connected_set, is_simplicial, separates};
pub use parse::{parse_graph, parse_graph6_corpus, to_edge_list, to_graph6, InputFormat};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Dense vertex identifier in `0..n`.
pub type VertexId = usize;

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset per vertex. Every vertex carries an
/// external label used only for input and output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Vec<String>,
    size: usize,
}

impl Graph {
    /// Edgeless graph of order `n` labelled `0..n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
            labels: (0..n).map(|v| v.to_string()).collect(),
            size: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; a
    /// self-loop or an endpoint `>= n` is an error.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u.to_string()));
            }
            if g.adj[u].insert(v) {
                g.adj[v].insert(u);
                g.size += 1;
            }
        }
        Ok(g)
    }

    /// Replaces the vertex labels. Labels must be unique and one per vertex.
    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::InvalidArgument(format!(
                "expected {} labels, got {}",
                self.order(),
                labels.len()
            )));
        }
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate label `{l}`")));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.order())
    }

    pub fn set_of<I: IntoIterator<Item = VertexId>>(&self, vertices: I) -> VertexSet {
        VertexSet::from_vertices(self.order(), vertices)
    }

    /// Open neighbourhood, unchecked. Panics when `v` is out of range.
    #[inline]
    pub fn adj(&self, v: VertexId) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(v)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// N(v).
    pub fn neighbors(&self, v: VertexId) -> Result<&VertexSet> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighbors(&self, v: VertexId) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed_adj(v))
    }

    pub(crate) fn closed_adj(&self, v: VertexId) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// N(S): vertices outside `s` adjacent to some member of `s`.
    pub fn set_neighbors(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn labels_of(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || components(self, &self.empty_set()).len() == 1
    }

    pub fn is_complete(&self) -> bool {
        is_clique(self, &self.all())
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.order() > 0 && self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Induced subgraph on `s`. Vertex `i` of the result is the `i`-th
    /// smallest member of `s`; the returned map sends new ids to old ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<VertexId>) {
        let map: Vec<VertexId> = s.iter().collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| s.contains(u) && s.contains(v))
            .map(|(u, v)| (index[u], index[v]));
        let sub = Graph::from_edges(map.len(), edges).expect("induced edges are valid");
        let labels = map.iter().map(|&v| self.labels[v].clone()).collect::<Vec<_>>();
        let sub = sub.with_labels(labels).expect("labels stay unique");
        (sub, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_edges_merge() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop("1".into())));
    }

    #[test]
    fn out_of_range_neighbors() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(matches!(g.neighbors(5), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn isolated_vertex_neighborhoods() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(g.neighbors(2).unwrap().is_empty());
        assert_eq!(g.closed_neighbors(2).unwrap().to_vec(), vec![2]);
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = g12();
        let s = g.set_of([7, 8, 9, 10, 11]);
        let (h, map) = g.induced_subgraph(&s);
        assert_eq!(h.order(), 5);
        assert_eq!(map, vec![7, 8, 9, 10, 11]);
        assert_eq!(h.label(0), "v8");
        assert_eq!(h.size(), 7);
    }
}
