use std::collections::VecDeque;

use super::{Graph, VertexId, VertexSet};
use crate::error::{Error, Result};

/// Connected components of `g[within]`, ordered by smallest member.
pub fn components_within(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut unseen = within.clone();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    while let Some(start) = unseen.first() {
        let mut comp = g.empty_set();
        unseen.remove(start);
        comp.insert(start);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let fresh = g.adj(u).intersection(&unseen);
            for w in fresh.iter() {
                unseen.remove(w);
                comp.insert(w);
                queue.push_back(w);
            }
        }
        out.push(comp);
    }
    out
}

/// Connected components of `g - removed`, ordered by smallest member.
pub fn components(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    components_within(g, &removed.complement())
}

/// Whether `g[s]` is connected. The empty set counts as connected.
pub fn is_connected_set(g: &Graph, s: &VertexSet) -> bool {
    components_within(g, s).len() <= 1
}

/// Whether `s` separates `u` from `v`: a `(u, v)`-path exists in `g` but
/// none exists in `g - s`.
pub fn separates(g: &Graph, s: &VertexSet, u: VertexId, v: VertexId) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if s.contains(u) || s.contains(v) {
        return Err(Error::InvalidArgument("separated vertices must lie outside the separator".into()));
    }
    let joined = |removed: &VertexSet| {
        components(g, removed).iter().any(|c| c.contains(u) && c.contains(v))
    };
    Ok(joined(&g.empty_set()) && !joined(s))
}

/// Every pair of `s` adjacent. The empty set and singletons are cliques.
pub fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    let k = s.len();
    s.iter().all(|v| g.adj(v).intersection_len(s) == k - 1)
}

/// `N(v)` is a clique.
pub fn is_simplicial(g: &Graph, v: VertexId) -> bool {
    is_clique(g, g.adj(v))
}
