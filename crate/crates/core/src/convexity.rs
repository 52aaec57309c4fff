//! Toll intervals, toll convex hulls and the concavity tests built on them.
//!
//! A vertex `v` lies on a tolled walk between non-adjacent `x` and `y` iff
//! `N[x] - {v}` does not separate `v` from `y` and `N[y] - {v}` does not
//! separate `v` from `x`. Everything here reduces to that test, evaluated
//! against the components of `G - N[x]` which are computed once per vertex
//! and cached.

use std::cell::OnceCell;

use crate::error::{Error, Result};
use crate::graph::{components_within, is_clique, is_connected_set, Graph, VertexId, VertexSet};

/// A vertex set split into its border (members with a neighbour outside the
/// set) and its interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub set: VertexSet,
    pub border: VertexSet,
    pub interior: VertexSet,
}

impl Block {
    pub fn of(g: &Graph, set: &VertexSet) -> Block {
        let outside = set.complement();
        let border = g.set_of(set.iter().filter(|&v| !g.adj(v).is_disjoint(&outside)));
        let interior = set.difference(&border);
        Block { set: set.clone(), border, interior }
    }
}

const UNREACHED: u32 = u32::MAX;

/// Components of `G - N[x]`.
struct Separation {
    label: Vec<u32>,
    comps: Vec<VertexSet>,
}

/// Toll interval engine for one graph. Caches the components of `G - N[x]`
/// per vertex on first use; not shared across threads.
pub struct TollIntervals<'g> {
    g: &'g Graph,
    seps: Vec<OnceCell<Separation>>,
}

impl<'g> TollIntervals<'g> {
    pub fn new(g: &'g Graph) -> Self {
        TollIntervals { g, seps: (0..g.order()).map(|_| OnceCell::new()).collect() }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    fn separation(&self, x: VertexId) -> &Separation {
        self.seps[x].get_or_init(|| {
            let g = self.g;
            let comps = components_within(g, &g.closed_adj(x).complement());
            let mut label = vec![UNREACHED; g.order()];
            for (i, c) in comps.iter().enumerate() {
                for v in c.iter() {
                    label[v] = i as u32;
                }
            }
            Separation { label, comps }
        })
    }

    /// `v` and `target` are joined in `G - (N[x] - {v})`. Requires
    /// `target ∉ N[x]` and `v != x`.
    fn reaches(&self, x: VertexId, v: VertexId, target: VertexId) -> bool {
        let sep = self.separation(x);
        let t = sep.label[target];
        debug_assert_ne!(t, UNREACHED);
        if sep.label[v] != UNREACHED {
            sep.label[v] == t
        } else {
            // v ∈ N(x): put back, it joins every component it touches.
            !self.g.adj(v).is_disjoint(&sep.comps[t as usize])
        }
    }

    /// `N[u]` does not separate `a` from `b`; both must lie outside `N[u]`.
    pub fn joined_avoiding(&self, u: VertexId, a: VertexId, b: VertexId) -> bool {
        let sep = self.separation(u);
        sep.label[a] != UNREACHED && sep.label[a] == sep.label[b]
    }

    /// Whether `v ∈ [x, y]` for distinct `x`, `y`.
    pub fn on_tolled_walk(&self, x: VertexId, y: VertexId, v: VertexId) -> bool {
        if v == x || v == y {
            return true;
        }
        !self.g.has_edge(x, y) && self.reaches(x, v, y) && self.reaches(y, v, x)
    }

    /// `[x, y]`: every vertex on some tolled `(x, y)`-walk.
    pub fn interval(&self, x: VertexId, y: VertexId) -> Result<VertexSet> {
        self.g.check_vertex(x)?;
        self.g.check_vertex(y)?;
        if x == y {
            return Err(Error::InvalidArgument("toll interval needs two distinct vertices".into()));
        }
        Ok(self.interval_unchecked(x, y))
    }

    fn interval_unchecked(&self, x: VertexId, y: VertexId) -> VertexSet {
        let mut out = self.g.set_of([x, y]);
        if self.g.has_edge(x, y) {
            return out;
        }
        for v in self.g.vertices() {
            if v != x && v != y && self.reaches(x, v, y) && self.reaches(y, v, x) {
                out.insert(v);
            }
        }
        out
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.capacity() != self.g.order() {
            return Err(Error::InvalidArgument("vertex set does not belong to this graph".into()));
        }
        if s.is_empty() {
            return Err(Error::InvalidArgument("vertex set must be non-empty".into()));
        }
        Ok(())
    }

    /// `[S]`: union of `[x, y]` over pairs of `S`; `S` itself when `|S| = 1`.
    pub fn interval_of_set(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let members = s.to_vec();
        let mut out = s.clone();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                out.union_with(&self.interval_unchecked(x, y));
            }
        }
        Ok(out)
    }

    /// `⟨S⟩`: the least t-convex superset of `S`. Each pair of the growing
    /// hull is expanded exactly once.
    pub fn hull(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let mut hull = s.clone();
        let mut members = s.to_vec();
        let mut next = 1;
        while next < members.len() {
            let y = members[next];
            for i in 0..next {
                let x = members[i];
                for v in self.interval_unchecked(x, y).iter() {
                    if hull.insert(v) {
                        members.push(v);
                    }
                }
            }
            next += 1;
        }
        Ok(hull)
    }

    pub fn is_convex(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        let outside = s.complement();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if self.g.has_edge(x, y) {
                    continue;
                }
                if outside.iter().any(|v| self.reaches(x, v, y) && self.reaches(y, v, x)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_concave(&self, s: &VertexSet) -> bool {
        self.is_convex(&s.complement())
    }

    /// `{v}` is t-concave: `v` lies in no interval of two other vertices.
    pub fn is_extreme(&self, v: VertexId) -> bool {
        let n = self.g.order();
        for x in (0..n).filter(|&x| x != v) {
            for y in (x + 1..n).filter(|&y| y != v) {
                if self.on_tolled_walk(x, y, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn extreme_vertices(&self) -> VertexSet {
        self.g.set_of(self.g.vertices().filter(|&v| self.is_extreme(v)))
    }

    /// Concavity of `block.interior` when the border is a clique and the
    /// interior is non-empty and connected.
    ///
    /// Under that precondition a tolled walk meeting the interior has both
    /// ends outside the block and then covers the whole interior, so it is
    /// enough to test one interior vertex `v` against every non-adjacent
    /// pair `u, z` outside the block: `v` must share a component with `z` in
    /// `G - N[u]` and with `u` in `G - N[z]`.
    pub fn fast_concavity(&self, block: &Block) -> Result<bool> {
        let g = self.g;
        if !is_clique(g, &block.border) {
            return Err(Error::Precondition("block border is not a clique".into()));
        }
        let v = block
            .interior
            .first()
            .ok_or_else(|| Error::Precondition("block interior is empty".into()))?;
        if !is_connected_set(g, &block.interior) {
            return Err(Error::Precondition("block interior is disconnected".into()));
        }
        let outside = block.set.complement().to_vec();
        for (i, &u) in outside.iter().enumerate() {
            for &z in &outside[i + 1..] {
                if !g.has_edge(u, z) && self.joined_avoiding(u, v, z) && self.joined_avoiding(z, v, u) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `[x, y]` for distinct vertices of a connected graph.
pub fn toll_interval(g: &Graph, x: VertexId, y: VertexId) -> Result<VertexSet> {
    TollIntervals::new(g).interval(x, y)
}

pub fn interval_of_set(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    TollIntervals::new(g).interval_of_set(s)
}

pub fn toll_hull(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    TollIntervals::new(g).hull(s)
}

pub fn is_t_convex(g: &Graph, s: &VertexSet) -> bool {
    TollIntervals::new(g).is_convex(s)
}

pub fn is_t_concave(g: &Graph, s: &VertexSet) -> bool {
    TollIntervals::new(g).is_concave(s)
}

pub fn is_toll_extreme(g: &Graph, v: VertexId) -> bool {
    TollIntervals::new(g).is_extreme(v)
}

/// `Ext_t(G)`.
pub fn extreme_vertices(g: &Graph) -> VertexSet {
    TollIntervals::new(g).extreme_vertices()
}

pub fn fast_concavity_test(g: &Graph, block: &Block) -> Result<bool> {
    TollIntervals::new(g).fast_concavity(block)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{c5, g12, k4, star3, theta7};

    fn ids(g: &Graph, labels: &[&str]) -> VertexSet {
        g.set_of(labels.iter().map(|l| g.vertex_by_label(l).unwrap()))
    }

    #[test]
    fn adjacent_pair_interval() {
        let g = g12();
        assert_eq!(toll_interval(&g, 0, 1).unwrap(), g.set_of([0, 1]));
    }

    #[test]
    fn interval_errors() {
        let g = g12();
        assert!(toll_interval(&g, 3, 3).is_err());
        assert!(toll_interval(&g, 0, 40).is_err());
        assert!(interval_of_set(&g, &g.empty_set()).is_err());
        assert!(toll_hull(&g, &g.empty_set()).is_err());
    }

    #[test]
    fn g12_v1_v11_interval() {
        let g = g12();
        let got = toll_interval(&g, 0, 10).unwrap();
        assert!(ids(&g, &["v5", "v7", "v9", "v12"]).is_subset(&got));
        assert_eq!(got, g.all().difference(&ids(&g, &["v2", "v3"])));
    }

    #[test]
    fn c5_opposite_interval_is_everything() {
        let g = c5();
        assert_eq!(toll_interval(&g, 0, 2).unwrap(), g.all());
    }

    #[test]
    fn singleton_interval_of_set() {
        let g = g12();
        assert_eq!(interval_of_set(&g, &g.set_of([6])).unwrap(), g.set_of([6]));
    }

    #[test]
    fn star_hull_skips_third_leaf() {
        let g = star3();
        let s = ids(&g, &["x", "y"]);
        assert_eq!(toll_hull(&g, &s).unwrap(), ids(&g, &["c", "x", "y"]));
    }

    #[test]
    fn concave_families_of_g12() {
        let g = g12();
        assert!(is_t_concave(&g, &ids(&g, &["v1", "v2", "v3"])));
        assert!(is_t_concave(&g, &ids(&g, &["v10", "v11", "v12"])));
        assert!(is_t_convex(&g, &g.all()));
        assert!(is_t_convex(&g, &g.empty_set()));
    }

    #[test]
    fn theta_short_route_not_concave() {
        let g = theta7();
        assert!(!is_t_concave(&g, &ids(&g, &["z1", "z2"])));
    }

    #[test]
    fn extreme_vertices_of_fixtures() {
        let g = g12();
        assert_eq!(extreme_vertices(&g), ids(&g, &["v1", "v2", "v3"]));
        assert_eq!(extreme_vertices(&k4()), k4().all());
        assert!(extreme_vertices(&c5()).is_empty());
    }

    #[test]
    fn fast_test_on_fixtures() {
        let g = g12();
        let m4 = Block::of(&g, &ids(&g, &["v8", "v9", "v10", "v11", "v12"]));
        assert_eq!(m4.border, ids(&g, &["v8", "v9"]));
        assert!(fast_concavity_test(&g, &m4).unwrap());
        let m1 = Block::of(&g, &ids(&g, &["v1", "v2", "v3", "v4", "v5"]));
        assert!(fast_concavity_test(&g, &m1).unwrap());
        let t = theta7();
        let b = Block::of(&t, &ids(&t, &["s", "t", "z1", "z2"]));
        assert_eq!(b.interior, ids(&t, &["z1", "z2"]));
        assert!(!fast_concavity_test(&t, &b).unwrap());
    }

    #[test]
    fn fast_test_preconditions() {
        let g = g12();
        // Border {v4, v5, v8, v9} is not a clique.
        let b = Block::of(&g, &ids(&g, &["v4", "v5", "v6", "v7", "v8", "v9"]));
        assert!(matches!(fast_concavity_test(&g, &b), Err(Error::Precondition(_))));
        let whole = Block::of(&g, &g.all());
        assert!(whole.border.is_empty());
        let empty_interior = Block::of(&g, &ids(&g, &["v6", "v7"]));
        assert!(fast_concavity_test(&g, &empty_interior).is_err());
    }
}
