//! Candidate generation for the eight selection rules.
//!
//! Each rule lists every qualifying vertex or pair in lexicographic order;
//! the solver takes the first, the enumerator takes them all.

use super::types::{Choice, ChoiceContext};
use crate::convexity::{Block, TollIntervals};
use crate::graph::{Graph, VertexId, VertexSet};

impl Choice {
    /// All selections satisfying this rule in `ctx`, sorted and distinct.
    pub fn candidates(self, ti: &TollIntervals<'_>, ctx: &ChoiceContext) -> Vec<VertexSet> {
        let g = ti.graph();
        let mut out = match self {
            Choice::BorderNonNeighbor => singles(g, &ctx.f_bullet.interior, |u| misses(g, u, &ctx.f_bullet.border)),
            Choice::BorderNonNeighborSplitBoth | Choice::BorderNonNeighborSplit => {
                let Some(circ) = &ctx.f_circ else { return Vec::new() };
                let both = self == Choice::BorderNonNeighborSplitBoth;
                let members = interiors(g, ctx);
                singles(g, &ctx.f_bullet.interior, |u| {
                    misses(g, u, &ctx.f_bullet.border)
                        && (!both || misses(g, u, &circ.border))
                        && split_members(&members, ctx, u)
                })
            }
            Choice::NonAdjacentPair => non_adjacent_pairs(g, &ctx.f_bullet.interior),
            Choice::PairInOneMember => {
                let Some(circ) = &ctx.f_circ else { return Vec::new() };
                interiors(g, ctx)
                    .iter()
                    .flat_map(|(_, int)| non_adjacent_pairs(g, int))
                    .filter(|pair| {
                        let v = pair.to_vec();
                        mutual_reach(ti, &circ.border, v[0], v[1])
                    })
                    .collect()
            }
            Choice::PairAcrossMembers => {
                let Some(circ) = &ctx.f_circ else { return Vec::new() };
                let members = interiors(g, ctx);
                let mut pairs = Vec::new();
                for (i, (_, a)) in members.iter().enumerate() {
                    for (_, b) in &members[i + 1..] {
                        for u1 in a.iter() {
                            for u2 in b.iter() {
                                if u1 != u2 && !g.has_edge(u1, u2) && mutual_reach(ti, &circ.border, u1, u2) {
                                    pairs.push(g.set_of([u1, u2]));
                                }
                            }
                        }
                    }
                }
                pairs
            }
            Choice::SecondMissingBorder | Choice::SecondAnywhere => {
                let (Some(circ), Some(f1)) = (&ctx.f_circ, &ctx.concave_member) else { return Vec::new() };
                let strict = self == Choice::SecondMissingBorder;
                let mut pool = g.empty_set();
                for (set, int) in interiors(g, ctx) {
                    if set != f1 {
                        pool.union_with(&int);
                    }
                }
                singles(g, &pool, |u| !strict || misses(g, u, &circ.border))
            }
        };
        out.sort();
        out.dedup();
        out
    }

    /// The lexicographically least selection, or `None` if the rule does
    /// not apply.
    pub fn select(self, ti: &TollIntervals<'_>, ctx: &ChoiceContext) -> Option<VertexSet> {
        self.candidates(ti, ctx).into_iter().next()
    }
}

fn singles(g: &Graph, pool: &VertexSet, keep: impl Fn(VertexId) -> bool) -> Vec<VertexSet> {
    pool.iter().filter(|&u| keep(u)).map(|u| g.set_of([u])).collect()
}

/// `u` has a non-neighbour in `set` other than itself.
fn misses(g: &Graph, u: VertexId, set: &VertexSet) -> bool {
    set.iter().any(|w| w != u && !g.has_edge(u, w))
}

fn non_adjacent_pairs(g: &Graph, pool: &VertexSet) -> Vec<VertexSet> {
    let members = pool.to_vec();
    let mut out = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !g.has_edge(a, b) {
                out.push(g.set_of([a, b]));
            }
        }
    }
    out
}

fn interiors<'c>(g: &Graph, ctx: &'c ChoiceContext) -> Vec<(&'c VertexSet, VertexSet)> {
    ctx.members().map(|m| (m, Block::of(g, m).interior)).collect()
}

/// Distinct members `F1`, `F2` with `u` interior to `F1` and `∂F• ⊆ F2`.
fn split_members(members: &[(&VertexSet, VertexSet)], ctx: &ChoiceContext, u: VertexId) -> bool {
    members.iter().enumerate().any(|(i, (_, int))| {
        int.contains(u)
            && members
                .iter()
                .enumerate()
                .any(|(j, (set, _))| j != i && ctx.f_bullet.border.is_subset(set))
    })
}

/// For both orientations `(a, b)` of the pair, some `a' ∈ border` outside
/// `N[a]` is joined to `b` in `G - N[a]`.
fn mutual_reach(ti: &TollIntervals<'_>, border: &VertexSet, u1: VertexId, u2: VertexId) -> bool {
    let g = ti.graph();
    let reach = |a: VertexId, b: VertexId| {
        border.iter().any(|w| w != a && !g.has_edge(a, w) && ti.joined_avoiding(a, b, w))
    };
    reach(u1, u2) && reach(u2, u1)
}
