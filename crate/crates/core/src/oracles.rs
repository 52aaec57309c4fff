//! Brute-force reference implementations for cross-checking.
//!
//! Nothing here shares code with the polynomial algorithms beyond the graph
//! type itself. Toll intervals come from a search over walk prefixes that
//! applies the tolled-walk definition literally; hulls, hull numbers and
//! atoms come from subset enumeration.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{components_within, is_clique, Graph, VertexId, VertexSet};

/// Largest order accepted by the interval and hull oracles.
pub const HULL_LIMIT: usize = 12;
/// Largest order accepted by the enumeration and atom oracles.
pub const ENUMERATION_LIMIT: usize = 9;

fn guard(g: &Graph, limit: usize) -> Result<()> {
    if g.order() > limit {
        Err(Error::SizeGuard { order: g.order(), limit })
    } else {
        Ok(())
    }
}

/// A tolled `(x, y)`-walk through `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkWitness {
    pub walk: Vec<VertexId>,
    pub x: VertexId,
    pub y: VertexId,
    pub v: VertexId,
}

impl WalkWitness {
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.walk.first() == Some(&self.x)
            && self.walk.last() == Some(&self.y)
            && self.walk.contains(&self.v)
            && is_tolled_walk(g, &self.walk)
    }
}

/// Checks the definition: consecutive vertices adjacent, distinct ends, the
/// first vertex adjacent only to position 2 and the last vertex adjacent
/// only to position `k - 1` (1-based).
pub fn is_tolled_walk(g: &Graph, walk: &[VertexId]) -> bool {
    let k = walk.len();
    if k < 2 || walk[0] == walk[k - 1] {
        return false;
    }
    if walk.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return false;
    }
    let (u, v) = (walk[0], walk[k - 1]);
    walk.iter().enumerate().all(|(i, &w)| {
        let pos = i + 1;
        (!g.has_edge(u, w) || pos == 2) && (!g.has_edge(w, v) || pos == k - 1)
    })
}

/// Default walk-length cap (in edges): `2n + 3`.
pub fn default_walk_cap(n: usize) -> usize {
    2 * n + 3
}

/// Searches for a tolled `(x, y)`-walk of at most `cap` edges through `v`.
///
/// A prefix `w1..wp` can be extended by `w` only if `w` is not adjacent to
/// `x` unless it lands on position 2, and if the prefix's last vertex is
/// adjacent to `y` the walk must end at `y` right away. Which extensions are
/// legal depends only on the last vertex, on whether it sits at position 2,
/// and on whether `v` was seen, so walks are explored once per such state.
pub fn bf_witness_with_cap(
    g: &Graph,
    x: VertexId,
    y: VertexId,
    v: VertexId,
    cap: usize,
) -> Result<Option<WalkWitness>> {
    guard(g, HULL_LIMIT)?;
    for w in [x, y, v] {
        g.check_vertex(w)?;
    }
    if x == y {
        return Err(Error::InvalidArgument("tolled walks need distinct ends".into()));
    }
    let n = g.order();
    // state = (vertex, at position 2, v seen)
    let index = |c: VertexId, second: bool, seen: bool| (c * 2 + second as usize) * 2 + seen as usize;
    let mut parent: Vec<Option<usize>> = vec![None; n * 4];
    let mut depth = vec![usize::MAX; n * 4];
    let start = index(x, false, v == x);
    depth[start] = 0;
    let mut queue = VecDeque::from([start]);
    let decode = |s: usize| (s / 4, (s / 2) % 2 == 1, s % 2 == 1);
    let rebuild = |parent: &[Option<usize>], last: usize| {
        let mut walk = vec![y];
        let mut cur = Some(last);
        while let Some(s) = cur {
            walk.push(decode(s).0);
            cur = parent[s];
        }
        walk.reverse();
        walk
    };
    while let Some(s) = queue.pop_front() {
        let (c, _, seen) = decode(s);
        let d = depth[s];
        if d >= cap {
            continue;
        }
        let pos = d + 2; // position of the appended vertex
        let must_end = c != x && g.has_edge(c, y);
        for w in g.adj(c).iter() {
            if w == y {
                // ends the walk at position pos; x adjacent to y forces pos 2
                if (!g.has_edge(x, y) || pos == 2) && (seen || v == y) {
                    let walk = rebuild(&parent, s);
                    return Ok(Some(WalkWitness { walk, x, y, v }));
                }
                continue;
            }
            if must_end || w == x || (g.has_edge(x, w) && pos != 2) {
                continue;
            }
            let next = index(w, pos == 2, seen || w == v);
            if depth[next] == usize::MAX {
                depth[next] = d + 1;
                parent[next] = Some(s);
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

pub fn bf_witness(g: &Graph, x: VertexId, y: VertexId, v: VertexId) -> Result<Option<WalkWitness>> {
    bf_witness_with_cap(g, x, y, v, default_walk_cap(g.order()))
}

pub fn bf_toll_interval_with_cap(g: &Graph, x: VertexId, y: VertexId, cap: usize) -> Result<VertexSet> {
    let mut out = g.empty_set();
    for v in g.vertices() {
        if bf_witness_with_cap(g, x, y, v, cap)?.is_some() {
            out.insert(v);
        }
    }
    Ok(out)
}

/// `[x, y]` by exhaustive walk search.
pub fn bf_toll_interval(g: &Graph, x: VertexId, y: VertexId) -> Result<VertexSet> {
    bf_toll_interval_with_cap(g, x, y, default_walk_cap(g.order()))
}

/// All pairwise brute-force intervals of one graph.
pub struct BfIntervals {
    n: usize,
    pairs: Vec<VertexSet>,
}

impl BfIntervals {
    pub fn new(g: &Graph) -> Result<Self> {
        guard(g, HULL_LIMIT)?;
        let n = g.order();
        let mut pairs = vec![VertexSet::new(n); n * n];
        for x in 0..n {
            for y in x + 1..n {
                let iv = bf_toll_interval(g, x, y)?;
                pairs[x * n + y] = iv.clone();
                pairs[y * n + x] = iv;
            }
        }
        Ok(BfIntervals { n, pairs })
    }

    pub fn pair(&self, x: VertexId, y: VertexId) -> &VertexSet {
        &self.pairs[x * self.n + y]
    }

    pub fn interval_of_set(&self, s: &VertexSet) -> VertexSet {
        let members = s.to_vec();
        let mut out = s.clone();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                out.union_with(self.pair(x, y));
            }
        }
        out
    }

    /// Iterates `S <- [S]` until nothing changes.
    pub fn hull(&self, s: &VertexSet) -> VertexSet {
        let mut cur = s.clone();
        loop {
            let next = self.interval_of_set(&cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_extreme(&self, v: VertexId) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| x == v || y == v || !self.pair(x, y).contains(v)))
    }

    fn min_sets_by(&self, spans: impl Fn(&VertexSet) -> bool, stop_at_first: bool) -> Vec<VertexSet> {
        let n = self.n;
        for k in 1..=n {
            let found: Vec<VertexSet> =
                subsets_of_size(n, k).filter(|s| spans(s)).take(if stop_at_first { 1 } else { usize::MAX }).collect();
            if !found.is_empty() {
                return found;
            }
        }
        Vec::new()
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = VertexSet::from_vertices(n, idx.iter().copied());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

pub fn bf_hull(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("vertex set must be non-empty".into()));
    }
    Ok(BfIntervals::new(g)?.hull(s))
}

pub fn bf_hull_number(g: &Graph) -> Result<usize> {
    let bf = BfIntervals::new(g)?;
    let all = g.all();
    Ok(bf.min_sets_by(|s| bf.hull(s) == all, true).first().map_or(0, VertexSet::len))
}

/// Every minimum toll hull set, in lexicographic order.
pub fn bf_all_min_hull_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    guard(g, ENUMERATION_LIMIT)?;
    let bf = BfIntervals::new(g)?;
    let all = g.all();
    Ok(bf.min_sets_by(|s| bf.hull(s) == all, false))
}

/// Minimum size of `S` with `[S] = V`.
pub fn bf_toll_number(g: &Graph) -> Result<usize> {
    guard(g, ENUMERATION_LIMIT)?;
    let bf = BfIntervals::new(g)?;
    let all = g.all();
    Ok(bf.min_sets_by(|s| bf.interval_of_set(s) == all, true).first().map_or(0, VertexSet::len))
}

pub fn bf_is_extreme(g: &Graph, v: VertexId) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(BfIntervals::new(g)?.is_extreme(v))
}

/// Connected `w` such that no clique `C ⊊ w` leaves `g[w - C]` disconnected.
fn bf_is_prime_set(g: &Graph, w: &VertexSet, cliques: &[VertexSet]) -> bool {
    if components_within(g, w).len() != 1 {
        return false;
    }
    cliques
        .iter()
        .filter(|c| c.is_subset(w) && *c != w)
        .all(|c| components_within(g, &w.difference(c)).len() <= 1)
}

/// Atoms by checking every vertex subset for primality and maximality.
pub fn bf_atoms(g: &Graph) -> Result<Vec<VertexSet>> {
    guard(g, ENUMERATION_LIMIT)?;
    let n = g.order();
    let subsets: Vec<VertexSet> = (1..=n).flat_map(|k| subsets_of_size(n, k)).collect();
    let cliques: Vec<VertexSet> = subsets.iter().filter(|s| is_clique(g, s)).cloned().collect();
    let prime: Vec<VertexSet> = subsets.into_iter().filter(|w| bf_is_prime_set(g, w, &cliques)).collect();
    let mut maximal: Vec<VertexSet> = prime
        .iter()
        .filter(|w| !prime.iter().any(|o| o != *w && w.is_subset(o)))
        .cloned()
        .collect();
    maximal.sort_by(|a, b| (a.first(), a.len(), a).cmp(&(b.first(), b.len(), b)));
    Ok(maximal)
}
