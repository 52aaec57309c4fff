//! Decomposition by clique minimal separators into atoms (maximal prime
//! subgraphs).
//!
//! MCS-M computes a minimal elimination ordering together with the
//! generators of the minimal separators of the induced minimal
//! triangulation. Walking the ordering from the first eliminated vertex, each
//! generator whose higher neighbourhood in the triangulation is a clique of
//! `G` splits one atom off the remaining graph.

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use crate::convexity::Block;
use crate::error::{Error, Result};
use crate::graph::{components_within, is_clique, Graph, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub vertices: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomDecomposition {
    pub atoms: Vec<Atom>,
    /// `extremal[i]` tells whether `atoms[i]` is extremal. All false when the
    /// graph is prime.
    pub extremal: Vec<bool>,
}

impl AtomDecomposition {
    pub fn is_prime(&self) -> bool {
        self.atoms.len() == 1
    }

    pub fn extremal_atoms(&self) -> impl Iterator<Item = &Atom> + '_ {
        self.atoms.iter().zip(&self.extremal).filter(|(_, &e)| e).map(|(a, _)| a)
    }

    /// Empty for prime graphs, where extremality is undefined.
    pub fn non_extremal_atoms(&self) -> impl Iterator<Item = &Atom> + '_ {
        let skip = self.is_prime();
        self.atoms.iter().zip(&self.extremal).filter(move |(_, &e)| !e && !skip).map(|(a, _)| a)
    }
}

/// Minimal elimination ordering by MCS-M.
struct Elimination {
    /// Vertices in elimination order (first eliminated first).
    order: Vec<VertexId>,
    /// Neighbours in the triangulation eliminated later than the vertex.
    higher: Vec<VertexSet>,
    /// Vertices whose higher neighbourhood is a minimal separator of the
    /// triangulation.
    generators: VertexSet,
}

fn mcs_m(g: &Graph) -> Elimination {
    let n = g.order();
    let mut weight = vec![0i64; n];
    let mut numbered = g.empty_set();
    let mut higher = vec![g.empty_set(); n];
    let mut generators = g.empty_set();
    let mut visit = Vec::with_capacity(n);
    let mut previous: Option<i64> = None;
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|&u| !numbered.contains(u))
            .max_by_key(|&u| (weight[u], Reverse(u)))
            .expect("an unnumbered vertex remains");
        if previous.is_some_and(|s| weight[v] <= s) {
            generators.insert(v);
        }
        previous = Some(weight[v]);
        numbered.insert(v);
        visit.push(v);

        // For each unnumbered y: the least possible maximum weight over the
        // interior of an unnumbered v-y path. Neighbours of v have an empty
        // interior and cost -1.
        let mut cost = vec![i64::MAX; n];
        let mut heap = BinaryHeap::new();
        for y in g.adj(v).iter().filter(|&y| !numbered.contains(y)) {
            cost[y] = -1;
            heap.push(Reverse((-1i64, y)));
        }
        while let Some(Reverse((c, z))) = heap.pop() {
            if c > cost[z] {
                continue;
            }
            let through = c.max(weight[z]);
            for t in g.adj(z).iter().filter(|&t| !numbered.contains(t)) {
                if through < cost[t] {
                    cost[t] = through;
                    heap.push(Reverse((through, t)));
                }
            }
        }
        let reached: Vec<VertexId> =
            g.vertices().filter(|&y| !numbered.contains(y) && cost[y] < weight[y]).collect();
        for y in reached {
            weight[y] += 1;
            higher[y].insert(v);
        }
    }
    visit.reverse();
    Elimination { order: visit, higher, generators }
}

/// The atoms of a connected graph, sorted by smallest vertex, then size,
/// then lexicographically.
pub fn atoms(g: &Graph) -> Result<AtomDecomposition> {
    g.require_connected()?;
    let elim = mcs_m(g);
    let mut remaining = g.all();
    let mut found: Vec<VertexSet> = Vec::new();
    for &x in &elim.order {
        if !elim.generators.contains(x) || !remaining.contains(x) {
            continue;
        }
        let sep = &elim.higher[x];
        if !is_clique(g, sep) {
            continue;
        }
        let rest = remaining.difference(sep);
        let comp = components_within(g, &rest)
            .into_iter()
            .find(|c| c.contains(x))
            .expect("x lies in some component");
        if comp == rest {
            // sep does not separate anything in what is left
            continue;
        }
        found.push(comp.union(sep));
        remaining.difference_with(&comp);
    }
    found.push(remaining);
    found.sort_by(|a, b| (a.first(), a.len(), a).cmp(&(b.first(), b.len(), b)));
    found.dedup();
    let extremal = extremal_flags(&found);
    Ok(AtomDecomposition {
        atoms: found.into_iter().map(|vertices| Atom { vertices }).collect(),
        extremal,
    })
}

fn extremal_flags(atoms: &[VertexSet]) -> Vec<bool> {
    if atoms.len() < 2 {
        return vec![false; atoms.len()];
    }
    (0..atoms.len())
        .map(|f| {
            let meets: Vec<VertexSet> = (0..atoms.len())
                .filter(|&o| o != f)
                .map(|o| atoms[f].intersection(&atoms[o]))
                .collect();
            meets.iter().any(|candidate| meets.iter().all(|m| m.is_subset(candidate)))
        })
        .collect()
}

/// A connected graph is prime when it has no clique separator.
pub fn is_prime(g: &Graph) -> Result<bool> {
    Ok(atoms(g)?.is_prime())
}

/// Atoms `F` for which some other atom `F'` contains `F ∩ F''` for every
/// atom `F'' != F`.
pub fn extremal_atoms(d: &AtomDecomposition) -> Result<Vec<Atom>> {
    if d.atoms.len() < 2 {
        return Err(Error::Precondition("extremal atoms need a reducible graph".into()));
    }
    Ok(d.extremal_atoms().cloned().collect())
}

pub fn block_of(g: &Graph, f: &VertexSet) -> Block {
    Block::of(g, f)
}
