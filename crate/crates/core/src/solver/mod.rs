//! Minimum toll hull sets in polynomial time.
//!
//! Complete and prime graphs are settled directly. Otherwise the extremal
//! atoms seed a family `𝓕` and the remaining atoms a family `𝓜`. Each member
//! of `𝓕` with a t-concave interior contributes vertices according to the
//! type of that interior. Members whose interior is not t-concave are merged
//! with every member containing their border until no such merge applies;
//! whenever the merged block is t-concave, one of the selection rules picks
//! the vertices it contributes. The t-concave interiors left in `𝓕` form a
//! hull characteristic family whose granularities add up to the hull number.

mod choices;
mod types;

pub use types::{
    CharacteristicBlock, CharacteristicFamily, CheckCounts, Choice, ChoiceContext, ConcaveType, HullResult,
    Phase, Selection, SolvePath, TraceRecord,
};

use crate::atoms::atoms;
use crate::convexity::{Block, TollIntervals};
use crate::error::{Error, Result};
use crate::graph::{components, is_clique, is_connected_set, Graph, VertexSet};

/// Type of a connected t-concave set, or `None` when `c` fits none of the
/// three cases (impossible for connected t-concave sets).
pub(crate) fn type_of(g: &Graph, c: &VertexSet) -> Option<ConcaveType> {
    let nb = g.set_neighbors(c);
    if is_clique(g, &c.union(&nb)) {
        return Some(ConcaveType::Type3);
    }
    let complete = c.iter().all(|v| nb.is_subset(g.adj(v)));
    match (complete, is_clique(g, c)) {
        (false, _) => Some(ConcaveType::Type1),
        (true, false) => Some(ConcaveType::Type2),
        (true, true) => None,
    }
}

/// A type 1 selection carried into a merged block of type `kind` still
/// misses part of `∂F°` and, for type 1, part of the merged border.
pub(crate) fn carried_over_fits(g: &Graph, kind: ConcaveType, chosen: &VertexSet, block: &Block, circ: &Block) -> bool {
    let misses = |u: usize, set: &VertexSet| set.iter().any(|w| w != u && !g.has_edge(u, w));
    chosen.iter().any(|u| misses(u, &circ.border) && (kind != ConcaveType::Type1 || misses(u, &block.border)))
}

/// Type of a block whose interior is t-concave.
pub fn classify_type(g: &Graph, b: &Block) -> Result<ConcaveType> {
    if b.interior.is_empty() {
        return Err(Error::Precondition("block interior is empty".into()));
    }
    if !TollIntervals::new(g).is_concave(&b.interior) {
        return Err(Error::Precondition("block interior is not t-concave".into()));
    }
    type_of(g, &b.interior)
        .ok_or_else(|| Error::Precondition("t-concave interior fits no type (its neighbourhood is not a clique)".into()))
}

pub fn characteristic_family(result: &HullResult) -> &CharacteristicFamily {
    &result.family
}

/// Union of the type-3 blocks of the characteristic family.
pub fn extreme_vertices_via_family(result: &HullResult) -> VertexSet {
    let mut out = VertexSet::new(result.hull_set.capacity());
    for b in result.family.iter().filter(|b| b.kind == ConcaveType::Type3) {
        out.union_with(&b.interior);
    }
    out
}

/// Minimum toll hull set of a connected graph.
pub fn solve(g: &Graph) -> Result<HullResult> {
    g.require_connected()?;
    let ti = TollIntervals::new(g);
    if g.is_complete() {
        let all = g.all();
        let selection = Selection { choice: None, context: None, added: all.clone(), inherited: Vec::new() };
        return Ok(direct_result(g, SolvePath::Complete, ConcaveType::Type3, selection, None));
    }
    let decomposition = atoms(g)?;
    if decomposition.is_prime() {
        let ctx = ChoiceContext::standalone(Block::of(g, &g.all()), ConcaveType::Type2);
        let pair = Choice::NonAdjacentPair
            .select(&ti, &ctx)
            .ok_or_else(|| Error::Invariant("prime non-complete graph without a non-adjacent pair".into()))?;
        let selection =
            Selection { choice: Some(Choice::NonAdjacentPair), context: Some(ctx), added: pair, inherited: Vec::new() };
        return Ok(direct_result(g, SolvePath::Prime, ConcaveType::Type2, selection, Some(decomposition)));
    }
    let mut solver = Solver::new(g, &ti);
    for atom in decomposition.non_extremal_atoms() {
        solver.checks.non_extremal_atoms += 1;
        if components(g, &atom.vertices).len() < 2 {
            return Err(Error::Invariant(format!("non-extremal atom {:?} does not disconnect the graph", atom.vertices)));
        }
    }
    let extremal: Vec<VertexSet> = decomposition.extremal_atoms().map(|a| a.vertices.clone()).collect();
    let others: Vec<VertexSet> = decomposition.non_extremal_atoms().map(|a| a.vertices.clone()).collect();
    solver.initial_pass(extremal, others)?;
    solver.merge_loop()?;
    solver.finish(decomposition)
}

fn direct_result(
    g: &Graph,
    path: SolvePath,
    kind: ConcaveType,
    selection: Selection,
    decomposition: Option<crate::atoms::AtomDecomposition>,
) -> HullResult {
    let interior = g.all();
    let hull_set = selection.chosen();
    let block = CharacteristicBlock {
        granularity: kind.granularity(&interior),
        interior: interior.clone(),
        kind,
        chosen: hull_set.clone(),
        selection,
    };
    let extreme = if kind == ConcaveType::Type3 { interior.clone() } else { g.empty_set() };
    HullResult {
        hull_number: hull_set.len(),
        hull_set,
        path,
        decomposition,
        final_f: vec![interior],
        final_m: Vec::new(),
        family: vec![block],
        extreme,
        trace: Vec::new(),
        diagnostics: Vec::new(),
        checks: CheckCounts::default(),
    }
}

/// A member of `𝓕`.
struct Member {
    block: Block,
    /// Type of the interior when t-concave.
    kind: Option<ConcaveType>,
    selection: Option<Selection>,
}

struct Solver<'a, 'g> {
    g: &'g Graph,
    ti: &'a TollIntervals<'g>,
    f: Vec<Member>,
    m: Vec<VertexSet>,
    s: VertexSet,
    trace: Vec<TraceRecord>,
    diagnostics: Vec<String>,
    checks: CheckCounts,
}

impl<'a, 'g> Solver<'a, 'g> {
    fn new(g: &'g Graph, ti: &'a TollIntervals<'g>) -> Self {
        Solver {
            g,
            ti,
            f: Vec::new(),
            m: Vec::new(),
            s: g.empty_set(),
            trace: Vec::new(),
            diagnostics: Vec::new(),
            checks: CheckCounts::default(),
        }
    }

    /// Type of the interior of `block` if it is t-concave. Uses the fast
    /// test when the border is a clique and the interior is connected.
    fn concave_type(&self, block: &Block) -> Result<Option<ConcaveType>> {
        if block.interior.is_empty() {
            return Err(Error::Invariant(format!("member {:?} has an empty interior", block.set)));
        }
        let concave = if is_clique(self.g, &block.border) && is_connected_set(self.g, &block.interior) {
            self.ti.fast_concavity(block)?
        } else {
            self.ti.is_concave(&block.interior)
        };
        if !concave {
            return Ok(None);
        }
        type_of(self.g, &block.interior)
            .map(Some)
            .ok_or_else(|| Error::Invariant(format!("t-concave interior {:?} fits no type", block.interior)))
    }

    fn required(&mut self, choice: Choice, ctx: &ChoiceContext) -> Result<VertexSet> {
        self.checks.choice_feasibility += 1;
        choice.select(self.ti, ctx).ok_or_else(|| {
            Error::Invariant(format!("choice {} found no candidate in {:?}", choice.number(), ctx.f_bullet.set))
        })
    }

    fn initial_pass(&mut self, extremal: Vec<VertexSet>, others: Vec<VertexSet>) -> Result<()> {
        self.m = others;
        for set in extremal {
            let block = Block::of(self.g, &set);
            let kind = self.concave_type(&block)?;
            let mut record = TraceRecord {
                phase: Phase::Initial,
                iteration: 0,
                f_circ: None,
                f_prime: Vec::new(),
                m_prime: Vec::new(),
                f_bullet: set.clone(),
                kind,
                k: None,
                choice: None,
                chosen: self.g.empty_set(),
                note: None,
            };
            let selection = match kind {
                None => None,
                Some(ConcaveType::Type3) => Some(Selection {
                    choice: None,
                    context: None,
                    added: block.interior.clone(),
                    inherited: Vec::new(),
                }),
                Some(t) => {
                    let choice = if t == ConcaveType::Type1 { Choice::BorderNonNeighbor } else { Choice::NonAdjacentPair };
                    let ctx = ChoiceContext::standalone(block.clone(), t);
                    let added = self.required(choice, &ctx)?;
                    record.choice = Some(choice);
                    Some(Selection { choice: Some(choice), context: Some(ctx), added, inherited: Vec::new() })
                }
            };
            if let Some(sel) = &selection {
                self.s.union_with(&sel.added);
                record.chosen = sel.added.clone();
            }
            self.trace.push(record);
            self.f.push(Member { block, kind, selection });
        }
        Ok(())
    }

    /// The next non-concave member whose border lies in another member,
    /// smallest first vertex first.
    fn next_f_circ(&self) -> Option<usize> {
        (0..self.f.len())
            .filter(|&i| self.f[i].kind.is_none())
            .filter(|&i| {
                let border = &self.f[i].block.border;
                self.m.iter().any(|set| border.is_subset(set))
                    || self.f.iter().enumerate().any(|(j, o)| j != i && border.is_subset(&o.block.set))
            })
            .min_by(|&a, &b| {
                let (x, y) = (&self.f[a].block.set, &self.f[b].block.set);
                (x.first(), x).cmp(&(y.first(), y))
            })
    }

    fn merge_loop(&mut self) -> Result<()> {
        let mut iteration = 0;
        self.check_family_state()?;
        while let Some(pick) = self.next_f_circ() {
            iteration += 1;
            let circ = self.f[pick].block.clone();
            let border = &circ.border;

            let (m_prime, m_rest): (Vec<VertexSet>, Vec<VertexSet>) =
                std::mem::take(&mut self.m).into_iter().partition(|set| border.is_subset(set));
            self.m = m_rest;
            let (f_prime, f_rest): (Vec<Member>, Vec<Member>) =
                std::mem::take(&mut self.f).into_iter().partition(|mem| border.is_subset(&mem.block.set));
            self.f = f_rest;

            self.checks.merge_bounds += 1;
            if m_prime.len() + f_prime.len() < 2 {
                return Err(Error::Invariant("merge step absorbed fewer than two members".into()));
            }

            let mut union = self.g.empty_set();
            for set in m_prime.iter().chain(f_prime.iter().map(|mem| &mem.block.set)) {
                union.union_with(set);
            }
            let bullet = Block::of(self.g, &union);
            let kind = self.concave_type(&bullet)?;
            let concave: Vec<&Member> = f_prime.iter().filter(|mem| mem.kind.is_some()).collect();
            let k = concave.len();

            let mut record = TraceRecord {
                phase: Phase::Merge,
                iteration,
                f_circ: Some(circ.set.clone()),
                f_prime: f_prime.iter().map(|mem| mem.block.set.clone()).collect(),
                m_prime: m_prime.clone(),
                f_bullet: union.clone(),
                kind,
                k: kind.map(|_| k),
                choice: None,
                chosen: self.g.empty_set(),
                note: None,
            };

            let selection = match kind {
                None => None,
                Some(i) => {
                    if k > 2 || (i == ConcaveType::Type1 && k > 1) {
                        return Err(Error::Invariant(format!("merged block of {i} absorbed {k} t-concave members")));
                    }
                    if let Some(bad) = concave.iter().find(|mem| mem.kind != Some(ConcaveType::Type1)) {
                        return Err(Error::Invariant(format!(
                            "absorbed t-concave member {:?} is not of type 1",
                            bad.block.set
                        )));
                    }
                    let mut inherited: Vec<Selection> = concave.iter().filter_map(|mem| mem.selection.clone()).collect();
                    if inherited.len() != k {
                        return Err(Error::Invariant("absorbed t-concave member without a selection".into()));
                    }
                    let mut k_used = k;
                    let mut dropped = false;
                    if k == 1 && !self.inherited_fits(i, &inherited, &bullet, &circ) {
                        // the carried-over vertex cannot reach past the new border
                        let stale = inherited.iter().fold(self.g.empty_set(), |acc, s| acc.union(&s.chosen()));
                        self.s.difference_with(&stale);
                        inherited.clear();
                        record.note = Some(format!("dropped {stale:?} carried over from {:?}", concave[0].block.set));
                        k_used = 0;
                        dropped = true;
                    }
                    let ctx = ChoiceContext {
                        f_circ: Some(circ.clone()),
                        m_prime: m_prime.clone(),
                        f_prime: f_prime.iter().map(|mem| mem.block.set.clone()).collect(),
                        f_bullet: bullet.clone(),
                        kind: i,
                        k: k_used,
                        concave_member: if k_used == 1 { Some(concave[0].block.set.clone()) } else { None },
                    };
                    let rules: &[Choice] = match (i, k_used) {
                        (ConcaveType::Type1, 0) => &[Choice::BorderNonNeighborSplitBoth, Choice::BorderNonNeighborSplit],
                        (ConcaveType::Type2, 0) => &[Choice::PairInOneMember, Choice::PairAcrossMembers],
                        (ConcaveType::Type2, 1) => &[Choice::SecondMissingBorder, Choice::SecondAnywhere],
                        _ => &[],
                    };
                    let mut picked = rules.iter().find_map(|&c| c.select(self.ti, &ctx).map(|sel| (c, ctx.clone(), sel)));
                    if picked.is_none() && dropped {
                        let standalone = ChoiceContext::standalone(bullet.clone(), i);
                        let c = if i == ConcaveType::Type1 { Choice::BorderNonNeighbor } else { Choice::NonAdjacentPair };
                        picked = c.select(self.ti, &standalone).map(|sel| (c, standalone, sel));
                    }
                    if !rules.is_empty() {
                        self.checks.choice_feasibility += 1;
                        if picked.is_none() {
                            return Err(Error::Invariant(format!("no selection rule applies to {union:?}")));
                        }
                    }
                    let selection = match picked {
                        Some((c, used, added)) => Selection { choice: Some(c), context: Some(used), added, inherited },
                        None if i == ConcaveType::Type3 => {
                            let note = format!("merged block {union:?} has a type 3 interior; taking all of it");
                            debug_assert!(false, "{note}");
                            self.diagnostics.push(note.clone());
                            record.note = Some(note);
                            Selection { choice: None, context: Some(ctx), added: bullet.interior.clone(), inherited }
                        }
                        None => Selection { choice: None, context: Some(ctx), added: self.g.empty_set(), inherited },
                    };
                    record.choice = selection.choice;
                    record.chosen = selection.added.clone();
                    self.s.union_with(&selection.added);
                    Some(selection)
                }
            };
            self.trace.push(record);
            self.f.push(Member { block: bullet, kind, selection });
            self.check_family_state()?;
        }
        Ok(())
    }

    fn inherited_fits(&self, kind: ConcaveType, inherited: &[Selection], block: &Block, circ: &Block) -> bool {
        inherited.iter().any(|s| carried_over_fits(self.g, kind, &s.chosen(), block, circ))
    }

    /// Interiors of `𝓕` members are non-empty, interiors across `𝓕 ∪ 𝓜`
    /// are pairwise disjoint and pairwise intersections are cliques.
    fn check_family_state(&mut self) -> Result<()> {
        self.checks.family_state += 1;
        if let Some(mem) = self.f.iter().find(|mem| mem.block.interior.is_empty()) {
            return Err(Error::Invariant(format!("member {:?} has an empty interior", mem.block.set)));
        }
        let blocks: Vec<Block> = self
            .f
            .iter()
            .map(|mem| mem.block.clone())
            .chain(self.m.iter().map(|set| Block::of(self.g, set)))
            .collect();
        for (i, a) in blocks.iter().enumerate() {
            for b in &blocks[i + 1..] {
                if !a.interior.is_disjoint(&b.interior) {
                    return Err(Error::Invariant(format!("interiors of {:?} and {:?} meet", a.set, b.set)));
                }
                if !is_clique(self.g, &a.set.intersection(&b.set)) {
                    return Err(Error::Invariant(format!("{:?} and {:?} meet outside a clique", a.set, b.set)));
                }
            }
        }
        Ok(())
    }

    fn finish(mut self, decomposition: crate::atoms::AtomDecomposition) -> Result<HullResult> {
        let g = self.g;
        let mut family: CharacteristicFamily = Vec::new();
        for mem in self.f.iter().filter(|mem| mem.kind.is_some()) {
            self.checks.concave_members += 1;
            let b = &mem.block;
            if !is_clique(g, &b.border) || !is_connected_set(g, &b.interior) || g.set_neighbors(&b.interior) != b.border {
                return Err(Error::Invariant(format!("t-concave member {:?} has a malformed border", b.set)));
            }
            let kind = mem.kind.expect("filtered");
            let selection = mem.selection.clone().expect("t-concave members carry a selection");
            let chosen = self.s.intersection(&b.interior);
            let granularity = kind.granularity(&b.interior);
            if chosen.len() != granularity || selection.chosen() != chosen {
                return Err(Error::Invariant(format!(
                    "block {:?} holds {} hull vertices for granularity {granularity}",
                    b.interior,
                    chosen.len()
                )));
            }
            family.push(CharacteristicBlock { interior: b.interior.clone(), kind, granularity, chosen, selection });
        }
        family.sort_by(|a, b| (a.interior.first(), &a.interior).cmp(&(b.interior.first(), &b.interior)));
        let covered = family.iter().fold(g.empty_set(), |acc, b| acc.union(&b.interior));
        if !self.s.is_subset(&covered) {
            return Err(Error::Invariant("hull set has vertices outside the characteristic family".into()));
        }
        let mut result = HullResult {
            hull_number: self.s.len(),
            hull_set: self.s,
            path: SolvePath::Decomposition,
            decomposition: Some(decomposition),
            final_f: self.f.iter().map(|mem| mem.block.set.clone()).collect(),
            final_m: self.m,
            family,
            extreme: g.empty_set(),
            trace: self.trace,
            diagnostics: self.diagnostics,
            checks: self.checks,
        };
        result.extreme = extreme_vertices_via_family(&result);
        Ok(result)
    }
}
