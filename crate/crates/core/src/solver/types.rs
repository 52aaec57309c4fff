use std::fmt;

use crate::atoms::AtomDecomposition;
use crate::convexity::Block;
use crate::graph::VertexSet;

/// Classification of a connected t-concave set `C` by how it meets `N(C)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConcaveType {
    /// `(C, N(C))` is not complete.
    Type1,
    /// `(C, N(C))` is complete and `C` is not a clique.
    Type2,
    /// `C ∪ N(C)` is a clique.
    Type3,
}

impl ConcaveType {
    pub fn number(self) -> u8 {
        match self {
            ConcaveType::Type1 => 1,
            ConcaveType::Type2 => 2,
            ConcaveType::Type3 => 3,
        }
    }

    /// Exact granularity of a block of this type with the given interior.
    pub fn granularity(self, interior: &VertexSet) -> usize {
        match self {
            ConcaveType::Type1 => 1,
            ConcaveType::Type2 => 2,
            ConcaveType::Type3 => interior.len(),
        }
    }
}

impl fmt::Display for ConcaveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type {}", self.number())
    }
}

/// The eight vertex-selection rules applied when a t-concave block forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Choice {
    /// 1: an interior vertex with a non-neighbour on the border.
    BorderNonNeighbor,
    /// 2: like 3, and the vertex also misses a vertex of `∂F°`.
    BorderNonNeighborSplitBoth,
    /// 3: an interior vertex with a non-neighbour on the border, interior to
    /// one merged member while another merged member holds the border.
    BorderNonNeighborSplit,
    /// 4: two non-adjacent interior vertices.
    NonAdjacentPair,
    /// 5: two non-adjacent vertices interior to one merged member, each
    /// reaching a non-neighbour in `∂F°` around the other's neighbourhood.
    PairInOneMember,
    /// 6: as 5 with the two vertices interior to different members.
    PairAcrossMembers,
    /// 7: one vertex outside the concave member with a non-neighbour in `∂F°`.
    SecondMissingBorder,
    /// 8: one vertex interior to any member other than the concave one.
    SecondAnywhere,
}

impl Choice {
    pub const ALL: [Choice; 8] = [
        Choice::BorderNonNeighbor,
        Choice::BorderNonNeighborSplitBoth,
        Choice::BorderNonNeighborSplit,
        Choice::NonAdjacentPair,
        Choice::PairInOneMember,
        Choice::PairAcrossMembers,
        Choice::SecondMissingBorder,
        Choice::SecondAnywhere,
    ];

    pub fn number(self) -> u8 {
        Choice::ALL.iter().position(|&c| c == self).expect("listed") as u8 + 1
    }

    pub fn from_number(k: u8) -> Option<Choice> {
        Choice::ALL.get((k as usize).checked_sub(1)?).copied()
    }
}

/// Everything a choice needs to know about the block being formed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceContext {
    /// The non-concave member whose border triggered the merge; `None` for
    /// blocks taken straight from an extremal atom.
    pub f_circ: Option<Block>,
    /// Merged members taken from the non-extremal family.
    pub m_prime: Vec<VertexSet>,
    /// Merged members taken from the extremal family (contains `F°`).
    pub f_prime: Vec<VertexSet>,
    /// The block itself.
    pub f_bullet: Block,
    pub kind: ConcaveType,
    /// Members of `f_prime` whose interior was already t-concave.
    pub k: usize,
    /// The t-concave member when `k = 1`.
    pub concave_member: Option<VertexSet>,
}

impl ChoiceContext {
    /// A block standing on its own, as in the initial pass over extremal atoms.
    pub fn standalone(f_bullet: Block, kind: ConcaveType) -> Self {
        ChoiceContext {
            f_circ: None,
            m_prime: Vec::new(),
            f_prime: Vec::new(),
            f_bullet,
            kind,
            k: 0,
            concave_member: None,
        }
    }

    /// `m_prime` followed by `f_prime`.
    pub fn members(&self) -> impl Iterator<Item = &VertexSet> + '_ {
        self.m_prime.iter().chain(&self.f_prime)
    }
}

/// How the vertices of one characteristic block were selected. Blocks that
/// absorb earlier t-concave blocks keep those selections in `inherited`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    pub choice: Option<Choice>,
    pub context: Option<ChoiceContext>,
    /// Vertices added to the hull set at this step.
    pub added: VertexSet,
    pub inherited: Vec<Selection>,
}

impl Selection {
    /// Every vertex this selection and its ancestors put into the hull set.
    pub fn chosen(&self) -> VertexSet {
        let mut out = self.added.clone();
        for s in &self.inherited {
            out.union_with(&s.chosen());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicBlock {
    pub interior: VertexSet,
    pub kind: ConcaveType,
    pub granularity: usize,
    /// Hull-set vertices inside `interior`.
    pub chosen: VertexSet,
    pub selection: Selection,
}

pub type CharacteristicFamily = Vec<CharacteristicBlock>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolvePath {
    /// The whole vertex set is a clique.
    Complete,
    /// No clique separator: any non-adjacent pair.
    Prime,
    /// Atom decomposition followed by the merge loop.
    Decomposition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    /// Initial pass over extremal atoms.
    Initial,
    /// One iteration of the merge loop.
    Merge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRecord {
    pub phase: Phase,
    /// 0 for the initial pass, then 1, 2, ... per merge.
    pub iteration: usize,
    pub f_circ: Option<VertexSet>,
    pub f_prime: Vec<VertexSet>,
    pub m_prime: Vec<VertexSet>,
    pub f_bullet: VertexSet,
    /// `None` when the interior of `f_bullet` is not t-concave.
    pub kind: Option<ConcaveType>,
    pub k: Option<usize>,
    pub choice: Option<Choice>,
    pub chosen: VertexSet,
    pub note: Option<String>,
}

/// Counters for the invariant checks performed during a run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckCounts {
    pub family_state: usize,
    pub merge_bounds: usize,
    pub choice_feasibility: usize,
    pub concave_members: usize,
    pub non_extremal_atoms: usize,
}

#[derive(Clone, Debug)]
pub struct HullResult {
    pub hull_set: VertexSet,
    pub hull_number: usize,
    pub path: SolvePath,
    pub decomposition: Option<AtomDecomposition>,
    /// Final extremal-derived family.
    pub final_f: Vec<VertexSet>,
    /// Final family of untouched non-extremal atoms.
    pub final_m: Vec<VertexSet>,
    pub family: CharacteristicFamily,
    pub extreme: VertexSet,
    pub trace: Vec<TraceRecord>,
    /// Anomalies that did not abort the run.
    pub diagnostics: Vec<String>,
    pub checks: CheckCounts,
}

impl HullResult {
    pub fn merge_iterations(&self) -> usize {
        self.trace.iter().filter(|r| r.phase == Phase::Merge).count()
    }
}
