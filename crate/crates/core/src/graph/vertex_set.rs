use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use super::VertexId;

/// A set of vertices of a graph with a fixed capacity (the graph order).
///
/// Iteration is always ascending. Sets compare lexicographically by their
/// ascending element sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet { bits: FixedBitSet::with_capacity(capacity) }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_vertices<I: IntoIterator<Item = VertexId>>(capacity: usize, vertices: I) -> Self {
        let mut set = VertexSet::new(capacity);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn singleton(capacity: usize, v: VertexId) -> Self {
        Self::from_vertices(capacity, [v])
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.bits.contains(v)
    }

    /// Inserts `v`, returning true if it was not present.
    ///
    /// Panics if `v` is not below the capacity.
    pub fn insert(&mut self, v: VertexId) -> bool {
        assert!(v < self.bits.len(), "vertex {v} exceeds set capacity {}", self.bits.len());
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        if v < self.bits.len() && self.bits.contains(v) {
            self.bits.set(v, false);
            true
        } else {
            false
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.bits.ones()
    }

    pub fn first(&self) -> Option<VertexId> {
        self.bits.ones().next()
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::full(self.capacity());
        out.difference_with(self);
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// Size of the intersection without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(8, [1, 3, 5]);
        let b = VertexSet::from_vertices(8, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 5]);
        assert_eq!(b.complement().to_vec(), vec![0, 1, 2, 5, 6, 7]);
        assert!(VertexSet::from_vertices(8, [3]).is_subset(&a));
        assert!(!a.is_disjoint(&b));
    }

    #[test]
    fn lexicographic_order() {
        let a = VertexSet::from_vertices(6, [0, 4]);
        let b = VertexSet::from_vertices(6, [1, 2]);
        let c = VertexSet::from_vertices(6, [0, 4, 5]);
        assert!(a < b);
        assert!(a < c);
        assert!(VertexSet::new(6) < a);
    }

    #[test]
    fn insert_reports_novelty() {
        let mut s = VertexSet::new(4);
        assert!(s.insert(2));
        assert!(!s.insert(2));
        assert!(s.remove(2));
        assert!(!s.remove(2));
        assert!(s.is_empty());
    }
}
