use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of element indices over a fixed carrier `0..universe`.
///
/// Ideals, submodules and scalar sets are all stored this way, so equality of
/// two substructures is bitset equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(FixedBitSet);

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElemSet(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut set = Self::empty(universe);
        for i in items {
            set.insert(i);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, i: usize) -> bool {
        !self.0.put(i)
    }

    pub fn remove(&mut self, i: usize) {
        self.0.set(i, false);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn count(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.universe()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.0.union_with(&other.0);
        out
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.0.intersect_with(&other.0);
        out
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.0.difference_with(&other.0);
        out
    }

    pub fn complement(&self) -> ElemSet {
        let mut out = self.clone();
        out.0.toggle_range(..);
        out
    }

    pub fn first(&self) -> Option<usize> {
        self.0.minimum()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = ElemSet::from_indices(8, [0, 2, 4]);
        let b = ElemSet::from_indices(8, [0, 4, 6]);
        assert_eq!(a.intersection(&b).to_vec(), vec![0, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 2, 4, 6]);
        assert_eq!(a.difference(&b).to_vec(), vec![2]);
        assert_eq!(a.complement().count(), 5);
        assert!(ElemSet::from_indices(8, [4]).is_subset(&a));
        assert!(ElemSet::full(3).is_full());
        assert!(ElemSet::empty(3).is_empty());
    }
}
