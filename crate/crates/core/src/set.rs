//! Dense index sets over a fixed element universe.
//!
//! Ideals, submodules, and multiplicatively closed subsets are all subsets of
//! a structure's canonical element list. Representing them as bit sets keeps
//! the exhaustive predicate scans cheap. The canonical ordering of sets is by
//! cardinality first, then lexicographically on ascending indices, so that
//! enumerations report smallest witnesses first.

use std::cmp::Ordering;

const BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElemSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            universe,
            blocks: vec![0; universe.div_ceil(BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for i in 0..universe {
            set.insert(i);
        }
        set
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.universe);
        self.blocks[i / BITS] |= 1 << (i % BITS);
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.universe);
        self.blocks[i / BITS] >> (i % BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(|&i| self.contains(i))
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        debug_assert_eq!(self.universe, other.universe);
        ElemSet {
            universe: self.universe,
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &ElemSet) -> bool {
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    /// Least member of the intersection, if any.
    pub fn first_common(&self, other: &ElemSet) -> Option<usize> {
        self.iter().find(|&i| other.contains(i))
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = ElemSet::empty(70);
        a.insert(0);
        a.insert(69);
        assert!(a.contains(0) && a.contains(69) && !a.contains(1));
        assert_eq!(a.len(), 2);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 69]);

        let b = ElemSet::from_indices(70, [0, 1, 69]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection(&b), a);
        assert_eq!(a.first_common(&b), Some(0));
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let small = ElemSet::from_indices(8, [3]);
        let early = ElemSet::from_indices(8, [0, 5]);
        let late = ElemSet::from_indices(8, [1, 2]);
        assert!(small < early);
        assert!(early < late);
    }
}
