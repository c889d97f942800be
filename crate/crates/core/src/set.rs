use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

/// A subset of the elements `0..universe` of a finite carrier.
///
/// Sets compare lexicographically by their sorted member lists, so `{0, 5} < {1, 2}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElementSet { bits }
    }

    pub fn singleton(universe: usize, element: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(element);
        set
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(universe: usize, elements: I) -> Self {
        let mut set = Self::empty(universe);
        for e in elements {
            set.insert(e);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.bits.contains(element)
    }

    /// Inserts `element`; returns true if it was not already present.
    pub fn insert(&mut self, element: usize) -> bool {
        !self.bits.put(element)
    }

    pub fn remove(&mut self, element: usize) {
        self.bits.set(element, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSet { bits }
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSet { bits }
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ElementSet { bits }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// True if the set is exactly `{element}`.
    pub fn is_singleton_of(&self, element: usize) -> bool {
        self.len() == 1 && self.contains(element)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then_with(|| self.universe().cmp(&other.universe()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
