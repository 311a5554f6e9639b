//! Fixed-width membership vectors over the indices of one universe.

use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

/// A subset of a finite universe, stored as one bit per element index.
///
/// The width is fixed at construction and equals the size of the universe the
/// set was drawn from. Binary operations between sets of different widths are
/// a logic error and panic; the fallible entry points in [`crate::approx`] and
/// [`crate::softset`] check universes before reaching this layer.
#[derive(Clone, PartialEq, Eq)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(width: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(width),
        }
    }

    pub fn full(width: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(width);
        bits.insert_range(..);
        ElementSet { bits }
    }

    /// Builds a set from element indices. Indices must be `< width`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut s = Self::empty(width);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Width of the membership vector, i.e. `|X|`.
    #[inline]
    pub fn width(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width(), "index {i} outside width {}", self.width());
        self.bits.insert(i);
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// True when every element of the universe is a member.
    pub fn is_full(&self) -> bool {
        self.len() == self.width()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    fn check_width(&self, other: &Self) {
        assert_eq!(
            self.width(),
            other.width(),
            "element sets from different universes"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_width(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSet { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_width(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSet { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_width(other);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ElementSet { bits }
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ElementSet { bits }
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_width(other);
        self.bits.union_with(&other.bits);
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_width(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_width(other);
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Smallest member index, if any.
    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }
}

impl Hash for ElementSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.width().hash(state);
        self.bits.as_slice().hash(state);
    }
}

// Ordered by width, then lexicographically by member indices. Used only to
// give families of sets a deterministic order.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.width()
            .cmp(&other.width())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
