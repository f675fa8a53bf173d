use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// A subset of the carrier `{0, .., n-1}` of a finite semigroup, stored as a
/// bitmask. The ambient order travels with the set so that complements and
/// full-set checks are unambiguous.
///
/// Orders up to 32 are supported; everything in this crate stays far below
/// that (subset scans cap at 20, enumeration at 6).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    bits: u32,
    order: usize,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        assert!(order <= 32, "ElementSet supports ambient order up to 32");
        ElementSet { bits: 0, order }
    }

    pub fn full(order: usize) -> Self {
        assert!(order <= 32);
        let bits = if order == 32 {
            u32::MAX
        } else {
            (1u32 << order) - 1
        };
        ElementSet { bits, order }
    }

    pub fn singleton(order: usize, x: usize) -> Self {
        let mut s = Self::empty(order);
        s.insert(x);
        s
    }

    pub fn from_bits(order: usize, bits: u32) -> Self {
        assert!(order <= 32);
        debug_assert_eq!(bits & !Self::full(order).bits, 0);
        ElementSet { bits, order }
    }

    pub fn from_elements(order: usize, elements: &[usize]) -> Self {
        let mut s = Self::empty(order);
        for &x in elements {
            s.insert(x);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.order && self.bits & (1 << x) != 0
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.order, "element {x} outside ambient order {}", self.order);
        self.bits |= 1 << x;
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        ElementSet {
            bits: self.bits | other.bits,
            order: self.order,
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        ElementSet {
            bits: self.bits & other.bits,
            order: self.order,
        }
    }

    pub fn complement(self) -> Self {
        ElementSet {
            bits: Self::full(self.order).bits & !self.bits,
            order: self.order,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        debug_assert_eq!(self.order, other.order);
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &Self) -> bool {
        debug_assert_eq!(self.order, other.order);
        self.bits & other.bits != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.order).filter(move |&x| bits & (1 << x) != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Least element, if any. Sets are over `0..order` so this is total on
    /// nonempty sets. Named to stay clear of `Ord::min`.
    pub fn least(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Serializes as a sorted array of element ids; the ambient order is carried
/// by the surrounding document.
impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for x in self.iter() {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}
