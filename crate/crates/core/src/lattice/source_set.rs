use std::fmt;

use crate::error::{PidError, Result};

/// Largest source count a [`SourceSet`] can address.
pub const MAX_SET_SOURCES: usize = 32;

/// A collection of source indices `1..=n`, stored as a bitmask where bit
/// `i - 1` stands for source `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SourceSet {
    n: u8,
    bits: u32,
}

fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl SourceSet {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        if n == 0 || n > MAX_SET_SOURCES {
            return Err(PidError::Capacity {
                n,
                max: MAX_SET_SOURCES,
            });
        }
        if bits & !low_mask(n) != 0 {
            return Err(PidError::Validation(format!(
                "source set bits {bits:#b} exceed source count {n}"
            )));
        }
        Ok(Self { n: n as u8, bits })
    }

    /// Builds a set from 1-based source indices.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &i in indices {
            if i == 0 || i > n {
                return Err(PidError::Validation(format!("source index {i} outside 1..={n}")));
            }
            bits |= 1 << (i - 1);
        }
        Self::new(n, bits)
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u32) -> Self {
        debug_assert!(bits & !low_mask(n) == 0);
        Self { n: n as u8, bits }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, low_mask(n))
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == low_mask(self.n())
    }

    pub fn contains(self, index: usize) -> bool {
        index >= 1 && index <= self.n() && self.bits & (1 << (index - 1)) != 0
    }

    pub fn is_subset_of(self, other: SourceSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(self, other: SourceSet) -> SourceSet {
        Self::from_bits_unchecked(self.n(), self.bits | other.bits)
    }

    pub fn complement(self) -> SourceSet {
        Self::from_bits_unchecked(self.n(), !self.bits & low_mask(self.n()))
    }

    /// 1-based indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..32).filter(move |i| bits & (1 << i) != 0).map(|i| i + 1)
    }

    /// Canonical key: cardinality first, then the numeric bitmask.
    pub(crate) fn canonical_key(self) -> (u32, u32) {
        (self.bits.count_ones(), self.bits)
    }
}

impl fmt::Display for SourceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Every subset of `[n]` in canonical order (cardinality, then bitmask).
pub fn all_subsets(n: usize) -> Vec<SourceSet> {
    let mut sets: Vec<SourceSet> = (0..(1u32 << n)).map(|b| SourceSet::from_bits_unchecked(n, b)).collect();
    sets.sort_by_key(|s| s.canonical_key());
    sets
}
