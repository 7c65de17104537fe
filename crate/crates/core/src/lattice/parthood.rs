use std::fmt;

use super::source_set::SourceSet;
use super::{check_n, table_mask};
use crate::error::{PidError, Result};

/// A monotone Boolean function on the subsets of `[n]` with `f(∅) = 0` and
/// `f([n]) = 1`. Bit `b` of the table holds `f` at the subset with bitmask `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParthoodDistribution {
    n: u8,
    table: u32,
}

impl ParthoodDistribution {
    pub fn from_table(n: usize, table: u32) -> Result<Self> {
        check_n(n)?;
        if table & !table_mask(n) != 0 {
            return Err(PidError::InvalidParthood(format!(
                "truth table {table:#x} has bits beyond 2^{n} subsets"
            )));
        }
        if table & 1 != 0 {
            return Err(PidError::InvalidParthood("f(∅) must be 0".into()));
        }
        let full = (1u32 << n) - 1;
        if table & (1 << full) == 0 {
            return Err(PidError::InvalidParthood("f([n]) must be 1".into()));
        }
        if !is_monotone(n, table) {
            return Err(PidError::InvalidParthood("f is not monotone".into()));
        }
        Ok(Self { n: n as u8, table })
    }

    /// `values[b]` is `f` at the subset with bitmask `b`.
    pub fn from_values(n: usize, values: &[bool]) -> Result<Self> {
        check_n(n)?;
        if values.len() != 1 << n {
            return Err(PidError::InvalidParthood(format!(
                "expected {} values, got {}",
                1 << n,
                values.len()
            )));
        }
        let table = values
            .iter()
            .enumerate()
            .fold(0u32, |t, (b, &v)| if v { t | 1 << b } else { t });
        Self::from_table(n, table)
    }

    pub(crate) fn from_table_unchecked(n: usize, table: u32) -> Self {
        Self { n: n as u8, table }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Truth table of the subsets with `f = 1`.
    pub fn table(&self) -> u32 {
        self.table
    }

    pub fn value(&self, set: SourceSet) -> bool {
        self.table & (1 << set.bits()) != 0
    }

    pub fn value_at_bits(&self, bits: u32) -> bool {
        self.table & (1 << bits) != 0
    }

    pub fn values(&self) -> Vec<bool> {
        (0..(1u32 << self.n)).map(|b| self.value_at_bits(b)).collect()
    }

    /// `self ⊑ other`: wherever `other` is 1, `self` is 1 too.
    pub fn below(&self, other: &ParthoodDistribution) -> bool {
        other.table & !self.table == 0
    }
}

fn is_monotone(n: usize, table: u32) -> bool {
    // Adding one source at a time suffices: f(b) = 1 implies f(b ∪ {i}) = 1.
    (0..(1u32 << n)).all(|b| table & (1 << b) == 0 || (0..n).all(|i| table & (1 << (b | 1 << i)) != 0))
}

impl fmt::Display for ParthoodDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::antichain_from_f(self))
    }
}
