use std::cmp::Ordering;
use std::fmt;

use super::source_set::SourceSet;
use super::{check_n, table_mask};
use crate::error::{PidError, Result};

/// Rendering of the antichain with no collections.
pub const EMPTY_ANTICHAIN_STR: &str = "∅-chain";

/// A set of pairwise ⊆-incomparable collections of sources, kept in canonical
/// order (cardinality, then bitmask).
///
/// Families of subsets of `[n]` are also handled as *truth tables*: a `u32`
/// whose bit `b` is set when the subset with bitmask `b` belongs to the
/// family. With `n <= 5` every family fits in one word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Antichain {
    n: u8,
    sets: Vec<SourceSet>,
}

impl Antichain {
    /// Validates and canonicalizes a list of collections.
    pub fn new(n: usize, collections: Vec<SourceSet>) -> Result<Self> {
        check_n(n)?;
        let mut sets = collections;
        for s in &sets {
            if s.n() != n {
                return Err(PidError::InvalidAntichain(format!(
                    "collection {s} belongs to a {}-source system, expected {n}",
                    s.n()
                )));
            }
        }
        sets.sort_by_key(|s| s.canonical_key());
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                if a == b {
                    return Err(PidError::InvalidAntichain(format!("duplicate collection {a}")));
                }
                if a.is_subset_of(*b) || b.is_subset_of(*a) {
                    return Err(PidError::InvalidAntichain(format!(
                        "collections {a} and {b} are comparable"
                    )));
                }
            }
        }
        Ok(Self { n: n as u8, sets })
    }

    pub(crate) fn from_canonical_unchecked(n: usize, sets: Vec<SourceSet>) -> Self {
        Self { n: n as u8, sets }
    }

    /// `{}`: no collections at all.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// `{∅}`: the single empty collection.
    pub fn of_empty_set(n: usize) -> Result<Self> {
        Self::new(n, vec![SourceSet::empty(n)?])
    }

    /// `{[n]}`: the single full collection.
    pub fn of_full_set(n: usize) -> Result<Self> {
        Self::new(n, vec![SourceSet::full(n)?])
    }

    /// `{1}{2}...{n}`.
    pub fn singletons(n: usize) -> Result<Self> {
        let sets = (1..=n)
            .map(|i| SourceSet::from_indices(n, &[i]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, sets)
    }

    /// `{[n]\1}{[n]\2}...{[n]\n}`.
    pub fn co_singletons(n: usize) -> Result<Self> {
        let sets = (1..=n)
            .map(|i| SourceSet::from_indices(n, &[i]).map(SourceSet::complement))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, sets)
    }

    pub fn singleton(set: SourceSet) -> Result<Self> {
        Self::new(set.n(), vec![set])
    }

    /// ⊆-minimal members of an arbitrary family (superset reduction).
    pub fn minimal_of(n: usize, family: &[SourceSet]) -> Result<Self> {
        check_n(n)?;
        let mut table = 0u32;
        for s in family {
            table |= 1 << s.bits();
        }
        Ok(Self::minimal_of_table(n, table))
    }

    /// ⊆-maximal members of an arbitrary family (subset reduction).
    pub fn maximal_of(n: usize, family: &[SourceSet]) -> Result<Self> {
        check_n(n)?;
        let mut table = 0u32;
        for s in family {
            table |= 1 << s.bits();
        }
        Ok(Self::maximal_of_table(n, table))
    }

    pub(crate) fn minimal_of_table(n: usize, table: u32) -> Self {
        let size = 1u32 << n;
        let mut sets = Vec::new();
        for b in 0..size {
            if table & (1 << b) == 0 {
                continue;
            }
            let has_smaller = (0..size).any(|c| c != b && c & !b == 0 && table & (1 << c) != 0);
            if !has_smaller {
                sets.push(SourceSet::from_bits_unchecked(n, b));
            }
        }
        sets.sort_by_key(|s| s.canonical_key());
        Self::from_canonical_unchecked(n, sets)
    }

    pub(crate) fn maximal_of_table(n: usize, table: u32) -> Self {
        let size = 1u32 << n;
        let mut sets = Vec::new();
        for b in 0..size {
            if table & (1 << b) == 0 {
                continue;
            }
            let has_larger = (0..size).any(|c| c != b && b & !c == 0 && table & (1 << c) != 0);
            if !has_larger {
                sets.push(SourceSet::from_bits_unchecked(n, b));
            }
        }
        sets.sort_by_key(|s| s.canonical_key());
        Self::from_canonical_unchecked(n, sets)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn collections(&self) -> &[SourceSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn is_of_empty_set(&self) -> bool {
        self.sets.len() == 1 && self.sets[0].is_empty()
    }

    pub fn is_of_full_set(&self) -> bool {
        self.sets.len() == 1 && self.sets[0].is_full()
    }

    pub fn is_singletons(&self) -> bool {
        self.sets.len() == self.n() && self.sets.iter().all(|s| s.len() == 1)
    }

    /// Union of all collections.
    pub fn union(&self) -> u32 {
        self.sets.iter().fold(0, |acc, s| acc | s.bits())
    }

    /// Truth table of `{b : ∃a∈α, b ⊇ a}`.
    pub fn upset_table(&self) -> u32 {
        upset_table(self.n(), self.sets.iter().map(|s| s.bits()))
    }

    /// Truth table of `{b : ∃a∈α, b ⊆ a}`.
    pub fn downset_table(&self) -> u32 {
        downset_table(self.n(), self.sets.iter().map(|s| s.bits()))
    }

    /// Parses the outer-bracket-omitting form, e.g. `{1,2}{2,3}`, `{}` for
    /// `{∅}` and `∅-chain` for the empty antichain.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        check_n(n)?;
        let text = text.trim();
        if text == EMPTY_ANTICHAIN_STR {
            return Self::empty(n);
        }
        let bad = |msg: &str| PidError::InvalidAntichain(format!("{msg} in `{text}`"));
        let mut sets = Vec::new();
        let mut rest = text;
        if rest.is_empty() {
            return Err(bad("empty string"));
        }
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('{') else {
                return Err(bad("expected `{`"));
            };
            let Some(close) = body.find('}') else {
                return Err(bad("unterminated `{`"));
            };
            let inner = body[..close].trim();
            let mut indices = Vec::new();
            if !inner.is_empty() {
                for tok in inner.split(',') {
                    let i: usize = tok
                        .trim()
                        .parse()
                        .map_err(|_| bad(&format!("bad source index `{}`", tok.trim())))?;
                    indices.push(i);
                }
            }
            let mut dedup = indices.clone();
            dedup.sort_unstable();
            dedup.dedup();
            if dedup.len() != indices.len() {
                return Err(bad("repeated source index"));
            }
            sets.push(SourceSet::from_indices(n, &indices)?);
            rest = body[close + 1..].trim_start();
        }
        Self::new(n, sets)
    }

    fn key(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.sets.iter().map(|s| s.canonical_key())
    }
}

pub(crate) fn upset_table(n: usize, sets: impl Iterator<Item = u32> + Clone) -> u32 {
    let mut table = 0u32;
    for b in 0..(1u32 << n) {
        if sets.clone().any(|a| a & !b == 0) {
            table |= 1 << b;
        }
    }
    table
}

pub(crate) fn downset_table(n: usize, sets: impl Iterator<Item = u32> + Clone) -> u32 {
    let mut table = 0u32;
    for b in 0..(1u32 << n) {
        if sets.clone().any(|a| b & !a == 0) {
            table |= 1 << b;
        }
    }
    table
}

impl Ord for Antichain {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.key().cmp(other.key()))
    }
}

impl PartialOrd for Antichain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sets.is_empty() {
            return f.write_str(EMPTY_ANTICHAIN_STR);
        }
        for s in &self.sets {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

pub(crate) fn complement_table(n: usize, table: u32) -> u32 {
    !table & table_mask(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ss(n: usize, idx: &[usize]) -> SourceSet {
        SourceSet::from_indices(n, idx).unwrap()
    }

    #[test]
    fn canonical_order_and_string() {
        let a = Antichain::new(3, vec![ss(3, &[1, 3]), ss(3, &[2])]).unwrap();
        assert_eq!(a.to_string(), "{2}{1,3}");
        assert_eq!(Antichain::empty(2).unwrap().to_string(), "∅-chain");
        assert_eq!(Antichain::of_empty_set(2).unwrap().to_string(), "{}");
    }

    #[test]
    fn rejects_comparable_and_duplicates() {
        assert!(Antichain::new(2, vec![ss(2, &[1]), ss(2, &[1, 2])]).is_err());
        assert!(Antichain::new(2, vec![ss(2, &[1]), ss(2, &[1])]).is_err());
        assert!(Antichain::new(2, vec![ss(2, &[]), ss(2, &[1])]).is_err());
    }

    #[test]
    fn empty_and_empty_set_are_distinct() {
        let e = Antichain::empty(2).unwrap();
        let z = Antichain::of_empty_set(2).unwrap();
        assert_ne!(e, z);
        assert!(e.is_empty());
        assert!(z.is_of_empty_set());
    }

    #[test]
    fn parse_round_trip() {
        for text in ["{1,2}{2,3}", "{}", "∅-chain", "{1}{2}{3}", "{1,2,3}"] {
            let a = Antichain::parse(3, text).unwrap();
            assert_eq!(a.to_string(), text);
        }
        let a = Antichain::parse(3, " {3, 1} {2} ").unwrap();
        assert_eq!(a.to_string(), "{2}{1,3}");
        assert!(Antichain::parse(3, "{4}").is_err());
        assert!(Antichain::parse(3, "{1").is_err());
        assert!(Antichain::parse(3, "").is_err());
        assert!(Antichain::parse(3, "{1,1}").is_err());
    }

    #[test]
    fn reductions() {
        let fam = [ss(3, &[1]), ss(3, &[1, 2]), ss(3, &[2, 3]), ss(3, &[2])];
        assert_eq!(Antichain::minimal_of(3, &fam).unwrap().to_string(), "{1}{2}");
        assert_eq!(Antichain::maximal_of(3, &fam).unwrap().to_string(), "{1,2}{2,3}");
        assert_eq!(Antichain::co_singletons(3).unwrap().to_string(), "{1,2}{1,3}{2,3}");
    }

    #[test]
    fn tables() {
        let a = Antichain::parse(2, "{1}").unwrap();
        // subsets 0b00, 0b01, 0b10, 0b11
        assert_eq!(a.upset_table(), 0b1010);
        assert_eq!(a.downset_table(), 0b0011);
        assert_eq!(complement_table(2, a.upset_table()), 0b0101);
    }
}
