//! Antichains, parthood distributions, their correspondences and the
//! (semi-)lattices built from them.

mod antichain;
mod enumerate;
mod mapping;
mod order;
mod parthood;
mod source_set;

use std::collections::HashMap;
use std::sync::OnceLock;

pub(crate) use antichain::{downset_table as downset_table_of, upset_table as upset_table_of};
pub use antichain::{Antichain, EMPTY_ANTICHAIN_STR};
pub use enumerate::{enumerate_antichains, enumerate_parthood_distributions};
pub use mapping::{
    antichain_from_f, antichain_from_f_tilde, f_from_antichain, f_tilde_from_antichain, partner_overline,
    partner_underline,
};
pub(crate) use mapping::{f_from_antichain_unchecked, f_tilde_from_antichain_unchecked};
pub use order::{
    build_lattice, cumulative_sums, moebius_invert, order_leq, ConceptLattice, Direction, LatticeKind, OrderKind,
    SumDirection,
};
pub use parthood::ParthoodDistribution;
pub use source_set::{all_subsets, SourceSet, MAX_SET_SOURCES};

use crate::error::{PidError, Result};

/// Hard cap on the number of sources for all lattice combinatorics.
pub const MAX_SOURCES: usize = 5;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_SOURCES {
        return Err(PidError::Capacity { n, max: MAX_SOURCES });
    }
    Ok(())
}

/// Mask covering the `2^n` truth-table bits.
pub(crate) fn table_mask(n: usize) -> u32 {
    if n >= 5 {
        u32::MAX
    } else {
        (1u32 << (1 << n)) - 1
    }
}

/// `α ∈ 𝒜`: neither `{}` nor `{∅}`.
pub fn in_redundancy_domain(alpha: &Antichain) -> bool {
    !alpha.is_empty() && !alpha.is_of_empty_set()
}

/// `α ∈ 𝒮`: neither `{}` nor `{[n]}`.
pub fn in_synergy_domain(alpha: &Antichain) -> bool {
    !alpha.is_empty() && !alpha.is_of_full_set()
}

/// `𝒜` in canonical order.
pub fn redundancy_domain(n: usize) -> Result<Vec<Antichain>> {
    Ok(universe(n)?
        .antichains
        .iter()
        .filter(|a| in_redundancy_domain(a))
        .cloned()
        .collect())
}

/// `𝒮` in canonical order.
pub fn synergy_domain(n: usize) -> Result<Vec<Antichain>> {
    Ok(universe(n)?
        .antichains
        .iter()
        .filter(|a| in_synergy_domain(a))
        .cloned()
        .collect())
}

/// Per-`n` enumeration shared by every computation over atoms.
#[derive(Debug)]
pub struct Universe {
    n: usize,
    antichains: Vec<Antichain>,
    atoms: Vec<ParthoodDistribution>,
    index: HashMap<u32, usize>,
}

impl Universe {
    pub fn n(&self) -> usize {
        self.n
    }

    /// All antichains, `D(n)` of them.
    pub fn antichains(&self) -> &[Antichain] {
        &self.antichains
    }

    /// All parthood distributions, `D(n) - 2` of them; atom vectors are
    /// indexed in this order.
    pub fn atoms(&self) -> &[ParthoodDistribution] {
        &self.atoms
    }

    pub fn atom_index(&self, f: &ParthoodDistribution) -> Option<usize> {
        if f.n() != self.n {
            return None;
        }
        self.index.get(&f.table()).copied()
    }
}

/// The cached enumeration for `n` sources.
pub fn universe(n: usize) -> Result<&'static Universe> {
    static CACHE: [OnceLock<Universe>; MAX_SOURCES] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    check_n(n)?;
    Ok(CACHE[n - 1].get_or_init(|| {
        let antichains = enumerate_antichains(n).expect("n checked");
        let atoms = enumerate_parthood_distributions(n).expect("n checked");
        let index = atoms.iter().enumerate().map(|(i, f)| (f.table(), i)).collect();
        Universe {
            n,
            antichains,
            atoms,
            index,
        }
    }))
}
