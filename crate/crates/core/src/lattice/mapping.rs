//! The correspondences between antichains and parthood distributions, and the
//! two partner mappings between antichains.

use super::antichain::{complement_table, Antichain};
use super::parthood::ParthoodDistribution;
use crate::error::{PidError, Result};

/// `f_α`: one exactly on the collections of `α` and their supersets.
///
/// Defined for `α ∈ 𝒜`, i.e. every antichain except `{}` and `{∅}`.
pub fn f_from_antichain(alpha: &Antichain) -> Result<ParthoodDistribution> {
    if alpha.is_empty() || alpha.is_of_empty_set() {
        return Err(PidError::Domain {
            context: "f_α (redundancy domain 𝒜)".into(),
            antichain: alpha.to_string(),
        });
    }
    Ok(f_from_antichain_unchecked(alpha))
}

pub(crate) fn f_from_antichain_unchecked(alpha: &Antichain) -> ParthoodDistribution {
    ParthoodDistribution::from_table_unchecked(alpha.n(), alpha.upset_table())
}

/// `α_f`: the ⊆-minimal collections on which `f` is one.
pub fn antichain_from_f(f: &ParthoodDistribution) -> Antichain {
    Antichain::minimal_of_table(f.n(), f.table())
}

/// `f̃_α`: zero exactly on the collections of `α` and their subsets.
///
/// Defined for `α ∈ 𝒮`, i.e. every antichain except `{}` and `{[n]}`.
pub fn f_tilde_from_antichain(alpha: &Antichain) -> Result<ParthoodDistribution> {
    if alpha.is_empty() || alpha.is_of_full_set() {
        return Err(PidError::Domain {
            context: "f̃_α (synergy domain 𝒮)".into(),
            antichain: alpha.to_string(),
        });
    }
    Ok(f_tilde_from_antichain_unchecked(alpha))
}

pub(crate) fn f_tilde_from_antichain_unchecked(alpha: &Antichain) -> ParthoodDistribution {
    ParthoodDistribution::from_table_unchecked(alpha.n(), complement_table(alpha.n(), alpha.downset_table()))
}

/// `α̃_f`: the ⊆-maximal collections on which `f` is zero.
pub fn antichain_from_f_tilde(f: &ParthoodDistribution) -> Antichain {
    Antichain::maximal_of_table(f.n(), complement_table(f.n(), f.table()))
}

/// `ᾱ`: the minimal non-subsets of the collections in `α`.
pub fn partner_overline(alpha: &Antichain) -> Antichain {
    let n = alpha.n();
    Antichain::minimal_of_table(n, complement_table(n, alpha.downset_table()))
}

/// `α̲`: the maximal non-supersets of the collections in `α`.
pub fn partner_underline(alpha: &Antichain) -> Antichain {
    let n = alpha.n();
    Antichain::maximal_of_table(n, complement_table(n, alpha.upset_table()))
}
