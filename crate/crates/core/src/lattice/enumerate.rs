use super::antichain::Antichain;
use super::parthood::ParthoodDistribution;
use super::source_set::{all_subsets, SourceSet};
use super::{check_n, f_from_antichain_unchecked};
use crate::error::Result;

/// Every antichain of `(P([n]), ⊆)`, including `{}` and `{∅}`, in canonical
/// order. The count is the Dedekind number `D(n)`.
pub fn enumerate_antichains(n: usize) -> Result<Vec<Antichain>> {
    check_n(n)?;
    let subsets = all_subsets(n);
    let mut out = Vec::new();
    let mut chosen: Vec<SourceSet> = Vec::new();
    extend(&subsets, 0, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

// Collections are picked in canonical subset order, so each antichain is
// produced exactly once as an increasing sequence.
fn extend(subsets: &[SourceSet], start: usize, chosen: &mut Vec<SourceSet>, out: &mut Vec<Antichain>) {
    let n = subsets[0].n();
    out.push(Antichain::from_canonical_unchecked(n, chosen.clone()));
    for (k, &s) in subsets.iter().enumerate().skip(start) {
        if chosen.iter().all(|c| !c.is_subset_of(s) && !s.is_subset_of(*c)) {
            chosen.push(s);
            extend(subsets, k + 1, chosen, out);
            chosen.pop();
        }
    }
}

/// All parthood distributions for `n` sources, in the canonical order of
/// their minimal-collection antichains. The count is `D(n) - 2`.
pub fn enumerate_parthood_distributions(n: usize) -> Result<Vec<ParthoodDistribution>> {
    Ok(enumerate_antichains(n)?
        .iter()
        .filter(|a| !a.is_empty() && !a.is_of_empty_set())
        .map(f_from_antichain_unchecked)
        .collect())
}
