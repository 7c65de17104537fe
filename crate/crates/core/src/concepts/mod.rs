//! Base-concepts: the parthood conditions that select atoms, the domain of
//! each concept, its nesting (semi-)lattice and a reference measure family.

mod condition;
mod measure;

use std::fmt;
use std::str::FromStr;

pub use condition::{Condition, Exceptional, Mode, Relation, Target, Triviality};
pub use measure::{msd_wrap, parse_measure_file, MeasureAssignment, MeasureFile, MeasureFileConcept};

use crate::engine::Atoms;
use crate::error::{PidError, Result};
use crate::info::JointDistribution;
use crate::lattice::{
    build_lattice, downset_table_of, f_from_antichain_unchecked, f_tilde_from_antichain_unchecked,
    in_redundancy_domain, in_synergy_domain, partner_overline, partner_underline, table_mask, universe, upset_table_of,
    Antichain, ConceptLattice, Direction, OrderKind, ParthoodDistribution, SourceSet,
};

/// Label reported for [`reference_assignment`] values.
pub const REFERENCE_MEASURE_NAME: &str = "reference (min-MI family)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseConcept {
    Redundancy,
    WeakSynergy,
    Union,
    Vulnerable,
    RedundancyPartner,
    Restricted,
    UnionPartner,
    VulnerablePartner,
    Unique,
    UniquePartner,
}

impl BaseConcept {
    pub const ALL: [BaseConcept; 10] = [
        BaseConcept::Redundancy,
        BaseConcept::WeakSynergy,
        BaseConcept::Union,
        BaseConcept::Vulnerable,
        BaseConcept::RedundancyPartner,
        BaseConcept::Restricted,
        BaseConcept::UnionPartner,
        BaseConcept::VulnerablePartner,
        BaseConcept::Unique,
        BaseConcept::UniquePartner,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            BaseConcept::Redundancy => "redundancy",
            BaseConcept::WeakSynergy => "weak-synergy",
            BaseConcept::Union => "union",
            BaseConcept::Vulnerable => "vulnerable",
            BaseConcept::RedundancyPartner => "redundancy-partner",
            BaseConcept::Restricted => "restricted",
            BaseConcept::UnionPartner => "union-partner",
            BaseConcept::VulnerablePartner => "vulnerable-partner",
            BaseConcept::Unique => "unique",
            BaseConcept::UniquePartner => "unique-partner",
        }
    }

    pub fn valid_tags() -> String {
        Self::ALL.iter().map(|c| c.tag()).collect::<Vec<_>>().join(", ")
    }

    /// The conditions whose conjunction selects this concept's atoms.
    pub fn conditions(self) -> Vec<Condition> {
        let all = Condition::all();
        let (sf_sup_p, sf_sub_np, nc_sub_np, nc_sup_p) = (all[0], all[1], all[5], all[6]);
        match self {
            BaseConcept::Redundancy => vec![sf_sup_p],
            BaseConcept::WeakSynergy => vec![sf_sub_np],
            BaseConcept::RedundancyPartner => vec![nc_sub_np],
            BaseConcept::Restricted => vec![nc_sup_p],
            BaseConcept::Vulnerable => vec![all[8]],
            BaseConcept::Union => vec![all[11]],
            BaseConcept::VulnerablePartner => vec![all[13]],
            BaseConcept::UnionPartner => vec![all[14]],
            BaseConcept::Unique => vec![sf_sup_p, nc_sup_p],
            BaseConcept::UniquePartner => vec![sf_sub_np, nc_sub_np],
        }
    }
}

impl fmt::Display for BaseConcept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for BaseConcept {
    type Err = PidError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| PidError::Validation(format!("unknown concept `{s}`; valid tags: {}", Self::valid_tags())))
    }
}

/// Whether `alpha` lies in the domain of `concept`.
pub fn in_domain(concept: BaseConcept, alpha: &Antichain) -> bool {
    match concept {
        BaseConcept::Redundancy | BaseConcept::Restricted | BaseConcept::Union | BaseConcept::Unique => {
            in_redundancy_domain(alpha)
        }
        BaseConcept::WeakSynergy
        | BaseConcept::RedundancyPartner
        | BaseConcept::Vulnerable
        | BaseConcept::UniquePartner => in_synergy_domain(alpha),
        BaseConcept::UnionPartner => !alpha.is_of_empty_set() && !alpha.is_singletons(),
        BaseConcept::VulnerablePartner => !alpha.is_of_full_set() && !is_co_singletons(alpha),
    }
}

fn is_co_singletons(alpha: &Antichain) -> bool {
    Antichain::co_singletons(alpha.n()).is_ok_and(|c| &c == alpha)
}

/// The domain of `concept` in canonical order.
pub fn domain_for_concept(concept: BaseConcept, n: usize) -> Result<Vec<Antichain>> {
    Ok(universe(n)?
        .antichains()
        .iter()
        .filter(|a| in_domain(concept, a))
        .cloned()
        .collect())
}

fn check_domain(concept: BaseConcept, alpha: &Antichain) -> Result<()> {
    if in_domain(concept, alpha) {
        Ok(())
    } else {
        Err(PidError::Domain {
            context: concept.tag().into(),
            antichain: alpha.to_string(),
        })
    }
}

/// The nesting order of a concept's values, lower elements contained in
/// higher ones.
pub fn concept_lattice(concept: BaseConcept, n: usize) -> Result<ConceptLattice> {
    let (order, direction) = match concept {
        BaseConcept::Redundancy => (OrderKind::Redundancy, Direction::Up),
        BaseConcept::WeakSynergy => (OrderKind::Synergy, Direction::Down),
        BaseConcept::RedundancyPartner => (OrderKind::Synergy, Direction::Up),
        BaseConcept::Restricted => (OrderKind::Redundancy, Direction::Down),
        BaseConcept::Union => (OrderKind::Synergy, Direction::Up),
        BaseConcept::Vulnerable => (OrderKind::Redundancy, Direction::Down),
        BaseConcept::UnionPartner => (OrderKind::Redundancy, Direction::Up),
        BaseConcept::VulnerablePartner => (OrderKind::Synergy, Direction::Down),
        BaseConcept::Unique | BaseConcept::UniquePartner => {
            return Err(PidError::NoLattice {
                concept: concept.tag().into(),
            })
        }
    };
    Ok(build_lattice(domain_for_concept(concept, n)?, order, direction))
}

/// A compiled atom predicate for one concept at one antichain.
#[derive(Clone, Debug)]
pub struct Selector {
    conditions: Vec<Condition>,
    upset: u32,
    downset: u32,
    mask: u32,
}

impl Selector {
    /// Builds the predicate from an arbitrary list of collections, which
    /// need not be an antichain, without a domain check.
    pub fn from_collections(concept: BaseConcept, n: usize, collections: &[SourceSet]) -> Result<Self> {
        crate::lattice::check_n(n)?;
        if let Some(bad) = collections.iter().find(|s| s.n() != n) {
            return Err(PidError::Validation(format!(
                "collection {bad} is over {} sources, expected {n}",
                bad.n()
            )));
        }
        let bits = collections.iter().map(|s| s.bits());
        Ok(Selector {
            conditions: concept.conditions(),
            upset: upset_table_of(n, bits.clone()),
            downset: downset_table_of(n, bits),
            mask: table_mask(n),
        })
    }

    pub fn matches(&self, f: &ParthoodDistribution) -> bool {
        self.matches_table(f.table())
    }

    pub(crate) fn matches_table(&self, f: u32) -> bool {
        self.conditions
            .iter()
            .all(|c| c.eval_tables(self.upset, self.downset, self.mask, f))
    }
}

/// The predicate selecting the atoms that make up `concept` at `alpha`.
pub fn atom_selector(concept: BaseConcept, alpha: &Antichain) -> Result<Selector> {
    check_domain(concept, alpha)?;
    Selector::from_collections(concept, alpha.n(), alpha.collections())
}

/// The closed-form equivalents of the selectors, used to cross-check the
/// quantified formulas.
pub fn simplified_selector(concept: BaseConcept, alpha: &Antichain, f: &ParthoodDistribution) -> bool {
    let all_one = |a: &Antichain| a.collections().iter().all(|s| f.value(*s));
    let all_zero = |a: &Antichain| a.collections().iter().all(|s| !f.value(*s));
    match concept {
        BaseConcept::Redundancy => all_one(alpha),
        BaseConcept::WeakSynergy => all_zero(alpha),
        BaseConcept::Vulnerable => !all_one(alpha),
        BaseConcept::Union => !all_zero(alpha),
        BaseConcept::RedundancyPartner => all_one(&partner_overline(alpha)),
        BaseConcept::Restricted => all_zero(&partner_underline(alpha)),
        BaseConcept::UnionPartner => !all_zero(&partner_underline(alpha)),
        BaseConcept::VulnerablePartner => !all_one(&partner_overline(alpha)),
        BaseConcept::Unique => *f == f_from_antichain_unchecked(alpha),
        BaseConcept::UniquePartner => *f == f_tilde_from_antichain_unchecked(alpha),
    }
}

/// Sum of the atoms selected by `concept` at `alpha`.
pub fn summate(concept: BaseConcept, alpha: &Antichain, atoms: &Atoms) -> Result<f64> {
    if alpha.n() != atoms.n() {
        return Err(PidError::Validation(format!(
            "antichain over {} sources, atoms over {}",
            alpha.n(),
            atoms.n()
        )));
    }
    let sel = atom_selector(concept, alpha)?;
    Ok(summate_with(&sel, atoms))
}

pub(crate) fn summate_with(sel: &Selector, atoms: &Atoms) -> f64 {
    let u = universe(atoms.n()).expect("atoms carry a valid n");
    u.atoms()
        .iter()
        .zip(atoms.values())
        .filter(|(f, _)| sel.matches_table(f.table()))
        .map(|(_, v)| v)
        .sum()
}

/// Reference value from a table of `I(a:T)` indexed by subset bitmask.
/// `Unique` and `UniquePartner` are not covered here.
pub(crate) fn reference_value(concept: BaseConcept, mi: &[f64], alpha: &Antichain) -> f64 {
    let total = mi[mi.len() - 1];
    let values = || alpha.collections().iter().map(|s| mi[s.bits() as usize]);
    let min = || values().fold(f64::INFINITY, f64::min);
    let max = || values().fold(f64::NEG_INFINITY, f64::max);
    match concept {
        BaseConcept::Redundancy => min(),
        BaseConcept::Union => max(),
        BaseConcept::WeakSynergy => total - max(),
        BaseConcept::Vulnerable => total - min(),
        BaseConcept::RedundancyPartner => reference_value(BaseConcept::Redundancy, mi, &partner_overline(alpha)),
        BaseConcept::Restricted => reference_value(BaseConcept::WeakSynergy, mi, &partner_underline(alpha)),
        BaseConcept::UnionPartner => reference_value(BaseConcept::Union, mi, &partner_underline(alpha)),
        BaseConcept::VulnerablePartner => reference_value(BaseConcept::Vulnerable, mi, &partner_overline(alpha)),
        BaseConcept::Unique | BaseConcept::UniquePartner => {
            unreachable!("unique reference values come from atoms")
        }
    }
}

/// The reference measure on the whole domain of `concept`.
///
/// Unique information is read off the atoms of the reference-redundancy
/// decomposition.
pub fn reference_assignment(concept: BaseConcept, dist: &JointDistribution) -> Result<MeasureAssignment> {
    let n = dist.n_sources();
    universe(n)?;
    let mi = dist.mi_table();
    match concept {
        BaseConcept::Unique | BaseConcept::UniquePartner => {
            let red = MeasureAssignment::from_fn(BaseConcept::Redundancy, n, |a| {
                reference_value(BaseConcept::Redundancy, &mi, a)
            })?;
            let atoms = crate::engine::invert(BaseConcept::Redundancy, &red, mi[mi.len() - 1])?;
            crate::engine::unique_assignment(concept, &atoms)
        }
        _ => MeasureAssignment::from_fn(concept, n, |a| reference_value(concept, &mi, a)),
    }
}

/// The reference measure at a single antichain.
pub fn reference_measure(concept: BaseConcept, dist: &JointDistribution, alpha: &Antichain) -> Result<f64> {
    check_domain(concept, alpha)?;
    if alpha.n() != dist.n_sources() {
        return Err(PidError::Validation(format!(
            "antichain over {} sources, distribution over {}",
            alpha.n(),
            dist.n_sources()
        )));
    }
    match concept {
        BaseConcept::Unique | BaseConcept::UniquePartner => {
            let table = reference_assignment(concept, dist)?;
            Ok(table.get(alpha).expect("domain checked"))
        }
        _ => Ok(reference_value(concept, &dist.mi_table(), alpha)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::info::{copy, xor};
    use crate::lattice::{LatticeKind, MAX_SOURCES};

    fn ac(n: usize, s: &str) -> Antichain {
        Antichain::parse(n, s).unwrap()
    }

    fn names(v: &[Antichain]) -> Vec<String> {
        v.iter().map(|a| a.to_string()).collect()
    }

    #[test]
    fn tags_round_trip() {
        for c in BaseConcept::ALL {
            assert_eq!(c.tag().parse::<BaseConcept>().unwrap(), c);
        }
        let err = "synergy".parse::<BaseConcept>().unwrap_err().to_string();
        assert!(err.contains("weak-synergy") && err.contains("unique-partner"), "{err}");
    }

    #[test]
    fn domains_at_two_sources() {
        let mut red = names(&domain_for_concept(BaseConcept::Redundancy, 2).unwrap());
        red.sort();
        assert_eq!(red, ["{1,2}", "{1}", "{1}{2}", "{2}"]);
        let mut ws = names(&domain_for_concept(BaseConcept::WeakSynergy, 2).unwrap());
        ws.sort();
        assert_eq!(ws, ["{1}", "{1}{2}", "{2}", "{}"]);
        let mut vp = names(&domain_for_concept(BaseConcept::VulnerablePartner, 2).unwrap());
        vp.sort();
        assert_eq!(vp, ["{1}", "{2}", "{}", "∅-chain"]);
        let mut up = names(&domain_for_concept(BaseConcept::UnionPartner, 2).unwrap());
        up.sort();
        assert_eq!(up, ["{1,2}", "{1}", "{2}", "∅-chain"]);
    }

    #[test]
    fn partner_domains_are_mapping_images() {
        for n in 1..=4 {
            let mut up: Vec<Antichain> = domain_for_concept(BaseConcept::Redundancy, n)
                .unwrap()
                .iter()
                .map(partner_overline)
                .collect();
            up.sort();
            assert_eq!(up, domain_for_concept(BaseConcept::UnionPartner, n).unwrap());
            let mut vp: Vec<Antichain> = domain_for_concept(BaseConcept::WeakSynergy, n)
                .unwrap()
                .iter()
                .map(partner_underline)
                .collect();
            vp.sort();
            assert_eq!(vp, domain_for_concept(BaseConcept::VulnerablePartner, n).unwrap());
            let mut rp: Vec<Antichain> = domain_for_concept(BaseConcept::Redundancy, n)
                .unwrap()
                .iter()
                .map(partner_underline)
                .collect();
            rp.sort();
            assert_eq!(rp, domain_for_concept(BaseConcept::RedundancyPartner, n).unwrap());
        }
    }

    #[test]
    fn redundancy_selector_at_both_singletons() {
        let u = universe(2).unwrap();
        let sel = atom_selector(BaseConcept::Redundancy, &ac(2, "{1}{2}")).unwrap();
        let picked: Vec<&ParthoodDistribution> = u.atoms().iter().filter(|f| sel.matches(f)).collect();
        assert_eq!(picked.len(), 1);
        assert!(picked[0].value(SourceSet::from_indices(2, &[1]).unwrap()));
        assert!(picked[0].value(SourceSet::from_indices(2, &[2]).unwrap()));
    }

    #[test]
    fn unique_selects_one_atom() {
        let u = universe(2).unwrap();
        let alpha = ac(2, "{1}");
        let sel = atom_selector(BaseConcept::Unique, &alpha).unwrap();
        let picked: Vec<&ParthoodDistribution> = u.atoms().iter().filter(|f| sel.matches(f)).collect();
        assert_eq!(picked, [&f_from_antichain_unchecked(&alpha)]);
    }

    #[test]
    fn selector_domain_errors() {
        assert!(atom_selector(BaseConcept::Redundancy, &ac(2, "{}")).is_err());
        assert!(atom_selector(BaseConcept::WeakSynergy, &ac(2, "{1,2}")).is_err());
        assert!(atom_selector(BaseConcept::UnionPartner, &ac(2, "{1}{2}")).is_err());
    }

    #[test]
    fn selectors_match_simplified_forms() {
        for n in 1..=3 {
            let u = universe(n).unwrap();
            for c in BaseConcept::ALL {
                for alpha in domain_for_concept(c, n).unwrap() {
                    let sel = atom_selector(c, &alpha).unwrap();
                    for f in u.atoms() {
                        assert_eq!(sel.matches(f), simplified_selector(c, &alpha, f), "{c} {alpha} {f}");
                    }
                }
            }
        }
    }

    #[test]
    fn selector_ignores_collection_order_and_redundant_members() {
        let n = 3;
        let s = |idx: &[usize]| SourceSet::from_indices(n, idx).unwrap();
        let u = universe(n).unwrap();
        let canon = atom_selector(BaseConcept::Redundancy, &ac(n, "{1}{2,3}")).unwrap();
        let shuffled =
            Selector::from_collections(BaseConcept::Redundancy, n, &[s(&[2, 3]), s(&[1]), s(&[1, 2])]).unwrap();
        let ws = atom_selector(BaseConcept::WeakSynergy, &ac(n, "{1,2}")).unwrap();
        let ws_sub =
            Selector::from_collections(BaseConcept::WeakSynergy, n, &[s(&[1]), s(&[1, 2]), s(&[1, 2])]).unwrap();
        for f in u.atoms() {
            assert_eq!(canon.matches(f), shuffled.matches(f));
            assert_eq!(ws.matches(f), ws_sub.matches(f));
        }
    }

    #[test]
    fn summate_examples() {
        let atoms = Atoms::standard_basis(2, &ac(2, "{1,2}")).unwrap();
        let both = ac(2, "{1}{2}");
        assert_eq!(summate(BaseConcept::Union, &both, &atoms).unwrap(), 0.0);
        assert_eq!(summate(BaseConcept::Vulnerable, &both, &atoms).unwrap(), 1.0);
        let zero = Atoms::zeros(3).unwrap();
        for c in BaseConcept::ALL {
            for a in domain_for_concept(c, 3).unwrap() {
                assert_eq!(summate(c, &a, &zero).unwrap(), 0.0);
            }
        }
        let ones = Atoms::new(2, vec![1.0; 4]).unwrap();
        assert_eq!(summate(BaseConcept::Redundancy, &ac(2, "{1,2}"), &ones).unwrap(), 4.0);
    }

    #[test]
    fn reference_measure_examples() {
        let both = ac(2, "{1}{2}");
        assert_eq!(reference_measure(BaseConcept::Redundancy, &xor(), &both).unwrap(), 0.0);
        assert!((reference_measure(BaseConcept::WeakSynergy, &xor(), &both).unwrap() - 1.0).abs() < 1e-12);
        assert!((reference_measure(BaseConcept::Redundancy, &copy(), &both).unwrap() - 1.0).abs() < 1e-12);
        assert!(reference_measure(BaseConcept::Redundancy, &xor(), &ac(2, "{}")).is_err());
        let ws_empty = reference_measure(BaseConcept::WeakSynergy, &xor(), &ac(2, "{}")).unwrap();
        assert!((ws_empty - 1.0).abs() < 1e-12);
        let unq = reference_measure(BaseConcept::Unique, &xor(), &ac(2, "{1,2}")).unwrap();
        assert!((unq - 1.0).abs() < 1e-12);
    }

    #[test]
    fn concept_lattice_kinds() {
        let kind = |c| concept_lattice(c, 3).unwrap().kind();
        assert_eq!(kind(BaseConcept::Redundancy), LatticeKind::FullLattice);
        assert_eq!(kind(BaseConcept::WeakSynergy), LatticeKind::FullLattice);
        assert_eq!(kind(BaseConcept::RedundancyPartner), LatticeKind::FullLattice);
        assert_eq!(kind(BaseConcept::Restricted), LatticeKind::FullLattice);
        assert_eq!(kind(BaseConcept::Union), LatticeKind::JoinSemiLattice);
        assert_ne!(kind(BaseConcept::Vulnerable), LatticeKind::FullLattice);
        assert_ne!(kind(BaseConcept::UnionPartner), LatticeKind::FullLattice);
        assert_ne!(kind(BaseConcept::VulnerablePartner), LatticeKind::FullLattice);
        assert!(matches!(
            concept_lattice(BaseConcept::Unique, 3),
            Err(PidError::NoLattice { .. })
        ));
        assert!(concept_lattice(BaseConcept::Redundancy, MAX_SOURCES + 1).is_err());
    }
}
