//! Solving base-concept measures for atoms, and the checks run on the
//! resulting atom vectors.

mod export;
mod rank;

use std::sync::OnceLock;

pub use export::{parse_result_json, AtomRecord, ImportedResult, ResultJson, TableRecord};
pub use rank::{proper_synergy_rank_analysis, proper_synergy_system, RankAnalysis};

use crate::concepts::{
    atom_selector, domain_for_concept, reference_assignment, summate_with, BaseConcept, MeasureAssignment, Selector,
    REFERENCE_MEASURE_NAME,
};
use crate::error::{PidError, Result};
use crate::info::JointDistribution;
use crate::lattice::{
    all_subsets, build_lattice, f_from_antichain_unchecked, f_tilde_from_antichain_unchecked, moebius_invert,
    partner_overline, partner_underline, redundancy_domain, synergy_domain, universe, Antichain, ConceptLattice,
    Direction, OrderKind, ParthoodDistribution, SourceSet, SumDirection, MAX_SOURCES,
};

/// Tolerance on information-valued identities, in bits.
pub const ENGINE_TOLERANCE: f64 = 1e-9;

/// Tolerance of the boundary-identity preflight on supplied measures.
pub const PREFLIGHT_TOLERANCE: f64 = 1e-7;

/// One value per parthood distribution, in the order of
/// [`crate::lattice::Universe::atoms`].
#[derive(Clone, Debug, PartialEq)]
pub struct Atoms {
    n: usize,
    values: Vec<f64>,
}

impl Atoms {
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        let count = universe(n)?.atoms().len();
        if values.len() != count {
            return Err(PidError::Validation(format!(
                "expected {count} atoms for n = {n}, got {}",
                values.len()
            )));
        }
        Ok(Atoms { n, values })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        let count = universe(n)?.atoms().len();
        Ok(Atoms {
            n,
            values: vec![0.0; count],
        })
    }

    /// One bit on the atom `Π(f_α)`, zero elsewhere.
    pub fn standard_basis(n: usize, alpha: &Antichain) -> Result<Self> {
        let f = crate::lattice::f_from_antichain(alpha)?;
        let mut atoms = Self::zeros(n)?;
        let i = universe(n)?.atom_index(&f).expect("f_α is an atom");
        atoms.values[i] = 1.0;
        Ok(atoms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, f: &ParthoodDistribution) -> Option<f64> {
        universe(self.n).ok()?.atom_index(f).map(|i| self.values[i])
    }

    /// `Π(f_α)`.
    pub fn at_alpha(&self, alpha: &Antichain) -> Result<f64> {
        let f = crate::lattice::f_from_antichain(alpha)?;
        Ok(self.get(&f).expect("f_α is an atom"))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ParthoodDistribution, f64)> {
        universe(self.n)
            .expect("valid n")
            .atoms()
            .iter()
            .zip(self.values.iter().copied())
    }

    /// Sum of all atoms, `I([n]:T)` under consistency.
    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Largest absolute entry-wise difference.
    pub fn max_abs_diff(&self, other: &Atoms) -> f64 {
        assert_eq!(self.n, other.n, "atom vectors over different n");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Where a decomposition's measure values come from.
#[derive(Clone, Debug)]
pub enum MeasureSource {
    Reference,
    Assignment {
        assignment: MeasureAssignment,
        label: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultMeta {
    pub concept: BaseConcept,
    pub measure: String,
    pub digest: String,
}

/// Atoms of one distribution, checked against its mutual information.
#[derive(Clone, Debug, PartialEq)]
pub struct PidResult {
    atoms: Atoms,
    meta: ResultMeta,
    mi: Vec<f64>,
}

impl PidResult {
    /// Fails unless the consistency equation holds within
    /// [`ENGINE_TOLERANCE`].
    pub fn new(atoms: Atoms, meta: ResultMeta, dist: &JointDistribution) -> Result<Self> {
        let report = verify_consistency(&atoms, dist)?;
        if !report.passed {
            return Err(PidError::Inconsistent {
                subset: report.worst_subset.to_string(),
                residual: report.worst_residual,
            });
        }
        Ok(PidResult {
            atoms,
            meta,
            mi: dist.mi_table(),
        })
    }

    pub fn n(&self) -> usize {
        self.atoms.n
    }

    pub fn atoms(&self) -> &Atoms {
        &self.atoms
    }

    pub fn meta(&self) -> &ResultMeta {
        &self.meta
    }

    /// `I(a:T)` by subset bitmask.
    pub fn mutual_information(&self) -> &[f64] {
        &self.mi
    }
}

struct SolverLattice {
    lattice: ConceptLattice,
    /// Universe atom index for every lattice node.
    atom_of_node: Vec<usize>,
}

// The redundancy lattice indexed by `f_α` and the synergy lattice indexed by
// `f̃_α`, built once per n.
fn solver_lattice(synergy: bool, n: usize) -> Result<&'static SolverLattice> {
    static CACHE: [[OnceLock<SolverLattice>; MAX_SOURCES]; 2] = [
        [const { OnceLock::new() }; MAX_SOURCES],
        [const { OnceLock::new() }; MAX_SOURCES],
    ];
    let u = universe(n)?;
    Ok(CACHE[usize::from(synergy)][n - 1].get_or_init(|| {
        let (nodes, order) = if synergy {
            (synergy_domain(n).expect("n checked"), OrderKind::Synergy)
        } else {
            (redundancy_domain(n).expect("n checked"), OrderKind::Redundancy)
        };
        let atom_of_node = nodes
            .iter()
            .map(|a| {
                let f = if synergy {
                    f_tilde_from_antichain_unchecked(a)
                } else {
                    f_from_antichain_unchecked(a)
                };
                u.atom_index(&f).expect("every f is an atom")
            })
            .collect();
        SolverLattice {
            lattice: build_lattice(nodes, order, Direction::Up),
            atom_of_node,
        }
    }))
}

fn solve_on(synergy: bool, n: usize, mut value_of: impl FnMut(&Antichain) -> f64) -> Result<Atoms> {
    let solver = solver_lattice(synergy, n)?;
    let values: Vec<f64> = solver.lattice.nodes().iter().map(&mut value_of).collect();
    let direction = if synergy {
        SumDirection::UpSum
    } else {
        SumDirection::DownSum
    };
    let node_atoms = moebius_invert(&solver.lattice, &values, direction)?;
    let mut atoms = Atoms::zeros(n)?;
    for (&i, v) in solver.atom_of_node.iter().zip(node_atoms) {
        atoms.values[i] = v;
    }
    Ok(atoms)
}

/// Down-sum inversion over the redundancy lattice.
pub fn invert_redundancy(n: usize, value_of: impl FnMut(&Antichain) -> f64) -> Result<Atoms> {
    solve_on(false, n, value_of)
}

/// Up-sum inversion over the synergy lattice.
pub fn invert_weak_synergy(n: usize, value_of: impl FnMut(&Antichain) -> f64) -> Result<Atoms> {
    solve_on(true, n, value_of)
}

fn lookup(m: &MeasureAssignment, alpha: &Antichain) -> f64 {
    m.get(alpha).expect("mapped antichain lies in the concept's domain")
}

/// `I*_ws(α) = total − I_∪(α)`, with `I_∪({∅}) = 0`.
pub fn union_to_weak_synergy(union: &MeasureAssignment, total: f64) -> Result<MeasureAssignment> {
    expect_concept(union, BaseConcept::Union)?;
    MeasureAssignment::from_fn(BaseConcept::WeakSynergy, union.n(), |a| {
        if a.is_of_empty_set() {
            total
        } else {
            total - lookup(union, a)
        }
    })
}

/// `I*_∩(α) = total − I_vul(α)`, with `I_vul({[n]}) = 0`.
pub fn vulnerable_to_redundancy(vulnerable: &MeasureAssignment, total: f64) -> Result<MeasureAssignment> {
    expect_concept(vulnerable, BaseConcept::Vulnerable)?;
    MeasureAssignment::from_fn(BaseConcept::Redundancy, vulnerable.n(), |a| {
        if a.is_of_full_set() {
            total
        } else {
            total - lookup(vulnerable, a)
        }
    })
}

fn expect_concept(m: &MeasureAssignment, concept: BaseConcept) -> Result<()> {
    if m.concept() != concept {
        return Err(PidError::Validation(format!(
            "expected a {concept} measure, got {}",
            m.concept()
        )));
    }
    Ok(())
}

/// Solves a complete measure for the atoms. `total` is `I([n]:T)`, needed
/// by the union and vulnerable transforms.
pub fn invert(concept: BaseConcept, measure: &MeasureAssignment, total: f64) -> Result<Atoms> {
    expect_concept(measure, concept)?;
    let n = measure.n();
    match concept {
        BaseConcept::Redundancy => invert_redundancy(n, |a| lookup(measure, a)),
        BaseConcept::WeakSynergy => invert_weak_synergy(n, |a| lookup(measure, a)),
        BaseConcept::RedundancyPartner => invert_redundancy(n, |a| lookup(measure, &partner_underline(a))),
        BaseConcept::Restricted => invert_weak_synergy(n, |a| lookup(measure, &partner_overline(a))),
        BaseConcept::Union => invert(BaseConcept::WeakSynergy, &union_to_weak_synergy(measure, total)?, total),
        BaseConcept::Vulnerable => invert(
            BaseConcept::Redundancy,
            &vulnerable_to_redundancy(measure, total)?,
            total,
        ),
        BaseConcept::UnionPartner => {
            let union = MeasureAssignment::from_fn(BaseConcept::Union, n, |a| lookup(measure, &partner_overline(a)))?;
            invert(BaseConcept::Union, &union, total)
        }
        BaseConcept::VulnerablePartner => {
            let vul =
                MeasureAssignment::from_fn(BaseConcept::Vulnerable, n, |a| lookup(measure, &partner_underline(a)))?;
            invert(BaseConcept::Vulnerable, &vul, total)
        }
        BaseConcept::Unique | BaseConcept::UniquePartner => {
            let u = universe(n)?;
            let mut atoms = Atoms::zeros(n)?;
            for (alpha, v) in measure.iter() {
                let f = if concept == BaseConcept::Unique {
                    f_from_antichain_unchecked(alpha)
                } else {
                    f_tilde_from_antichain_unchecked(alpha)
                };
                atoms.values[u.atom_index(&f).expect("atom")] = v;
            }
            Ok(atoms)
        }
    }
}

/// Unique (or unique-partner) information read off an atom vector.
pub fn unique_assignment(concept: BaseConcept, atoms: &Atoms) -> Result<MeasureAssignment> {
    let u = universe(atoms.n())?;
    MeasureAssignment::from_fn(concept, atoms.n(), |a| {
        let f = match concept {
            BaseConcept::Unique => f_from_antichain_unchecked(a),
            _ => f_tilde_from_antichain_unchecked(a),
        };
        atoms.values[u.atom_index(&f).expect("atom")]
    })
}

/// `concept` evaluated on its whole domain by summing atoms.
pub fn measure_from_atoms(concept: BaseConcept, atoms: &Atoms) -> Result<MeasureAssignment> {
    let selectors: Vec<(Antichain, Selector)> = domain_for_concept(concept, atoms.n())?
        .into_iter()
        .map(|a| {
            let s = atom_selector(concept, &a).expect("domain element");
            (a, s)
        })
        .collect();
    MeasureAssignment::new(
        concept,
        atoms.n(),
        selectors.into_iter().map(|(a, s)| {
            let v = summate_with(&s, atoms);
            (a, v)
        }),
    )
}

// `(identity name, antichain, expected value)` for every boundary identity
// of the concept.
fn boundary_identities(concept: BaseConcept, mi: &[f64], n: usize) -> Vec<(&'static str, Antichain, f64)> {
    let total = mi[mi.len() - 1];
    let singleton = |s: SourceSet| Antichain::singleton(s).expect("any set is an antichain");
    let nonempty = || all_subsets(n).into_iter().filter(|s| !s.is_empty());
    let nonfull = || all_subsets(n).into_iter().filter(|s| !s.is_full());
    let info = |s: SourceSet| mi[s.bits() as usize];
    let mut out = Vec::new();
    match concept {
        BaseConcept::Redundancy => out.extend(nonempty().map(|s| ("self-redundancy", singleton(s), info(s)))),
        BaseConcept::Union => out.extend(nonempty().map(|s| ("self-union", singleton(s), info(s)))),
        BaseConcept::WeakSynergy => out.extend(nonfull().map(|s| ("self-synergy", singleton(s), total - info(s)))),
        BaseConcept::Vulnerable => out.extend(nonfull().map(|s| ("self-vulnerability", singleton(s), total - info(s)))),
        BaseConcept::RedundancyPartner => {
            out.extend(nonempty().map(|s| ("partner self-redundancy", partner_underline(&singleton(s)), info(s))))
        }
        BaseConcept::Restricted => {
            out.extend(nonfull().map(|s| ("partner self-synergy", partner_overline(&singleton(s)), total - info(s))))
        }
        BaseConcept::UnionPartner => {
            out.extend(nonempty().map(|s| ("partner self-union", partner_overline(&singleton(s)), info(s))))
        }
        BaseConcept::VulnerablePartner => out.extend(nonfull().map(|s| {
            (
                "partner self-vulnerability",
                partner_underline(&singleton(s)),
                total - info(s),
            )
        })),
        BaseConcept::Unique | BaseConcept::UniquePartner => {}
    }
    out
}

/// Refuses measures that break their concept's boundary identities beyond
/// [`PREFLIGHT_TOLERANCE`].
pub fn preflight(measure: &MeasureAssignment, dist: &JointDistribution) -> Result<()> {
    if measure.n() != dist.n_sources() {
        return Err(PidError::Validation(format!(
            "measure over {} sources, distribution over {}",
            measure.n(),
            dist.n_sources()
        )));
    }
    let mi = dist.mi_table();
    for (identity, alpha, expected) in boundary_identities(measure.concept(), &mi, measure.n()) {
        let actual = lookup(measure, &alpha);
        if (actual - expected).abs() > PREFLIGHT_TOLERANCE {
            return Err(PidError::BoundaryViolation {
                identity: identity.into(),
                antichain: alpha.to_string(),
                expected,
                actual,
                tolerance: PREFLIGHT_TOLERANCE,
            });
        }
    }
    Ok(())
}

/// Decomposes `dist` through `concept` with the given measure.
pub fn decompose(dist: &JointDistribution, concept: BaseConcept, measure: MeasureSource) -> Result<PidResult> {
    let n = dist.n_sources();
    universe(n)?;
    let (assignment, label) = match measure {
        MeasureSource::Reference => (reference_assignment(concept, dist)?, REFERENCE_MEASURE_NAME.to_string()),
        MeasureSource::Assignment { assignment, label } => {
            expect_concept(&assignment, concept)?;
            (assignment, label)
        }
    };
    preflight(&assignment, dist)?;
    let total = dist.mutual_information(SourceSet::full(n)?);
    let atoms = invert(concept, &assignment, total)?;
    let meta = ResultMeta {
        concept,
        measure: label,
        digest: dist.digest(),
    };
    PidResult::new(atoms, meta, dist)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConsistencyReport {
    pub tolerance: f64,
    /// `(a, Σ_{f(a)=1} Π(f) − I(a:T))` for every subset.
    pub residuals: Vec<(SourceSet, f64)>,
    pub worst_subset: SourceSet,
    pub worst_residual: f64,
    pub failing: Vec<SourceSet>,
    pub passed: bool,
}

/// Checks `I(a:T) = Σ_{f(a)=1} Π(f)` at every subset.
pub fn verify_consistency(atoms: &Atoms, dist: &JointDistribution) -> Result<ConsistencyReport> {
    let n = atoms.n();
    if dist.n_sources() != n {
        return Err(PidError::Validation(format!(
            "atoms over {n} sources, distribution over {}",
            dist.n_sources()
        )));
    }
    let mi = dist.mi_table();
    let u = universe(n)?;
    let residuals: Vec<(SourceSet, f64)> = all_subsets(n)
        .into_iter()
        .map(|a| {
            let sum: f64 = u
                .atoms()
                .iter()
                .zip(&atoms.values)
                .filter(|(f, _)| f.value(a))
                .map(|(_, v)| v)
                .sum();
            (a, sum - mi[a.bits() as usize])
        })
        .collect();
    let (worst_subset, worst_residual) = residuals
        .iter()
        .copied()
        .max_by(|x, y| x.1.abs().total_cmp(&y.1.abs()))
        .expect("at least the empty set");
    let failing: Vec<SourceSet> = residuals
        .iter()
        .filter(|(_, r)| r.abs() > ENGINE_TOLERANCE)
        .map(|(a, _)| *a)
        .collect();
    Ok(ConsistencyReport {
        tolerance: ENGINE_TOLERANCE,
        passed: failing.is_empty(),
        residuals,
        worst_subset,
        worst_residual,
        failing,
    })
}

/// Every concept evaluated on its whole domain from one atom vector.
pub fn derived_measure_table(atoms: &Atoms) -> Result<Vec<MeasureAssignment>> {
    BaseConcept::ALL.iter().map(|&c| measure_from_atoms(c, atoms)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct InclusionExclusionReport {
    pub union: f64,
    pub alternating_sum: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Compares `I_∪(α)` with the alternating sum of redundancies over all
/// non-empty sub-collections of `α`.
pub fn inclusion_exclusion_check(atoms: &Atoms, alpha: &Antichain) -> Result<InclusionExclusionReport> {
    if !crate::lattice::in_redundancy_domain(alpha) {
        return Err(PidError::Domain {
            context: "inclusion-exclusion (𝒜)".into(),
            antichain: alpha.to_string(),
        });
    }
    let n = alpha.n();
    let union = summate_with(&atom_selector(BaseConcept::Union, alpha)?, atoms);
    let cols = alpha.collections();
    let m = cols.len();
    let mut alternating_sum = 0.0;
    for pick in 1u64..(1u64 << m) {
        let chosen: Vec<SourceSet> = (0..m).filter(|i| pick >> i & 1 == 1).map(|i| cols[i]).collect();
        let sel = Selector::from_collections(BaseConcept::Redundancy, n, &chosen)?;
        let sign = if chosen.len() % 2 == 1 { 1.0 } else { -1.0 };
        alternating_sum += sign * summate_with(&sel, atoms);
    }
    let tolerance = ENGINE_TOLERANCE * (1u64 << m) as f64;
    Ok(InclusionExclusionReport {
        union,
        alternating_sum,
        tolerance,
        passed: (union - alternating_sum).abs() <= tolerance,
    })
}

/// Sum of the atoms that first appear at `∪α`: one on the union, zero on
/// each of its proper subsets.
pub fn proper_synergy_values(atoms: &Atoms, alpha: &Antichain) -> Result<f64> {
    let union = alpha.union();
    if union == 0 {
        return Err(PidError::Domain {
            context: "proper synergy (non-empty union)".into(),
            antichain: alpha.to_string(),
        });
    }
    let u = universe(atoms.n())?;
    Ok(u.atoms()
        .iter()
        .zip(&atoms.values)
        .filter(|(f, _)| proper_synergy_selects(f, union))
        .map(|(_, v)| v)
        .sum())
}

pub(crate) fn proper_synergy_selects(f: &ParthoodDistribution, union: u32) -> bool {
    f.value_at_bits(union)
        && (0..32)
            .filter(|i| union >> i & 1 == 1)
            .all(|i| !f.value_at_bits(union & !(1 << i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::info::{copy, xor};
    use crate::random::{random_atoms, random_binary_distribution};

    fn ac(n: usize, s: &str) -> Antichain {
        Antichain::parse(n, s).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn xor_and_copy_redundancy() {
        let r = decompose(&xor(), BaseConcept::Redundancy, MeasureSource::Reference).unwrap();
        let at = |r: &PidResult, s: &str| r.atoms().at_alpha(&ac(2, s)).unwrap();
        assert!(close(at(&r, "{1}{2}"), 0.0) && close(at(&r, "{1}"), 0.0) && close(at(&r, "{2}"), 0.0));
        assert!(close(at(&r, "{1,2}"), 1.0));
        let c = decompose(&copy(), BaseConcept::Redundancy, MeasureSource::Reference).unwrap();
        assert!(close(at(&c, "{1}{2}"), 1.0) && close(at(&c, "{1,2}"), 0.0));
        assert_eq!(r.meta().measure, REFERENCE_MEASURE_NAME);
    }

    #[test]
    fn every_concept_recovers_random_atoms() {
        for n in 1..=3 {
            let atoms = random_atoms(n, 11).unwrap();
            for c in BaseConcept::ALL {
                let m = measure_from_atoms(c, &atoms).unwrap();
                let back = invert(c, &m, atoms.total()).unwrap();
                assert!(back.max_abs_diff(&atoms) < 1e-9, "{c} at n = {n}");
            }
        }
    }

    #[test]
    fn direct_partner_inversions_agree_with_remapping() {
        let atoms = random_atoms(3, 5).unwrap();
        let rp = measure_from_atoms(BaseConcept::RedundancyPartner, &atoms).unwrap();
        let lat = build_lattice(synergy_domain(3).unwrap(), OrderKind::Synergy, Direction::Up);
        let vals: Vec<f64> = lat.nodes().iter().map(|a| rp.get(a).unwrap()).collect();
        let direct = moebius_invert(&lat, &vals, SumDirection::DownSum).unwrap();
        for (alpha, v) in lat.nodes().iter().zip(direct) {
            let want = atoms.at_alpha(&partner_overline(alpha)).unwrap();
            assert!((want - v).abs() < 1e-9);
        }
        let res = measure_from_atoms(BaseConcept::Restricted, &atoms).unwrap();
        let lat = build_lattice(redundancy_domain(3).unwrap(), OrderKind::Redundancy, Direction::Up);
        let vals: Vec<f64> = lat.nodes().iter().map(|a| res.get(a).unwrap()).collect();
        let direct = moebius_invert(&lat, &vals, SumDirection::UpSum).unwrap();
        let u = universe(3).unwrap();
        for (alpha, v) in lat.nodes().iter().zip(direct) {
            let f = f_tilde_from_antichain_unchecked(&partner_underline(alpha));
            let want = atoms.values()[u.atom_index(&f).unwrap()];
            assert!((want - v).abs() < 1e-9);
        }
    }

    #[test]
    fn preflight_rejects_broken_self_redundancy() {
        let d = xor();
        let m =
            MeasureAssignment::from_fn(BaseConcept::Redundancy, 2, |a| if a.len() == 1 { 0.5 } else { 0.0 }).unwrap();
        let err = decompose(
            &d,
            BaseConcept::Redundancy,
            MeasureSource::Assignment {
                assignment: m,
                label: "test".into(),
            },
        )
        .unwrap_err();
        assert!(err.to_string().contains("self-redundancy"), "{err}");
    }

    #[test]
    fn perturbed_atoms_fail_consistency() {
        let d = random_binary_distribution(2, 3).unwrap();
        let r = decompose(&d, BaseConcept::WeakSynergy, MeasureSource::Reference).unwrap();
        let mut bad = r.atoms().clone();
        bad.values[0] += 0.1;
        let report = verify_consistency(&bad, &d).unwrap();
        assert!(!report.passed);
        assert!(!report.failing.is_empty());
        assert!((report.worst_residual.abs() - 0.1).abs() < 1e-9);
        let good = verify_consistency(r.atoms(), &d).unwrap();
        assert!(good.passed);
        assert_eq!(good.residuals[0].1, 0.0);
    }

    #[test]
    fn derived_table_examples() {
        let r = decompose(&xor(), BaseConcept::Redundancy, MeasureSource::Reference).unwrap();
        let table = derived_measure_table(r.atoms()).unwrap();
        let both = ac(2, "{1}{2}");
        let get = |c: BaseConcept| table.iter().find(|m| m.concept() == c).unwrap().get(&both).unwrap();
        assert!(close(get(BaseConcept::Redundancy), 0.0));
        assert!(close(get(BaseConcept::WeakSynergy), 1.0));
        assert!(close(get(BaseConcept::Union), 0.0));
        assert!(close(get(BaseConcept::Vulnerable), 1.0));
    }

    #[test]
    fn inclusion_exclusion_and_proper_synergy() {
        let atoms = random_atoms(3, 2).unwrap();
        for alpha in redundancy_domain(3).unwrap() {
            assert!(inclusion_exclusion_check(&atoms, &alpha).unwrap().passed, "{alpha}");
        }
        assert!(inclusion_exclusion_check(&atoms, &ac(3, "{}")).is_err());
        let a = proper_synergy_values(&atoms, &ac(3, "{1}{2,3}")).unwrap();
        let b = proper_synergy_values(&atoms, &ac(3, "{1,2}{3}")).unwrap();
        assert_eq!(a, b);
        assert!(proper_synergy_values(&atoms, &ac(3, "{}")).is_err());
        let r = decompose(&xor(), BaseConcept::Redundancy, MeasureSource::Reference).unwrap();
        assert!(close(proper_synergy_values(r.atoms(), &ac(2, "{1}{2}")).unwrap(), 1.0));
    }

    #[test]
    fn union_path_is_the_weak_synergy_transform() {
        let d = random_binary_distribution(3, 9).unwrap();
        let total = d.mutual_information(SourceSet::full(3).unwrap());
        let union = reference_assignment(BaseConcept::Union, &d).unwrap();
        let via_union = invert(BaseConcept::Union, &union, total).unwrap();
        let ws = union_to_weak_synergy(&union, total).unwrap();
        assert_eq!(via_union, invert(BaseConcept::WeakSynergy, &ws, total).unwrap());
    }
}
