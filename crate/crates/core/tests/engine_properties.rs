use pid_core::concepts::{reference_assignment, summate, BaseConcept};
use pid_core::engine::{
    decompose, derived_measure_table, invert, measure_from_atoms, verify_consistency, Atoms, MeasureSource,
};
use pid_core::info::{load_joint, write_joint, JointFormat};
use pid_core::lattice::{all_subsets, universe, Antichain, SourceSet};
use pid_core::random::{random_atoms, random_distribution};
use pid_oracle::{redundancy_system, solve_dense, DenseSolution};

fn pmf_of(d: &pid_core::JointDistribution) -> pid_oracle::Pmf {
    d.support().collect()
}

#[test]
fn redundancy_atoms_match_dense_solve() {
    for seed in 0..50u64 {
        let n = 2 + (seed % 2) as usize;
        let alphabets: Vec<usize> = (0..n).map(|i| 2 + ((seed as usize + i) % 2)).collect();
        let d = random_distribution(&alphabets, 2, seed).unwrap();
        let r = decompose(&d, BaseConcept::Redundancy, MeasureSource::Reference).unwrap();
        let DenseSolution::Unique(x) = solve_dense(&redundancy_system(&pmf_of(&d), n)) else {
            panic!("redundancy system must have a unique solution");
        };
        let u = universe(n).unwrap();
        for (f, v) in pid_oracle::parthood_distributions(n).iter().zip(x) {
            let ours = u.atoms().iter().position(|g| g.values() == *f).unwrap();
            assert!((r.atoms().values()[ours] - v).abs() < 1e-9, "seed {seed}");
        }
    }
}

#[test]
fn every_path_is_consistent_on_random_distributions() {
    for seed in 0..20u64 {
        let n = 2 + (seed % 2) as usize;
        let d = random_distribution(&vec![3; n], 2, 100 + seed).unwrap();
        for c in BaseConcept::ALL {
            let r = decompose(&d, c, MeasureSource::Reference).unwrap();
            assert!(verify_consistency(r.atoms(), &d).unwrap().passed, "{c}, seed {seed}");
        }
    }
}

#[test]
fn round_trip_through_every_concept_at_four_sources() {
    let atoms = random_atoms(4, 3).unwrap();
    for c in BaseConcept::ALL {
        let m = measure_from_atoms(c, &atoms).unwrap();
        let back = invert(c, &m, atoms.total()).unwrap();
        assert!(back.max_abs_diff(&atoms) < 1e-9, "{c}");
    }
}

#[test]
fn derived_table_identities() {
    let d = random_distribution(&[2, 3, 2], 3, 8).unwrap();
    let r = decompose(&d, BaseConcept::WeakSynergy, MeasureSource::Reference).unwrap();
    let total = r.atoms().total();
    let table = derived_measure_table(r.atoms()).unwrap();
    let get = |c: BaseConcept, a: &Antichain| table.iter().find(|m| m.concept() == c).unwrap().get(a).unwrap();
    for alpha in universe(3).unwrap().antichains() {
        if pid_core::lattice::in_redundancy_domain(alpha) && pid_core::lattice::in_synergy_domain(alpha) {
            assert!((get(BaseConcept::Vulnerable, alpha) - (total - get(BaseConcept::Redundancy, alpha))).abs() < 1e-9);
            assert!((get(BaseConcept::Union, alpha) - (total - get(BaseConcept::WeakSynergy, alpha))).abs() < 1e-9);
        }
    }
    for a in all_subsets(3).into_iter().filter(|a| !a.is_empty()) {
        let single = Antichain::singleton(a).unwrap();
        let info = d.mutual_information(a);
        assert!((summate(BaseConcept::Redundancy, &single, r.atoms()).unwrap() - info).abs() < 1e-9);
    }
    let zero = Atoms::zeros(3).unwrap();
    for m in derived_measure_table(&zero).unwrap() {
        assert!(m.values().iter().all(|&v| v == 0.0));
    }
}

#[test]
fn reference_measure_obeys_self_identities() {
    let d = random_distribution(&[2, 2, 3], 2, 21).unwrap();
    let red = reference_assignment(BaseConcept::Redundancy, &d).unwrap();
    let ws = reference_assignment(BaseConcept::WeakSynergy, &d).unwrap();
    let full = SourceSet::full(3).unwrap();
    for a in all_subsets(3) {
        let single = Antichain::singleton(a).unwrap();
        if !a.is_empty() {
            assert!((red.get(&single).unwrap() - d.mutual_information(a)).abs() < 1e-12);
        }
        if a != full {
            let cmi = d.conditional_mi(a.complement(), a);
            assert!((ws.get(&single).unwrap() - cmi).abs() < 1e-9);
        }
    }
}

#[test]
fn distribution_files_round_trip_the_decomposition() {
    let dir = tempfile::tempdir().unwrap();
    let d = random_distribution(&[2, 2], 2, 5).unwrap();
    for (format, name) in [(JointFormat::Json, "d.json"), (JointFormat::Tsv, "d.tsv")] {
        let path = dir.path().join(name);
        std::fs::write(&path, write_joint(&d, format)).unwrap();
        let back = load_joint(&path, format).unwrap();
        let a = decompose(&d, BaseConcept::Redundancy, MeasureSource::Reference).unwrap();
        let b = decompose(&back, BaseConcept::Redundancy, MeasureSource::Reference).unwrap();
        assert!(a.atoms().max_abs_diff(b.atoms()) < 1e-12);
    }
    assert!(load_joint(&dir.path().join("missing.json"), JointFormat::Json).is_err());
}
