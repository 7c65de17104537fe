use pid_core::lattice::{
    antichain_from_f, antichain_from_f_tilde, enumerate_antichains, enumerate_parthood_distributions, f_from_antichain,
    f_tilde_from_antichain, partner_overline, partner_underline, redundancy_domain, synergy_domain, universe,
    Antichain, SourceSet,
};
use proptest::prelude::*;

fn oracle_family(a: &Antichain) -> Vec<u32> {
    a.collections().iter().map(|s| s.bits()).collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=4 {
        let mut ours: Vec<u32> = enumerate_parthood_distributions(n)
            .unwrap()
            .iter()
            .map(|f| f.table())
            .collect();
        let mut brute: Vec<u32> = pid_oracle::parthood_distributions(n)
            .iter()
            .map(|f| pid_oracle::table_bits(f))
            .collect();
        ours.sort_unstable();
        brute.sort_unstable();
        assert_eq!(ours, brute, "n = {n}");

        let mut fams: Vec<Vec<u32>> = enumerate_antichains(n).unwrap().iter().map(oracle_family).collect();
        let mut brute_fams = pid_oracle::antichains(n);
        for f in &mut brute_fams {
            f.sort_unstable();
        }
        for f in &mut fams {
            f.sort_unstable();
        }
        fams.sort();
        brute_fams.sort();
        assert_eq!(fams, brute_fams);
    }
}

#[test]
fn five_source_counts() {
    assert_eq!(enumerate_antichains(5).unwrap().len(), 7581);
    assert_eq!(enumerate_parthood_distributions(5).unwrap().len(), 7579);
    assert!(enumerate_antichains(6).is_err());
}

#[test]
fn correspondences_are_bijections() {
    for n in 1..=4 {
        for alpha in redundancy_domain(n).unwrap() {
            assert_eq!(antichain_from_f(&f_from_antichain(&alpha).unwrap()), alpha);
        }
        for alpha in synergy_domain(n).unwrap() {
            assert_eq!(antichain_from_f_tilde(&f_tilde_from_antichain(&alpha).unwrap()), alpha);
        }
        for f in universe(n).unwrap().atoms() {
            assert_eq!(f_from_antichain(&antichain_from_f(f)).unwrap(), *f);
            assert_eq!(f_tilde_from_antichain(&antichain_from_f_tilde(f)).unwrap(), *f);
            let ones = pid_oracle::minimal_ones(&f.values());
            let mut ours = oracle_family(&antichain_from_f(f));
            ours.sort_unstable();
            assert_eq!(ours, ones);
            let zeros = pid_oracle::maximal_zeros(&f.values());
            let mut ours = oracle_family(&antichain_from_f_tilde(f));
            ours.sort_unstable();
            assert_eq!(ours, zeros);
        }
    }
}

#[test]
fn partner_mappings_are_mutual_inverses() {
    for n in 1..=4 {
        for alpha in synergy_domain(n).unwrap() {
            assert_eq!(partner_underline(&partner_overline(&alpha)), alpha);
        }
        for alpha in redundancy_domain(n).unwrap() {
            assert_eq!(partner_overline(&partner_underline(&alpha)), alpha);
        }
        for alpha in universe(n).unwrap().antichains() {
            assert_eq!(partner_underline(&partner_overline(alpha)), *alpha);
            assert_eq!(partner_overline(&partner_underline(alpha)), *alpha);
        }
    }
}

fn arb_antichain(n: usize) -> impl Strategy<Value = Antichain> {
    let count = universe(n).unwrap().antichains().len();
    (0..count).prop_map(move |i| universe(n).unwrap().antichains()[i].clone())
}

proptest! {
    #[test]
    fn display_parse_round_trip(alpha in (1usize..=4).prop_flat_map(arb_antichain)) {
        let text = alpha.to_string();
        prop_assert_eq!(Antichain::parse(alpha.n(), &text).unwrap(), alpha);
    }

    #[test]
    fn parse_is_order_insensitive(picks in proptest::collection::vec(0u32..16, 1..5)) {
        let n = 4;
        let sets: Vec<SourceSet> = picks.iter().map(|&b| SourceSet::new(n, b).unwrap()).collect();
        if let Ok(alpha) = Antichain::new(n, sets.clone()) {
            let mut rev = sets;
            rev.reverse();
            let text: String = rev.iter().map(|s| s.to_string()).collect();
            prop_assert_eq!(Antichain::parse(n, &text).unwrap(), alpha);
        }
    }
}
