use pid_core::info::{parse_joint, write_joint, JointFormat};
use pid_core::lattice::SourceSet;
use pid_core::random::random_distribution;
use proptest::prelude::*;

fn dist_strategy() -> impl Strategy<Value = pid_core::JointDistribution> {
    (proptest::collection::vec(2usize..=3, 1..=3), 2usize..=3, any::<u64>())
        .prop_map(|(alph, t, seed)| random_distribution(&alph, t, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chain_rule(d in dist_strategy(), a_bits in 0u32..8, b_bits in 0u32..8) {
        let n = d.n_sources();
        let mask = (1u32 << n) - 1;
        let b = SourceSet::new(n, b_bits & mask).unwrap();
        let a = SourceSet::new(n, a_bits & mask & !b.bits()).unwrap();
        let lhs = d.mutual_information(a.union(b));
        let rhs = d.mutual_information(b) + d.conditional_mi(a, b);
        prop_assert!((lhs - rhs).abs() < 1e-10);
    }

    #[test]
    fn monotone_and_nonnegative(d in dist_strategy(), a_bits in 0u32..8, extra in 0u32..8) {
        let n = d.n_sources();
        let mask = (1u32 << n) - 1;
        let a = SourceSet::new(n, a_bits & mask).unwrap();
        let b = SourceSet::new(n, (a_bits | extra) & mask).unwrap();
        prop_assert!(d.mutual_information(a) >= 0.0);
        prop_assert!(d.conditional_mi(b, a) >= 0.0);
        prop_assert!(d.mutual_information(a) <= d.mutual_information(b) + 1e-12);
    }

    #[test]
    fn matches_hash_map_oracle(d in dist_strategy(), a_bits in 1u32..8) {
        let n = d.n_sources();
        let a = SourceSet::new(n, a_bits & ((1 << n) - 1)).unwrap();
        let pmf: pid_oracle::Pmf = d.support().collect();
        let want = pid_oracle::mutual_information(&pmf, n, &pid_oracle::members(a.bits()));
        prop_assert!((d.mutual_information(a) - want.max(0.0)).abs() < 1e-10);
    }

    #[test]
    fn json_and_tsv_round_trip(d in dist_strategy()) {
        for f in [JointFormat::Json, JointFormat::Tsv] {
            let text = write_joint(&d, f);
            let back = parse_joint(&text, f).unwrap();
            prop_assert_eq!(back.source_alphabets(), d.source_alphabets());
            for (state, p) in d.support() {
                prop_assert_eq!(back.probability(&state), Some(p));
            }
        }
    }
}
