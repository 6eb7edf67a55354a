mod common;

use divide_core::generators::{from_chords, gen_chords, parse_chords, with_curl, CurlSide};
use divide_core::report::{build_report, DivideReport, Input};
use divide_core::theorem::{analyze, DEFAULT_DEPTH};
use divide_core::SignNormalization;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chord_divides_pass_every_check(n in 1usize..8, seed in any::<u64>()) {
        let set = gen_chords(n, seed).unwrap();
        let map = from_chords(&set).unwrap();
        let a = analyze(&map, SignNormalization::Standard, DEFAULT_DEPTH).unwrap();
        prop_assert_eq!(a.failures().count(), 0);
        prop_assert!(a.findings.is_empty());
        prop_assert_eq!(a.stats.delta, set.interleaved_pairs());
        prop_assert_eq!(a.stats.r, n);
        prop_assert_eq!(a.lambda(), &num_bigint::BigInt::from(common::lefschetz(&a.n)));
        if a.stats.connected {
            prop_assert!(a.stats.cellular);
        }
    }

    #[test]
    fn curls_keep_hard_checks(n in 2usize..6, seed in any::<u64>(), pick in any::<prop::sample::Index>(), left in any::<bool>()) {
        let map = from_chords(&gen_chords(n, seed).unwrap()).unwrap();
        let edge = pick.index(map.edge_count());
        let side = if left { CurlSide::Left } else { CurlSide::Right };
        let curled = with_curl(&map, edge, side).unwrap();
        let a = analyze(&curled, SignNormalization::Standard, DEFAULT_DEPTH).unwrap();
        prop_assert_eq!(a.failures().count(), 0);
        prop_assert_eq!(a.stats.delta, map.crossing_count() + 1);
        prop_assert_eq!(a.lambda(), &num_bigint::BigInt::from(common::lefschetz(&a.n)));
    }

    #[test]
    fn documents_round_trip(n in 1usize..7, seed in any::<u64>()) {
        let set = gen_chords(n, seed).unwrap();
        let json = set.to_json();
        prop_assert_eq!(&parse_chords(&json).unwrap(), &set);
        let map = from_chords(&set).unwrap();
        prop_assert_eq!(&divide_core::parse_divide(&map.to_json()).unwrap(), &map);
        let report = build_report("x", &Input::Chords(set.clone(), map), DEFAULT_DEPTH).unwrap();
        let back: DivideReport = serde_json::from_str(&report.to_json()).unwrap();
        prop_assert_eq!(back, report);
    }
}
