use std::collections::BTreeSet;

use chainiso::families::{count, enumerate, height_profile};
use chainiso::formulas as fm;
use chainiso::green::{dstar_related, gap_vector, lstar_related, rstar_related, span};
use chainiso::verify::{self, VerifyConfig};
use chainiso::{ExactInt, Family, FamilySlice, MapFlags, PartialInjection};
use proptest::prelude::*;

fn element(family: Family, n: u32) -> impl Strategy<Value = PartialInjection> {
    let all: Vec<_> = enumerate(FamilySlice::new(family, n)).collect();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn pair(family: Family) -> impl Strategy<Value = (PartialInjection, PartialInjection)> {
    (1u32..=9).prop_flat_map(move |n| (element(family, n), element(family, n)))
}

proptest! {
    #[test]
    fn products_stay_in_family((a, b) in pair(Family::Ddp)) {
        let ab = a.compose(&b).unwrap();
        prop_assert!(Family::Ddp.contains(&ab));
        prop_assert!(ab.height() <= a.height().min(b.height()));
    }

    #[test]
    fn oddp_products_stay_in_family((a, b) in pair(Family::Oddp)) {
        prop_assert!(Family::Oddp.contains(&a.compose(&b).unwrap()));
    }

    #[test]
    fn inverse_gives_idempotents((a, _) in pair(Family::Dp)) {
        let e = a.compose(&a.inverse()).unwrap();
        prop_assert!(e.classify().contains(MapFlags::IDEMPOTENT | MapFlags::PARTIAL_IDENTITY));
        prop_assert_eq!(e.domain(), a.domain());
    }

    #[test]
    fn starred_relations_refine_dstar((a, b) in pair(Family::Ddp)) {
        if lstar_related(&a, &b).unwrap() || rstar_related(&a, &b).unwrap() {
            prop_assert!(dstar_related(Family::Ddp, &a, &b).unwrap());
        }
    }

    #[test]
    fn span_is_gap_total((a, _) in pair(Family::Dp)) {
        if !a.is_empty() {
            prop_assert_eq!(span(&a).unwrap(), gap_vector(&a).total());
        }
    }

    #[test]
    fn maps_round_trip_through_json((a, _) in pair(Family::DdpStar)) {
        let text = serde_json::to_string(&a).unwrap();
        let back: PartialInjection = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn height_slices_partition_the_family() {
    for family in Family::ALL {
        for n in 0..=9 {
            let whole = count(&FamilySlice::new(family, n));
            let sliced: u64 = (0..=n)
                .map(|p| count(&FamilySlice::new(family, n).with_height(p)))
                .sum();
            assert_eq!(whole, sliced, "{family} n={n}");
            assert_eq!(height_profile(family, n).iter().sum::<u64>(), whole);
        }
    }
}

#[test]
fn ddp_star_is_reversing_part_of_ddp() {
    for n in 0..=8 {
        let ddp: BTreeSet<_> = enumerate(FamilySlice::new(Family::Ddp, n)).collect();
        let star: BTreeSet<_> = enumerate(FamilySlice::new(Family::DdpStar, n)).collect();
        let oddp: BTreeSet<_> = enumerate(FamilySlice::new(Family::Oddp, n)).collect();
        assert!(star.is_subset(&ddp));
        assert_eq!(star.union(&oddp).count(), ddp.len());
        assert!(star.intersection(&oddp).all(|m| m.height() <= 1));
    }
}

#[test]
fn machine_and_exact_tables_agree_until_overflow() {
    let exact =
        chainiso::ExactTable::from_formulas(Family::Ddp, chainiso::Statistic::Height, 30).unwrap();
    let machine =
        chainiso::MachineTable::from_formulas(Family::Ddp, chainiso::Statistic::Height, 30)
            .unwrap();
    for (e, m) in exact.flatten().zip(machine.flatten()) {
        assert_eq!(*e, ExactInt::from(*m));
    }
    assert!(fm::order_ddp::<u64>(80).is_err());
    assert!(fm::order_ddp::<ExactInt>(80).is_ok());
}

#[test]
fn reports_serialise_with_exact_decimal_values() {
    let cfg = VerifyConfig::default();
    let corrupted = |n: u32, p: u32| -> chainiso::Result<ExactInt> {
        let v = fm::f_oddp_height::<ExactInt>(n, p)?;
        Ok(if (n, p) == (6, 3) { v * 1000 } else { v })
    };
    let report = verify::check_height_table_with("height-table", Family::Oddp, 8, &corrupted);
    assert!(!report.passed());
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["status"], "fail");
    assert_eq!(json["counterexample"]["expected"], "35000");
    assert_eq!(json["counterexample"]["actual"], "35");
    assert!(report.to_string().starts_with("FAIL height-table [oddp]"));
    assert!(verify::all_passed(&verify::check_orders(6, &cfg)));
}
