use std::collections::BTreeSet;

use sca_analysis::{is_nested_under, is_pure, GliderDescription};
use sca_enumerate::tables::{ONE_STRAND, TWO_STRAND};
use sca_enumerate::{
    enumerate_pure, extend_pure, oracle_enumerate, v1, OracleConfig, PureConfig, VSet,
};

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
}

#[test]
fn table_rows_are_consistent_with_their_rules() {
    for e in ONE_STRAND.iter().chain(&TWO_STRAND) {
        let p = e.period().unwrap();
        assert_eq!(p.speed(), e.speed(), "item {}", e.item);
        assert_eq!(
            p.turning_rule().unwrap(),
            e.turning_rule(),
            "item {}",
            e.item
        );
        assert_eq!(
            p.crossing_rule().unwrap(),
            e.crossing_rule(),
            "item {}",
            e.item
        );
    }
}

#[test]
fn oracle_is_independent_of_thread_count() {
    let cfg = OracleConfig::new(2, 3, 256);
    let one = pool(1).install(|| oracle_enumerate(&cfg));
    let four = pool(4).install(|| oracle_enumerate(&cfg));
    assert_eq!(one, four);
}

#[test]
fn v1_extends_to_v2() {
    let v2 = extend_pure(&v1(), &PureConfig::default()).vset;
    assert_eq!(v2, enumerate_pure(2, &PureConfig::default()).vset);
    assert_eq!(v2.len(), 32);
    assert_eq!(v2.classes().len(), 10);
}

fn closed_under_shifts_and_mirrors(v: &VSet) {
    for d in v.iter() {
        for s in d.shifts() {
            assert!(v.contains(&s), "{s} missing");
        }
        assert!(v.contains(&d.mirrored()), "mirror of {d} missing");
    }
}

#[test]
fn pure_sets_are_closed_and_nested() {
    for n in 1..=3 {
        let v = enumerate_pure(n, &PureConfig::default()).vset;
        assert_eq!(v.strands, n);
        closed_under_shifts_and_mirrors(&v);
        for d in v.iter() {
            assert_eq!(d.period.strand_count(), n);
            assert!(!d.period.has_crossing());
            assert_eq!(is_pure(&d.period), Ok(true), "{d}");
            assert_eq!(is_nested_under(&d.period).as_ref(), Ok(&d.turning), "{d}");
            assert_eq!(GliderDescription::of(d.period.clone()).unwrap(), *d);
        }
    }
}

#[test]
fn description_lines_round_trip() {
    let v = enumerate_pure(2, &PureConfig::default()).vset;
    for d in v.iter() {
        let back: GliderDescription = d.to_string().parse().unwrap();
        assert_eq!(&back, d);
    }
}

#[test]
fn v3_counts_by_speed() {
    let v = enumerate_pure(3, &PureConfig::default()).vset;
    let speeds: BTreeSet<String> = v.iter().map(|d| d.period.speed().to_string()).collect();
    assert_eq!(v.len(), 80);
    assert!(speeds.contains("1/1") && speeds.contains("-1/1"));
}
