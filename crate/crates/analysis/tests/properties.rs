use proptest::prelude::*;
use sca_analysis::properties::{self, is_glider};
use sca_analysis::{find_period, Period};
use sca_core::{CellContent, CrossingRule, Generation, TurningRule};

fn generation() -> impl Strategy<Value = Generation> {
    prop::collection::vec(prop::sample::select(CellContent::ALL.to_vec()), 1..5)
        .prop_map(|cells| Generation::new(0, cells))
        .prop_filter("one to three strands", |g| {
            (1..=3).contains(&g.strand_count())
        })
}

fn rules() -> impl Strategy<Value = (TurningRule, CrossingRule)> {
    (0u16..512, 0u16..512).prop_map(|(t, c)| {
        (
            TurningRule::new(t & !(1 << 4)).unwrap(),
            CrossingRule::new(c).unwrap(),
        )
    })
}

fn settle(g: &Generation, t: TurningRule, c: CrossingRule) -> Option<Period> {
    find_period(g, t, c, 200).ok().map(|info| info.period)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn every_fact_holds_on_random_cycles(g in generation(), (t, c) in rules()) {
        if let Some(p) = settle(&g, t, c) {
            for prop in &properties::ALL {
                prop_assert_eq!((prop.check)(&p, Some((t, c))), Ok(()), "{} on {}", prop.name, p);
            }
        }
    }

    #[test]
    fn mirrored_gliders_stay_gliders(g in generation(), (t, c) in rules()) {
        if let Some(p) = settle(&g, t, c) {
            let m = p.mirrored();
            prop_assert_eq!(is_glider(&p), is_glider(&m));
            prop_assert_eq!(m.speed().displacement, -p.speed().displacement);
            prop_assert_eq!(m.turning_rule().ok(), p.turning_rule().ok().map(|r| r.mirrored()));
        }
    }

    #[test]
    fn rotations_share_speed_and_class(g in generation(), (t, c) in rules(), r in 0usize..8) {
        if let Some(p) = settle(&g, t, c) {
            let q = p.rotated(r % p.len());
            prop_assert_eq!(q.speed(), p.speed());
            prop_assert_eq!(q.canonical_rotation(), p.canonical_rotation());
        }
    }
}
