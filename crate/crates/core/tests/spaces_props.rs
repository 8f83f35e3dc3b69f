//! Property tests for sublevels, covers, refinements and towers.

mod common;

use hlc_core::spaces::{
    auto_tower, common_refinement, is_hlc_star_refinement, is_refinement, is_star_refinement, maximal_simplex_cover,
    open_star_cover, validate_tower, TowerOutcome,
};
use hlc_core::value::ratio;
use hlc_core::PrimeField;
use proptest::prelude::*;

fn masks() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..(1 << 7), 1..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sublevels_grow(fc in common::filtered(7, 10), a in 0i64..=6, b in 0i64..=6) {
        let (s, t) = (ratio(a.min(b), 2), ratio(a.max(b), 2));
        prop_assert!(fc.sublevel(&s).is_subcomplex_of(&fc.sublevel(&t)));
        prop_assert!(fc.sublevel_vertices(&s).is_subset(&fc.sublevel_vertices(&t)));
        for simplex in fc.sublevel(&t).iter() {
            prop_assert!(fc.simplex_value(simplex) <= t);
        }
    }

    #[test]
    fn refinement_hierarchy(
        fc in common::filtered(7, 10),
        a in 0i64..=6,
        b in 0i64..=6,
        fine in masks(),
        coarse in masks(),
    ) {
        let (s, t) = (ratio(a.min(b), 2), ratio(a.max(b), 2));
        let alpha = common::cover_from_masks(&fc, &s, &fine);
        let beta = common::cover_from_masks(&fc, &t, &coarse);
        prop_assume!(!alpha.is_empty());
        alpha.validate(&fc).unwrap();
        beta.validate(&fc).unwrap();
        let f = PrimeField::f2();
        let star = is_star_refinement(&alpha, &beta).unwrap();
        if star {
            prop_assert!(is_refinement(&alpha, &beta).unwrap());
        }
        if is_hlc_star_refinement(&f, &fc, &alpha, &beta, 1).unwrap() {
            prop_assert!(star);
        }
        if a != b {
            prop_assert!(is_refinement(&beta, &alpha).is_err());
        }
    }

    #[test]
    fn common_refinement_refines_both(fc in common::filtered(7, 10), a in 0i64..=6, m1 in masks(), m2 in masks()) {
        let t = ratio(a, 2);
        let alpha = common::cover_from_masks(&fc, &t, &m1);
        let beta = common::cover_from_masks(&fc, &t, &m2);
        prop_assume!(!alpha.is_empty());
        let both = common_refinement(&alpha, &beta).unwrap();
        both.validate(&fc).unwrap();
        prop_assert!(is_refinement(&both, &alpha).unwrap());
        prop_assert!(is_refinement(&both, &beta).unwrap());
    }

    #[test]
    fn standard_covers_are_valid(fc in common::filtered(7, 10), a in 0i64..=6) {
        let t = ratio(a, 2);
        prop_assume!(!fc.sublevel_vertices(&t).is_empty());
        let stars = open_star_cover(&fc, &t);
        let simplices = maximal_simplex_cover(&fc, &t);
        stars.validate(&fc).unwrap();
        simplices.validate(&fc).unwrap();
        prop_assert!(simplices.unsupported(&fc.sublevel(&t)).is_none());
        prop_assert!(is_refinement(&simplices, &stars).unwrap());
    }

    #[test]
    fn built_towers_validate(fc in common::filtered(6, 8), a in 0i64..=2, len in 1i64..=6, d in 1usize..=2) {
        let (s, t) = (ratio(a, 2), ratio(a + len, 2));
        prop_assume!(!fc.sublevel_vertices(&s).is_empty());
        let f = PrimeField::f2();
        match auto_tower(&f, &fc, &s, &t, d, d - 1, None).unwrap() {
            TowerOutcome::Built(tower) => {
                prop_assert_eq!(tower.depth(), d);
                prop_assert_eq!(&tower.bottom().index, &s);
                prop_assert_eq!(&tower.top().index, &t);
                let cert = validate_tower(&f, &fc, &tower, d - 1).unwrap();
                prop_assert!(cert.valid, "{:?}", cert.diagnostics);
            }
            TowerOutcome::Failed { level, .. } => prop_assert!(level < d),
        }
    }
}
