//! Property tests for the local connectedness shift.

mod common;

use hlc_core::lcs::{candidate_deltas, compute_lcs, delta_hlc_check, lipschitz_check};
use hlc_core::spaces::FilteredComplex;
use hlc_core::value::{int, ratio};
use hlc_core::{Ext, PrimeField, Rationals};
use proptest::prelude::*;

fn top(fc: &FilteredComplex) -> usize {
    fc.complex().dim().unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lcs_is_the_least_passing_candidate(fc in common::filtered(6, 9)) {
        let f = PrimeField::f2();
        let lcs = compute_lcs(&f, &fc, top(&fc)).unwrap().lcs;
        let holds: Vec<bool> = candidate_deltas(&fc)
            .iter()
            .map(|c| delta_hlc_check(&f, &fc, c, top(&fc)).unwrap().holds)
            .collect();
        prop_assert!(holds.windows(2).all(|w| !w[0] || w[1]), "not monotone: {:?}", holds);
        let least = candidate_deltas(&fc).into_iter().zip(&holds).find(|(_, h)| **h).map(|(c, _)| c);
        prop_assert_eq!(lcs.clone(), least.map(Ext::Finite).unwrap_or(Ext::Infinite));
        prop_assert_eq!(lcs == Ext::zero(), delta_hlc_check(&f, &fc, &int(0), top(&fc)).unwrap().holds);
    }

    #[test]
    fn off_grid_shifts_agree_with_the_grid(fc in common::filtered(6, 9), num in 1i64..=3) {
        let f = PrimeField::f2();
        let cands = candidate_deltas(&fc);
        let frac = ratio(num, 4);
        for (i, c) in cands.iter().enumerate() {
            let next = cands.get(i + 1).cloned().unwrap_or_else(|| c + int(1));
            let between = c + (&next - c) * &frac;
            prop_assert_eq!(
                delta_hlc_check(&f, &fc, c, top(&fc)).unwrap().holds,
                delta_hlc_check(&f, &fc, &between, top(&fc)).unwrap().holds
            );
        }
    }

    #[test]
    fn shifting_values_keeps_lcs(fc in common::filtered(6, 9), num in -8i64..=8, den in 1i64..=4) {
        let shifted = fc.shifted(&ratio(num, den));
        prop_assert_eq!(
            compute_lcs(&Rationals, &fc, top(&fc)).unwrap().lcs,
            compute_lcs(&Rationals, &shifted, top(&fc)).unwrap().lcs
        );
    }

    #[test]
    fn lcs_is_lipschitz(fc in common::filtered(6, 9), moves in prop::collection::vec(-2i64..=2, 6)) {
        let values = fc.values().iter().zip(&moves).map(|(v, &m)| v + ratio(m, 4)).collect();
        let g = fc.with_values(values).unwrap();
        let rep = lipschitz_check(&PrimeField::new(3).unwrap(), &fc, &g, top(&fc)).unwrap();
        prop_assert!(rep.holds, "{:?}", rep);
        prop_assert!(rep.sup_distance <= ratio(1, 2));
    }
}
