//! Randomized round-trip and transport checks over permutations drawn at
//! sizes past the exhaustive bounds.

use proptest::prelude::*;

use zigzag_core::bijections::{
    block_assemble, block_decompose, circle_bijection, circle_bijection_inverse, code3_inverse,
    code_bijection, hat_code_inverse,
};
use zigzag_core::perm::{cyclic_shift, enumerate_up_down, prepend_min, zigzag_interleave, Perm};
use zigzag_core::stats::{
    alt_descent_set, altdesc_from_code, code3, d3_set, hat_code, i3, i_hat, inv,
};

fn arb_perm(max_n: usize) -> impl Strategy<Value = Perm> {
    (1..=max_n).prop_flat_map(|n| {
        Just((1..=n as u8).collect::<Vec<u8>>())
            .prop_shuffle()
            .prop_map(|w| Perm::from_one_line(&w).expect("shuffled identity is a permutation"))
    })
}

fn arb_up_down(max_n: usize) -> impl Strategy<Value = Perm> {
    (1..=max_n).prop_flat_map(|n| {
        prop::sample::select(enumerate_up_down(n).expect("within the enumeration bound"))
    })
}

proptest! {
    #[test]
    fn circle_round_trips_and_transports(tau in arb_perm(9)) {
        let sigma = prepend_min(&tau);
        let omega = circle_bijection(&sigma).unwrap();
        prop_assert_eq!(omega.n(), sigma.n() - 1);
        prop_assert_eq!(circle_bijection_inverse(&omega).unwrap(), sigma.clone());
        prop_assert_eq!(d3_set(&sigma), alt_descent_set(&omega));
    }

    #[test]
    fn code_bijection_round_trips_and_transports(omega in arb_perm(9)) {
        let sigma = code_bijection(&omega);
        prop_assert_eq!(sigma.n(), omega.n() + 1);
        prop_assert!(sigma.first_entry_is_min());
        prop_assert_eq!(code3(&sigma), hat_code(&omega));
        prop_assert_eq!(d3_set(&sigma), alt_descent_set(&omega));
        prop_assert_eq!(i3(&sigma), i_hat(&omega));
    }

    #[test]
    fn codes_invert(p in arb_perm(10)) {
        prop_assert_eq!(hat_code_inverse(&hat_code(&p)).unwrap(), p.clone());
        let lifted = prepend_min(&p);
        prop_assert_eq!(code3_inverse(&code3(&lifted)).unwrap(), lifted);
    }

    #[test]
    fn blocks_round_trip(p in arb_up_down(9)) {
        let blocks = block_decompose(&p).unwrap();
        prop_assert_eq!(block_assemble(&blocks).unwrap(), p);
    }

    #[test]
    fn cyclic_shifts_never_change_the_triple_code(p in arb_perm(10), k in 0usize..10) {
        prop_assert_eq!(code3(&cyclic_shift(&p, k)), code3(&p));
        prop_assert_eq!(d3_set(&cyclic_shift(&p, k)), d3_set(&p));
    }

    #[test]
    fn decoded_alternating_descents_agree(p in arb_perm(10)) {
        let decoded = altdesc_from_code(&hat_code(&p), p.n()).unwrap();
        prop_assert_eq!(decoded, alt_descent_set(&p));
    }

    #[test]
    fn interleaving_carries_inversions(p in arb_perm(10)) {
        prop_assert_eq!(inv(&zigzag_interleave(&p)), i_hat(&p));
    }
}
