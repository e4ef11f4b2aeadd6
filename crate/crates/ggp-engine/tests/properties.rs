use ggp_engine::derivative::{
    derivative_left_multi, derivative_left_seg, derivative_right_multi, derivative_right_seg,
    hd_left, hd_right, removal_right_seg,
};
use ggp_engine::integral::{integral_left_seg, integral_right_seg, ul};
use ggp_engine::involution::zelevinsky_involution;
use ggp_engine::rat::{int, rat, Rat};
use ggp_engine::{CuspidalLabel, Multisegment, Segment};
use proptest::prelude::*;

fn lab() -> CuspidalLabel {
    CuspidalLabel::self_dual("R", 1)
}

fn lab2() -> CuspidalLabel {
    CuspidalLabel::self_dual("T", 2)
}

/// A random segment on one of two labels, integer or half-integer
/// lattice, endpoints within a small window.
fn arb_segment() -> impl Strategy<Value = Segment> {
    (0..2usize, 0..2i64, -3..3i64, 0..4i64).prop_map(|(which, half_shift, a2, len)| {
        let label = if which == 0 { lab() } else { lab2() };
        let a = int(a2) + rat(half_shift, 2);
        Segment::make(label, a, a + int(len)).unwrap()
    })
}

fn arb_multisegment(max_len: usize) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec(arb_segment(), 0..=max_len).prop_map(Multisegment::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn theta_is_involutive(m in arb_multisegment(6)) {
        prop_assert_eq!(m.theta().theta(), m);
    }

    #[test]
    fn ascending_order_is_compatible_with_precedence(m in arb_multisegment(6)) {
        let ord = m.ascending_order();
        for i in 0..ord.len() {
            for j in i + 1..ord.len() {
                prop_assert!(!ord[j].precedes(&ord[i]));
            }
        }
    }

    #[test]
    fn normal_form_is_order_independent(m in arb_multisegment(6), seed in any::<u64>()) {
        // The normal form does not depend on the order in which the
        // segments are listed when the multisegment is built.
        use ggp_engine::integral::integral_right_multi;
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let reference = ul(&m);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let mut segs: Vec<Segment> = m.segments().to_vec();
            segs.shuffle(&mut rng);
            let shuffled = Multisegment::new(segs);
            prop_assert_eq!(ul(&shuffled), reference.clone());
            prop_assert_eq!(
                integral_right_multi(&Multisegment::empty(), &shuffled),
                reference.clone()
            );
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_detects_genericity(m in arb_multisegment(6)) {
        let n = ul(&m);
        prop_assert_eq!(ul(&n), n.clone());
        prop_assert!(n.is_generic());
        prop_assert_eq!(m.is_generic(), n == m);
    }

    #[test]
    fn derivative_undoes_integral(m in arb_multisegment(5), d in arb_segment()) {
        let up = integral_right_seg(&m, &d);
        prop_assert_eq!(up.abs_length(), m.abs_length() + d.abs_length());
        prop_assert_eq!(derivative_right_seg(&up, &d), Some(m.clone()));
        let up_l = integral_left_seg(&m, &d);
        prop_assert_eq!(up_l.abs_length(), m.abs_length() + d.abs_length());
        prop_assert_eq!(derivative_left_seg(&up_l, &d), Some(m.clone()));
    }

    #[test]
    fn integral_undoes_derivative(m in arb_multisegment(5), d in arb_segment()) {
        if let Some(r) = derivative_right_seg(&m, &d) {
            prop_assert_eq!(r.abs_length(), m.abs_length() - d.abs_length());
            prop_assert_eq!(integral_right_seg(&r, &d), m.clone());
        }
        if let Some(r) = derivative_left_seg(&m, &d) {
            prop_assert_eq!(integral_left_seg(&r, &d), m.clone());
        }
    }

    #[test]
    fn involution_is_idempotent_and_preserves_support(m in arb_multisegment(6)) {
        let d = zelevinsky_involution(&m);
        prop_assert_eq!(zelevinsky_involution(&d), m.clone());
        prop_assert_eq!(d.csupp(), m.csupp());
        prop_assert_eq!(d.abs_length(), m.abs_length());
    }

    #[test]
    fn highest_derivative_never_vanishes(m in arb_multisegment(6)) {
        let hd = hd_right(&m);
        let r = derivative_right_multi(&m, &hd);
        prop_assert!(r.is_some());
        let hdl = hd_left(&m);
        prop_assert!(derivative_left_multi(&m, &hdl).is_some());
    }

    #[test]
    fn removal_agrees_with_derivative_on_generic(m in arb_multisegment(5), d in arb_segment()) {
        let g = ul(&m);
        if let Some(r) = derivative_right_seg(&g, &d) {
            prop_assert_eq!(removal_right_seg(&d, &g).ok(), Some(r));
        }
    }

    #[test]
    fn twist_round_trips(m in arb_multisegment(6), num in -3i64..4) {
        let t: Rat = rat(num, 2);
        prop_assert_eq!(m.twist(t).twist(-t), m.clone());
        prop_assert_eq!(m.twist(t).abs_length(), m.abs_length());
    }
}
