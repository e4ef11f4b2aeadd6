use ggp_engine::integral::{integral_left_seg, integral_right_seg};
use ggp_engine::rat::int;
use ggp_engine::rdli::*;
use ggp_engine::{CuspidalLabel, Multisegment, Segment};

fn lab() -> CuspidalLabel {
    CuspidalLabel::self_dual("R", 1)
}

fn seg(a: i64, b: i64) -> Segment {
    Segment::new(lab(), int(a), int(b)).unwrap()
}

fn ms(segs: &[Segment]) -> Multisegment {
    Multisegment::new(segs.to_vec())
}

#[test]
fn one_step_test_requires_nonzero_derivative() {
    let pi = ms(&[seg(0, 2)]);
    assert!(!comb_rdli(&seg(1, 2), &seg(4, 5), &pi));
    assert!(comb_rdli(&seg(0, 2), &seg(4, 5), &pi));
}

#[test]
fn disjoint_integral_does_not_disturb_profile() {
    let pi = ms(&[seg(0, 2), seg(4, 6)]);
    assert!(comb_rdli(&seg(0, 1), &seg(4, 6), &pi));
    assert!(comb_rdli(&seg(0, 2), &seg(8, 9), &pi));
}

#[test]
fn ladder_counterexample_is_detected() {
    // pi = L([1,3]); tau is its right integral by [0,1].
    let pi = ms(&[seg(1, 3)]);
    let tau = integral_right_seg(&pi, &seg(0, 1));
    assert_eq!(tau, ms(&[seg(0, 3), seg(1, 1)]));
    // The left integral by [0,2] raises the multiplicity of the
    // prefix [0,1].
    use ggp_engine::derivative::epsilon_right;
    assert_eq!(epsilon_right(&tau, &seg(0, 1)), 1);
    let lifted = integral_left_seg(&tau, &seg(0, 2));
    assert_eq!(epsilon_right(&lifted, &seg(0, 1)), 2);
    assert!(!comb_rdli(&seg(0, 1), &seg(0, 2), &tau));
    let report = strong_rdli_full(&ms(&[seg(0, 1)]), &ms(&[seg(0, 2)]), &tau);
    assert!(!report.commutes);
    assert_eq!(report.failing_pair, Some((1, 1)));
}

#[test]
fn shifted_ladder_counterexample_is_detected() {
    // pi = L([1,3] + [0,1]); tau is its right integral by [0,2]; the
    // pair ([0,2], [2,2]) fails on tau.
    let pi = ms(&[seg(1, 3), seg(0, 1)]);
    let tau = integral_right_seg(&pi, &seg(0, 2));
    assert_eq!(tau, ms(&[seg(0, 3), seg(1, 2), seg(0, 1)]));
    use ggp_engine::derivative::epsilon_right;
    assert_eq!(epsilon_right(&tau, &seg(2, 2)), 0);
    let lifted = integral_left_seg(&tau, &seg(2, 2));
    assert_eq!(epsilon_right(&lifted, &seg(2, 2)), 1);
    assert!(!strong_rdli_full(&ms(&[seg(0, 2)]), &ms(&[seg(2, 2)]), &tau).commutes);

    // With the short segment shrunk to a point, the jump is 1 -> 2.
    let pi = ms(&[seg(1, 3), seg(0, 0)]);
    let tau = integral_right_seg(&pi, &seg(0, 2));
    assert_eq!(tau, ms(&[seg(0, 3), seg(1, 2), seg(0, 0)]));
    assert_eq!(epsilon_right(&tau, &seg(1, 2)), 1);
    let lifted = integral_left_seg(&tau, &seg(1, 2));
    assert_eq!(epsilon_right(&lifted, &seg(1, 2)), 2);
    assert!(!strong_rdli_full(&ms(&[seg(0, 2)]), &ms(&[seg(1, 2)]), &tau).commutes);
}

#[test]
fn worked_witness_pair_commutes() {
    // The witness pair of the first worked decision example.
    let twisted = ms(&[seg(1, 5), seg(4, 7)]);
    let p = ms(&[seg(1, 2), seg(4, 7)]);
    let q = ms(&[seg(0, 3), seg(6, 6)]);
    assert!(strong_rdli(&p, &q, &twisted).commutes);
    assert!(strong_rdli_full(&p, &q, &twisted).commutes);
}

#[test]
fn vanished_prefix_rules_non_commutative() {
    let pi = ms(&[seg(0, 2)]);
    // [1,2] has zero derivative on pi.
    let report = strong_rdli_full(&ms(&[seg(1, 2)]), &ms(&[seg(5, 6)]), &pi);
    assert!(!report.commutes);
}

#[test]
fn fast_path_agrees_with_full_grid() {
    let pis = vec![
        ms(&[seg(0, 2), seg(4, 6)]),
        ms(&[seg(1, 5), seg(4, 7)]),
        ms(&[seg(0, 3), seg(1, 2)]),
        ms(&[seg(0, 3), seg(2, 5), seg(1, 1)]),
    ];
    let wits = vec![
        (ms(&[seg(0, 1)]), ms(&[seg(4, 6)])),
        (ms(&[seg(1, 2), seg(4, 7)]), ms(&[seg(0, 3), seg(6, 6)])),
        (ms(&[seg(0, 0)]), ms(&[seg(2, 3)])),
        (ms(&[]), ms(&[seg(0, 5)])),
    ];
    for pi in &pis {
        for (m, n) in &wits {
            assert_eq!(
                strong_rdli(m, n, pi).commutes,
                strong_rdli_full(m, n, pi).commutes,
                "fast path diverges on m={m} n={n} pi={pi}"
            );
        }
    }
}

#[test]
fn empty_sides_commute() {
    let pi = ms(&[seg(0, 3)]);
    assert!(strong_rdli(&ms(&[]), &ms(&[seg(0, 3)]), &pi).commutes);
    assert!(strong_rdli(&ms(&[seg(0, 1)]), &ms(&[]), &pi).commutes);
}
