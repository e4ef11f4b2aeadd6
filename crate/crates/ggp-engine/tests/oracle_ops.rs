use ggp_engine::oracle::*;
use ggp_engine::rat::{int, rat};
use ggp_engine::relevance::{decide_relevant, verify_witness};
use ggp_engine::{CuspidalLabel, IrrRep, Multisegment, Segment};

fn lab() -> CuspidalLabel {
    CuspidalLabel::self_dual("R", 1)
}

fn seg(a: i64, b: i64) -> Segment {
    Segment::new(lab(), int(a), int(b)).unwrap()
}

fn hseg(a2: i64, b2: i64) -> Segment {
    Segment::new(lab(), rat(a2, 2), rat(b2, 2)).unwrap()
}

fn ms(segs: &[Segment]) -> Multisegment {
    Multisegment::new(segs.to_vec())
}

#[test]
fn segment_enumeration_counts() {
    let bounds = SearchBounds {
        max_total: 3,
        window: (int(0), int(2)),
        labels: vec![lab()],
        residues: vec![int(0)],
    };
    // All sub-intervals of {0, 1, 2}.
    assert_eq!(enumerate_segments(&bounds).len(), 6);
    // Length cap cuts off the long ones.
    let bounds2 = SearchBounds { max_total: 1, ..bounds.clone() };
    assert_eq!(enumerate_segments(&bounds2).len(), 3);
    // Half-integer residue shifts the lattice.
    let bounds3 = SearchBounds {
        residues: vec![rat(1, 2)],
        ..bounds.clone()
    };
    let segs = enumerate_segments(&bounds3);
    assert!(segs.iter().all(|s| s.a.fract() != int(0)));
    assert_eq!(segs.len(), 3); // {1/2, 3/2} sub-intervals of length <= 3
}

#[test]
fn multisegment_enumeration_counts() {
    let bounds = SearchBounds {
        max_total: 2,
        window: (int(0), int(1)),
        labels: vec![lab()],
        residues: vec![int(0)],
    };
    // Segments [0,0], [0,1], [1,1]; multisets of total length <= 2:
    // {}, three singletons, three two-point multisets.
    let all = enumerate_multisegments(&bounds);
    assert_eq!(all.len(), 7);
    assert!(all.iter().any(|m| m.is_empty()));
    assert!(all.iter().any(|m| *m == ms(&[seg(0, 0), seg(0, 0)])));
}

#[test]
fn right_witness_table_of_a_segment() {
    let table = right_witness_table(&ms(&[seg(0, 1)]));
    let expect: Vec<(Multisegment, Multisegment)> = vec![
        (ms(&[]), ms(&[seg(0, 1)])),
        (ms(&[seg(0, 0)]), ms(&[seg(1, 1)])),
        (ms(&[seg(0, 1)]), ms(&[])),
        (ms(&[seg(0, 0), seg(1, 1)]), ms(&[])),
    ];
    assert_eq!(table, expect);
}

#[test]
fn left_witness_table_of_a_segment() {
    let table = left_witness_table(&ms(&[seg(0, 1)]));
    let expect: Vec<(Multisegment, Multisegment)> = vec![
        (ms(&[]), ms(&[seg(0, 1)])),
        (ms(&[seg(0, 1)]), ms(&[])),
        (ms(&[seg(1, 1)]), ms(&[seg(0, 0)])),
        (ms(&[seg(0, 0), seg(1, 1)]), ms(&[])),
    ];
    assert_eq!(table, expect);
}

#[test]
fn every_table_entry_is_a_true_derivative() {
    use ggp_engine::derivative::{derivative_left_multi, derivative_right_multi};
    let m = ms(&[seg(0, 2), seg(1, 3)]);
    for (w, res) in right_witness_table(&m) {
        assert_eq!(derivative_right_multi(&m, &w), Some(res), "right witness {w}");
    }
    for (w, res) in left_witness_table(&m) {
        assert_eq!(derivative_left_multi(&m, &w), Some(res), "left witness {w}");
    }
}

#[test]
fn brute_force_agrees_with_decision_on_small_pairs() {
    let pairs = vec![
        (ms(&[hseg(1, 5)]), ms(&[seg(1, 2)])),
        (ms(&[hseg(1, 3), hseg(3, 5)]), ms(&[seg(1, 2)])),
        (ms(&[hseg(1, 3), hseg(3, 5)]), ms(&[seg(0, 1), seg(1, 2)])),
        (ms(&[hseg(-1, 1), hseg(1, 3)]), ms(&[seg(0, 0), seg(0, 1)])),
        (ms(&[]), ms(&[seg(0, 1)])),
    ];
    for (m, n) in pairs {
        let pi = IrrRep::langlands(m);
        let pi2 = IrrRep::langlands(n);
        let decided = decide_relevant(&pi, &pi2).unwrap().relevant;
        let brute = brute_force_relevant(&pi, &pi2);
        assert_eq!(decided, brute.is_some(), "disagreement on ({pi}, {pi2})");
        if let Some((p, q)) = brute {
            assert!(verify_witness(&pi, &pi2, &p, &q), "oracle witness fails on ({pi}, {pi2})");
        }
    }
}

#[test]
fn brute_force_reproduces_first_worked_example() {
    let pi = IrrRep::langlands(ms(&[hseg(1, 9), hseg(7, 13)]));
    let pi2 = IrrRep::langlands(ms(&[seg(0, 3), seg(3, 6)]));
    let (p, q) = brute_force_relevant(&pi, &pi2).expect("pair must be relevant");
    assert!(verify_witness(&pi, &pi2, &p, &q));
    // The decision procedure's witness is also accepted by the oracle
    // tables (both certify the same relevance).
    let cert = decide_relevant(&pi, &pi2).unwrap();
    assert!(cert.relevant);
}

#[test]
fn brute_force_rejects_fourth_worked_example() {
    let pi = IrrRep::langlands(ms(&[hseg(1, 9), hseg(7, 13), hseg(11, 13)]));
    let pi2 = IrrRep::langlands(ms(&[seg(0, 3), seg(1, 2), seg(3, 6)]));
    assert!(brute_force_relevant(&pi, &pi2).is_none());
}
