//! Commutation tests for right-derivative / left-integral pairs.

use crate::derivative::{derivative_right_multi, derivative_right_seg, eta_right};
use crate::integral::integral_left_seg;
use crate::multisegment::Multisegment;
use crate::segment::Segment;

/// Outcome of a strong commutation test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RdliReport {
    pub commutes: bool,
    /// When the test fails: the 1-based `(i, j)` index of the first
    /// derivative/integral prefix pair whose one-step test failed.
    pub failing_pair: Option<(usize, usize)>,
}

impl RdliReport {
    fn ok() -> Self {
        RdliReport {
            commutes: true,
            failing_pair: None,
        }
    }
    fn fail(i: usize, j: usize) -> Self {
        RdliReport {
            commutes: false,
            failing_pair: Some((i, j)),
        }
    }
}

/// One-step commutation test for the triple `(d, d2, L(m))`: the right
/// derivative by `d` must be nonzero and the derivative multiplicity
/// profile of `d` must be unchanged by the left integral by `d2`.
pub fn comb_rdli(d: &Segment, d2: &Segment, m: &Multisegment) -> bool {
    if derivative_right_seg(m, d).is_none() {
        return false;
    }
    eta_right(&integral_left_seg(m, d2), d) == eta_right(m, d)
}

/// Sufficient segment-level condition under which a one-step test is
/// automatically satisfied wherever the derivative is nonzero: the two
/// segments are disjoint as point sets, or the integrated segment starts
/// or ends strictly before the differentiated one.
fn pairwise_fast(d: &Segment, d2: &Segment) -> bool {
    if !d.same_line(d2) {
        return true;
    }
    d.intersect(d2).is_none() || d2.a < d.a || d2.b < d.b
}

/// Full grid version of the strong commutation test: every prefix pair
/// of the ascending orders of `m` and `n` is tested on the
/// correspondingly reduced representation.  A vanished derivative
/// prefix rules the triple non-commutative.
pub fn strong_rdli_full(m: &Multisegment, n: &Multisegment, pi: &Multisegment) -> RdliReport {
    let ms = m.ascending_order();
    let ns = n.ascending_order();
    let r = ms.len();
    let s = ns.len();
    if r == 0 || s == 0 {
        return RdliReport::ok();
    }
    // row[j] = the representation after i derivative steps and j
    // integral steps; built row by row in i.
    let mut row: Vec<Option<Multisegment>> = Vec::with_capacity(s);
    row.push(Some(pi.clone()));
    for j in 1..s {
        let prev = row[j - 1].clone().unwrap();
        row.push(Some(integral_left_seg(&prev, &ns[j - 1])));
    }
    for i in 0..r {
        for j in 0..s {
            match &row[j] {
                Some(tau) => {
                    if !comb_rdli(&ms[i], &ns[j], tau) {
                        return RdliReport::fail(i + 1, j + 1);
                    }
                }
                None => return RdliReport::fail(i + 1, j + 1),
            }
        }
        if i + 1 < r {
            // Advance the row: one more derivative step, then rebuild
            // the integral prefixes.
            let next = row[0].as_ref().and_then(|t| derivative_right_seg(t, &ms[i]));
            row.clear();
            row.push(next);
            for j in 1..s {
                let prev = row[j - 1].clone();
                row.push(prev.map(|t| integral_left_seg(&t, &ns[j - 1])));
            }
        }
    }
    RdliReport::ok()
}

/// Strong commutation test with a fast sufficient check: when every
/// segment pair satisfies the structural condition and the full right
/// derivative is nonzero, the grid is skipped.
pub fn strong_rdli(m: &Multisegment, n: &Multisegment, pi: &Multisegment) -> RdliReport {
    let fast = m
        .iter()
        .all(|d| n.iter().all(|d2| pairwise_fast(d, d2)));
    if fast && derivative_right_multi(pi, m).is_some() {
        return RdliReport::ok();
    }
    strong_rdli_full(m, n, pi)
}
