//! Right and left integral operators, inverse in spirit to the
//! derivatives, together with the unlinked normal form.

use crate::derivative::{extract_downward_sequence, window};
use crate::multisegment::Multisegment;
use crate::rat::{self, Rat};
use crate::segment::Segment;

/// Splits a pool into successive downward sequences until exhausted.
fn peel_downward(mut pool: Vec<Segment>) -> Vec<Vec<Segment>> {
    let mut levels = Vec::new();
    while !pool.is_empty() {
        levels.push(extract_downward_sequence(&mut pool));
    }
    levels
}

/// The set of points strictly before the `q`-th segment of a downward
/// sequence that the expansion step may land on: from just after the
/// next (smaller-start) chain member, or from the start of `d` for the
/// final member.  Returned as an inclusive range of exponents, `None`
/// when empty.
fn after_range(level: &[Segment], q: usize, d: &Segment) -> Option<(Rat, Rat)> {
    let one = rat::int(1);
    let hi = level[q].a - one;
    if q + 1 < level.len() {
        let lo = level[q + 1].a + one;
        if lo <= hi {
            Some((lo, hi))
        } else {
            None
        }
    } else if d.a <= hi {
        Some((d.a, hi))
    } else {
        None
    }
}

/// Right integral of `L(m)` by the segment `d`.  Integrals never
/// vanish; the result is again Langlands data.
pub fn integral_right_seg(m: &Multisegment, d: &Segment) -> Multisegment {
    let levels = peel_downward(window(m, d));
    // Selection: walk upwards through starts, at strictly decreasing
    // levels, landing each time in an admissible gap.
    let mut chain: Vec<(usize, usize)> = Vec::new();
    let mut target = d.a;
    let mut max_level = levels.len();
    loop {
        let mut found: Option<(usize, usize)> = None;
        for i in (0..max_level).rev() {
            let mut hits = levels[i].iter().enumerate().filter_map(|(q, _)| {
                after_range(&levels[i], q, d)
                    .filter(|(lo, hi)| *lo <= target && target <= *hi)
                    .map(|_| q)
            });
            if let Some(q) = hits.next() {
                debug_assert!(hits.next().is_none(), "gap membership is not unique");
                found = Some((i, q));
                break;
            }
        }
        match found {
            Some((i, q)) => {
                target = levels[i][q].a;
                max_level = i;
                chain.push((i, q));
            }
            None => break,
        }
    }
    // Expansion: each selected segment has its start pulled down to the
    // previous landing point; one further segment carries the remainder
    // up to the end of `d`.
    let mut result = m.clone();
    let mut new_start = d.a;
    for &(i, q) in &chain {
        let seg = &levels[i][q];
        result = result.sub(seg).expect("selected segment present");
        result = result
            .add(Segment::make(seg.label.clone(), new_start, seg.b).expect("expansion widens"));
        new_start = seg.a;
    }
    result.add_opt(Segment::make(d.label.clone(), new_start, d.b))
}

/// Left integral through the duality.
pub fn integral_left_seg(m: &Multisegment, d: &Segment) -> Multisegment {
    integral_right_seg(&m.theta(), &d.theta()).theta()
}

/// Right integral by a multisegment: top of the ascending order first.
pub fn integral_right_multi(m: &Multisegment, by: &Multisegment) -> Multisegment {
    let mut cur = m.clone();
    for d in by.ascending_order().into_iter().rev() {
        cur = integral_right_seg(&cur, &d);
    }
    cur
}

/// Left integral by a multisegment: bottom of the ascending order first.
pub fn integral_left_multi(m: &Multisegment, by: &Multisegment) -> Multisegment {
    let mut cur = m.clone();
    for d in by.ascending_order() {
        cur = integral_left_seg(&cur, &d);
    }
    cur
}

/// The unlinked normal form of a multisegment: the Langlands data of the
/// generic representation with the same cuspidal support obtained by
/// integrating the segments one by one into the empty representation.
/// A multisegment equals its normal form exactly when it is generic.
pub fn ul(m: &Multisegment) -> Multisegment {
    integral_right_multi(&Multisegment::empty(), m)
}
