//! Right and left derivative operators on Langlands data, together with
//! upward sequences, derivative multiplicities, highest derivative
//! multisegments, and the removal process.

use crate::error::EngineError;
use crate::involution::zelevinsky_involution;
use crate::multisegment::Multisegment;
use crate::rat::{self, Rat};
use crate::segment::Segment;

/// Extracts one upward sequence from `pool` (all segments on one line),
/// removing the chosen segments.  Start from a longest segment with the
/// smallest start; repeatedly move to a longest segment strictly
/// preceded by the current one (which forces a larger start).
pub fn extract_upward_sequence(pool: &mut Vec<Segment>) -> Vec<Segment> {
    let mut chain: Vec<Segment> = Vec::new();
    if pool.is_empty() {
        return chain;
    }
    let first = pool
        .iter()
        .enumerate()
        .min_by(|(_, x), (_, y)| x.a.cmp(&y.a).then(y.b.cmp(&x.b)))
        .map(|(i, _)| i)
        .unwrap();
    chain.push(pool.remove(first));
    loop {
        let prev = chain.last().unwrap().clone();
        let next = pool
            .iter()
            .enumerate()
            .filter(|(_, s)| prev.precedes(s))
            .min_by(|(_, x), (_, y)| x.a.cmp(&y.a).then(y.b.cmp(&x.b)))
            .map(|(i, _)| i);
        match next {
            Some(i) => chain.push(pool.remove(i)),
            None => break,
        }
    }
    chain
}

/// Extracts one downward sequence from `pool`: start from a shortest
/// segment with the largest start; repeatedly move to a segment strictly
/// preceding the current one (largest start first, then shortest).
pub fn extract_downward_sequence(pool: &mut Vec<Segment>) -> Vec<Segment> {
    let mut chain: Vec<Segment> = Vec::new();
    if pool.is_empty() {
        return chain;
    }
    let first = pool
        .iter()
        .enumerate()
        .min_by(|(_, x), (_, y)| y.a.cmp(&x.a).then(x.b.cmp(&y.b)))
        .map(|(i, _)| i)
        .unwrap();
    chain.push(pool.remove(first));
    loop {
        let prev = chain.last().unwrap().clone();
        let next = pool
            .iter()
            .enumerate()
            .filter(|(_, s)| s.precedes(&prev))
            .min_by(|(_, x), (_, y)| y.a.cmp(&x.a).then(x.b.cmp(&y.b)))
            .map(|(i, _)| i);
        match next {
            Some(i) => chain.push(pool.remove(i)),
            None => break,
        }
    }
    chain
}

/// The first upward sequence of a multisegment (which must live on a
/// single cuspidal line).
pub fn upward_sequence(m: &Multisegment) -> Result<Vec<Segment>, EngineError> {
    require_single_line(m)?;
    let mut pool = m.segments().to_vec();
    Ok(extract_upward_sequence(&mut pool))
}

/// The first downward sequence of a multisegment on a single line.
pub fn downward_sequence(m: &Multisegment) -> Result<Vec<Segment>, EngineError> {
    require_single_line(m)?;
    let mut pool = m.segments().to_vec();
    Ok(extract_downward_sequence(&mut pool))
}

fn require_single_line(m: &Multisegment) -> Result<(), EngineError> {
    if m.line_keys().len() > 1 {
        return Err(EngineError::InvalidInput(
            "expected a multisegment on a single cuspidal line".into(),
        ));
    }
    Ok(())
}

/// The window of `m` around `d = [a, b]`: segments `[a', b']` on the
/// line of `d` with `a <= a' <= b + 1` and `b <= b'`.  This is the set
/// the derivative and integral engines operate on.
pub(crate) fn window(m: &Multisegment, d: &Segment) -> Vec<Segment> {
    let one = rat::int(1);
    m.iter()
        .filter(|s| s.same_line(d) && d.a <= s.a && s.a <= d.b + one && d.b <= s.b)
        .cloned()
        .collect()
}

/// Splits a pool into successive upward sequences until exhausted.
fn peel_upward(mut pool: Vec<Segment>) -> Vec<Vec<Segment>> {
    let mut levels = Vec::new();
    while !pool.is_empty() {
        levels.push(extract_upward_sequence(&mut pool));
    }
    levels
}

/// Upper end of the reach interval of the `j`-th segment of an upward
/// sequence: up to just below where the next chain member starts, or the
/// segment's own end for the final member.
fn reach_hi(level: &[Segment], j: usize) -> Rat {
    if j + 1 < level.len() {
        level[j + 1].a - rat::int(2)
    } else {
        level[j].b
    }
}

/// The chain of (level, index) selections for the right derivative of
/// `d` on the peeled `levels`.  `first_j` optionally overrides the
/// index chosen at the first step (used by the debug uniqueness check).
fn select_derivative_chain(
    levels: &[Vec<Segment>],
    d: &Segment,
    first_j: Option<(usize, usize)>,
) -> Vec<(usize, usize)> {
    let mut chain: Vec<(usize, usize)> = Vec::new();
    let mut target = d.b;
    let mut max_level = levels.len();
    loop {
        let mut found: Option<(usize, usize)> = None;
        if chain.is_empty() {
            if let Some(fj) = first_j {
                found = Some(fj);
            }
        }
        if found.is_none() {
            'outer: for i in (0..max_level).rev() {
                for (j, seg) in levels[i].iter().enumerate() {
                    if seg.a <= target && target <= reach_hi(&levels[i], j) {
                        found = Some((i, j));
                        break 'outer;
                    }
                }
            }
        }
        match found {
            Some((i, j)) => {
                target = levels[i][j].a - rat::int(1);
                max_level = i + 1;
                chain.push((i, j));
            }
            None => break,
        }
    }
    chain
}

/// Applies the truncations determined by a selection chain, or returns
/// `None` (the zero representation) when the chain does not reach the
/// start of `d`.
fn apply_derivative_chain(
    m: &Multisegment,
    d: &Segment,
    levels: &[Vec<Segment>],
    chain: &[(usize, usize)],
) -> Option<Multisegment> {
    let last = chain.last()?;
    if levels[last.0][last.1].a != d.a {
        return None;
    }
    let mut result = m.clone();
    let mut new_start = d.b + rat::int(1);
    for &(i, j) in chain {
        let seg = &levels[i][j];
        result = result.sub(seg).expect("selected segment present");
        result = result.add_opt(Segment::make(seg.label.clone(), new_start, seg.b));
        new_start = seg.a;
    }
    Some(result)
}

/// Right derivative of `L(m)` by the segment `d`; `None` is the zero
/// representation.
pub fn derivative_right_seg(m: &Multisegment, d: &Segment) -> Option<Multisegment> {
    let levels = peel_upward(window(m, d));
    let chain = select_derivative_chain(&levels, d, None);
    let result = apply_derivative_chain(m, d, &levels, &chain);
    #[cfg(debug_assertions)]
    {
        // Outcome uniqueness: every qualifying first choice must lead to
        // the same result.
        if let Some(&(i1, _)) = chain.first() {
            for (j, seg) in levels[i1].iter().enumerate() {
                if seg.a <= d.b && d.b <= reach_hi(&levels[i1], j) {
                    let alt = select_derivative_chain(&levels, d, Some((i1, j)));
                    let alt_result = apply_derivative_chain(m, d, &levels, &alt);
                    debug_assert_eq!(
                        alt_result, result,
                        "derivative selection is not outcome-unique"
                    );
                }
            }
        }
    }
    result
}

/// Left derivative by one segment, computed through the duality that
/// swaps the two sides.
pub fn derivative_left_seg(m: &Multisegment, d: &Segment) -> Option<Multisegment> {
    derivative_right_seg(&m.theta(), &d.theta()).map(|r| r.theta())
}

/// Right derivative by a multisegment: the segments are applied from the
/// bottom of the ascending order upwards.
pub fn derivative_right_multi(m: &Multisegment, by: &Multisegment) -> Option<Multisegment> {
    let mut cur = m.clone();
    for d in by.ascending_order() {
        cur = derivative_right_seg(&cur, &d)?;
    }
    Some(cur)
}

/// Left derivative by a multisegment: the segments are applied from the
/// top of the ascending order downwards.
pub fn derivative_left_multi(m: &Multisegment, by: &Multisegment) -> Option<Multisegment> {
    let mut cur = m.clone();
    for d in by.ascending_order().into_iter().rev() {
        cur = derivative_left_seg(&cur, &d)?;
    }
    Some(cur)
}

/// Largest `k` such that applying the right derivative by `d` to `L(m)`
/// `k` times is still nonzero.
pub fn epsilon_right(m: &Multisegment, d: &Segment) -> u32 {
    let mut count = 0;
    let mut cur = m.clone();
    while let Some(next) = derivative_right_seg(&cur, d) {
        count += 1;
        cur = next;
    }
    count
}

/// Left counterpart of [`epsilon_right`].
pub fn epsilon_left(m: &Multisegment, d: &Segment) -> u32 {
    epsilon_right(&m.theta(), &d.theta())
}

/// The vector of right derivative multiplicities along the suffixes of
/// `d = [a, b]`: entries for `[a, b], [a+1, b], ..., [b, b]`.
pub fn eta_right(m: &Multisegment, d: &Segment) -> Vec<u32> {
    let mut out = Vec::new();
    let mut x = d.a;
    while x <= d.b {
        let suffix = Segment::make(d.label.clone(), x, d.b).unwrap();
        out.push(epsilon_right(m, &suffix));
        x += rat::int(1);
    }
    out
}

/// The highest right derivative multisegment of `L(m)`: chains are
/// extracted from the Zelevinsky data line by line, each chain starting
/// at the smallest end present and extending through consecutive linked
/// ends.
pub fn hd_right(m: &Multisegment) -> Multisegment {
    let z = zelevinsky_involution(m);
    let mut out: Vec<Segment> = Vec::new();
    let one = rat::int(1);
    for (_, line) in z.lines() {
        let mut pool: Vec<Segment> = line.segments().to_vec();
        while !pool.is_empty() {
            let a1 = pool.iter().map(|s| s.b).min().unwrap();
            let first = pool
                .iter()
                .enumerate()
                .filter(|(_, s)| s.b == a1)
                .min_by(|(_, x), (_, y)| x.a.cmp(&y.a))
                .map(|(i, _)| i)
                .unwrap();
            let label = pool[first].label.clone();
            let mut chain = vec![pool.remove(first)];
            let mut j = a1 + one;
            loop {
                let prev = chain.last().unwrap().clone();
                let next = pool
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.b == j && s.linked(&prev))
                    .min_by(|(_, x), (_, y)| x.a.cmp(&y.a))
                    .map(|(i, _)| i);
                match next {
                    Some(i) => {
                        chain.push(pool.remove(i));
                        j += one;
                    }
                    None => break,
                }
            }
            out.push(Segment::make(label, a1, j - one).unwrap());
        }
    }
    Multisegment::new(out)
}

/// The highest left derivative multisegment, through the duality.
pub fn hd_left(m: &Multisegment) -> Multisegment {
    hd_right(&m.theta()).theta()
}

/// The removal process of the segment `d = [a, b]` from `m`: a
/// structural peeling that agrees with the right derivative on generic
/// multisegments.  Errors when no segment `[a, c]` with `c >= b` is
/// present.
pub fn removal_right_seg(d: &Segment, m: &Multisegment) -> Result<Multisegment, EngineError> {
    let first = m
        .iter()
        .filter(|s| s.same_line(d) && s.a == d.a && s.b >= d.b)
        .min_by(|x, y| x.b.cmp(&y.b))
        .cloned();
    let first = match first {
        Some(s) => s,
        None => {
            return Err(EngineError::RemovalInapplicable {
                start: rat::display(d.a),
                end: rat::display(d.b),
            })
        }
    };
    let mut chain = vec![first];
    let mut rest = m.sub(chain.last().unwrap()).unwrap();
    loop {
        let prev = chain.last().unwrap().clone();
        let next = rest
            .iter()
            .filter(|s| s.same_line(d) && s.a > prev.a && d.b <= s.b && s.b < prev.b)
            .min_by(|x, y| x.a.cmp(&y.a).then(x.b.cmp(&y.b)))
            .cloned();
        match next {
            Some(s) => {
                rest = rest.sub(&s).unwrap();
                chain.push(s);
            }
            None => break,
        }
    }
    let mut result = rest;
    for i in 0..chain.len() {
        let new_start = if i + 1 < chain.len() {
            chain[i + 1].a
        } else {
            d.b + rat::int(1)
        };
        result = result.add_opt(Segment::make(chain[i].label.clone(), new_start, chain[i].b));
    }
    Ok(result)
}

/// Left removal through the duality.
pub fn removal_left_seg(d: &Segment, m: &Multisegment) -> Result<Multisegment, EngineError> {
    removal_right_seg(&d.theta(), &m.theta()).map(|r| r.theta())
}

/// Folds the right removal over a whole multisegment, bottom of the
/// ascending order first.
pub fn removal_right_multi(by: &Multisegment, m: &Multisegment) -> Result<Multisegment, EngineError> {
    let mut cur = m.clone();
    for d in by.ascending_order() {
        cur = removal_right_seg(&d, &cur)?;
    }
    Ok(cur)
}

/// Folds the left removal, top of the ascending order first.
pub fn removal_left_multi(by: &Multisegment, m: &Multisegment) -> Result<Multisegment, EngineError> {
    let mut cur = m.clone();
    for d in by.ascending_order().into_iter().rev() {
        cur = removal_left_seg(&d, &cur)?;
    }
    Ok(cur)
}
