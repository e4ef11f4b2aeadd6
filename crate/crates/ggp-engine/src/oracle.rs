//! Brute-force search oracle: decides relevance directly from the
//! definition by enumerating candidate witness pairs.

use crate::derivative::{derivative_left_seg, derivative_right_seg};
use crate::irrep::IrrRep;
use crate::label::CuspidalLabel;
use crate::multisegment::Multisegment;
use crate::rat::{self, Rat};
use crate::rdli::strong_rdli;
use crate::segment::Segment;
use std::collections::HashMap;

/// Bounds for the exhaustive enumeration of multisegments.
#[derive(Clone, Debug)]
pub struct SearchBounds {
    /// Cap on the total weighted length of an enumerated multisegment.
    pub max_total: i64,
    /// Inclusive exponent window.
    pub window: (Rat, Rat),
    /// Labels to draw segments from.
    pub labels: Vec<CuspidalLabel>,
    /// Fractional classes of allowed exponents (e.g. `0` and `1/2`).
    pub residues: Vec<Rat>,
}

/// All segments admitted by the bounds, in canonical order.
pub fn enumerate_segments(bounds: &SearchBounds) -> Vec<Segment> {
    let mut out = Vec::new();
    let one = rat::int(1);
    for label in &bounds.labels {
        for &r in &bounds.residues {
            // Smallest exponent in the window with the given class.
            let mut a = bounds.window.0.ceil() + rat::frac_class(r);
            if a - one >= bounds.window.0 {
                a -= one;
            }
            while a <= bounds.window.1 {
                let mut b = a;
                while b <= bounds.window.1 {
                    let seg = Segment::make(label.clone(), a, b).unwrap();
                    if seg.abs_length() <= bounds.max_total {
                        out.push(seg);
                    }
                    b += one;
                }
                a += one;
            }
        }
    }
    out.sort_by(|x, y| x.canonical_cmp(y));
    out.dedup();
    out
}

/// All multisegments (multisets of admitted segments) of total weighted
/// length at most the bound, including the empty one.
pub fn enumerate_multisegments(bounds: &SearchBounds) -> Vec<Multisegment> {
    let segs = enumerate_segments(bounds);
    let mut out = Vec::new();
    let mut stack: Vec<Segment> = Vec::new();
    fn rec(
        segs: &[Segment],
        from: usize,
        budget: i64,
        stack: &mut Vec<Segment>,
        out: &mut Vec<Multisegment>,
    ) {
        out.push(Multisegment::new(stack.clone()));
        for i in from..segs.len() {
            let cost = segs[i].abs_length();
            if cost <= budget {
                stack.push(segs[i].clone());
                rec(segs, i, budget - cost, stack, out);
                stack.pop();
            }
        }
    }
    rec(&segs, 0, bounds.max_total, &mut stack, &mut out);
    out
}

/// Candidate witness segments for a representation: every segment whose
/// points all appear in the cuspidal support.
fn candidate_segments(m: &Multisegment) -> Vec<Segment> {
    let mut out = Vec::new();
    let one = rat::int(1);
    for (_, line) in m.lines() {
        let label = line.segments()[0].label.clone();
        let mut exps: Vec<Rat> = Vec::new();
        for s in line.iter() {
            let mut x = s.a;
            while x <= s.b {
                if !exps.contains(&x) {
                    exps.push(x);
                }
                x += one;
            }
        }
        exps.sort();
        for (i, &a) in exps.iter().enumerate() {
            let mut b = a;
            let mut j = i;
            loop {
                out.push(Segment::make(label.clone(), a, b).unwrap());
                if j + 1 < exps.len() && exps[j + 1] == b + one {
                    j += 1;
                    b += one;
                } else {
                    break;
                }
            }
        }
    }
    out.sort_by(|x, y| x.ascending_cmp(y));
    out
}

/// Every multisegment `w` with nonzero right derivative on `L(m)`,
/// together with the result, in canonical enumeration order of `w`.
pub fn right_witness_table(m: &Multisegment) -> Vec<(Multisegment, Multisegment)> {
    let cands = candidate_segments(m);
    let mut out: Vec<(Vec<Segment>, Multisegment)> = Vec::new();
    // The composition applies segments in ascending order, so choosing
    // candidates in non-decreasing ascending order enumerates every
    // multiset exactly once, with all prefixes nonzero by definition.
    fn rec(
        cands: &[Segment],
        from: usize,
        cur: &Multisegment,
        stack: &mut Vec<Segment>,
        out: &mut Vec<(Vec<Segment>, Multisegment)>,
    ) {
        out.push((stack.clone(), cur.clone()));
        for i in from..cands.len() {
            if let Some(next) = derivative_right_seg(cur, &cands[i]) {
                stack.push(cands[i].clone());
                rec(cands, i, &next, stack, out);
                stack.pop();
            }
        }
    }
    let mut stack = Vec::new();
    rec(&cands, 0, m, &mut stack, &mut out);
    let mut table: Vec<(Multisegment, Multisegment)> = out
        .into_iter()
        .map(|(w, res)| (Multisegment::new(w), res))
        .collect();
    table.sort_by(|(x, _), (y, _)| canonical_multi_cmp(x, y));
    table
}

/// Every multisegment `w` with nonzero left derivative on `L(m)`,
/// together with the result.  The left composition applies segments in
/// descending ascending-order, so the recursion chooses candidates in
/// non-increasing order.
pub fn left_witness_table(m: &Multisegment) -> Vec<(Multisegment, Multisegment)> {
    let mut cands = candidate_segments(m);
    cands.reverse();
    let mut out: Vec<(Vec<Segment>, Multisegment)> = Vec::new();
    fn rec(
        cands: &[Segment],
        from: usize,
        cur: &Multisegment,
        stack: &mut Vec<Segment>,
        out: &mut Vec<(Vec<Segment>, Multisegment)>,
    ) {
        out.push((stack.clone(), cur.clone()));
        for i in from..cands.len() {
            if let Some(next) = derivative_left_seg(cur, &cands[i]) {
                stack.push(cands[i].clone());
                rec(cands, i, &next, stack, out);
                stack.pop();
            }
        }
    }
    let mut stack = Vec::new();
    rec(&cands, 0, m, &mut stack, &mut out);
    let mut table: Vec<(Multisegment, Multisegment)> = out
        .into_iter()
        .map(|(w, res)| (Multisegment::new(w), res))
        .collect();
    table.sort_by(|(x, _), (y, _)| canonical_multi_cmp(x, y));
    table
}

/// Deterministic total order on multisegments: by length, then
/// segment-wise canonical comparison.
pub fn canonical_multi_cmp(x: &Multisegment, y: &Multisegment) -> std::cmp::Ordering {
    x.len().cmp(&y.len()).then_with(|| {
        for (s, t) in x.segments().iter().zip(y.segments()) {
            let c = s.canonical_cmp(t);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// Decides relevance straight from the definition: search for
/// multisegments `(m, n)` with `D^R_m(nu^{1/2} pi) = D^L_n(pi2)` such
/// that `(m, n)` strongly commutes on `nu^{1/2} pi`.  Returns the first
/// witness pair in canonical enumeration order.
pub fn brute_force_relevant(
    pi: &IrrRep,
    pi2: &IrrRep,
) -> Option<(Multisegment, Multisegment)> {
    let twisted = pi.data().twist(rat::rat(1, 2));
    let right = right_witness_table(&twisted);
    let left = left_witness_table(pi2.data());
    brute_force_from_tables(&twisted, &right, &left)
}

/// Core of the brute-force search, reusable with precomputed witness
/// tables (the sweep tests cache tables per representation).
pub fn brute_force_from_tables(
    twisted: &Multisegment,
    right: &[(Multisegment, Multisegment)],
    left: &[(Multisegment, Multisegment)],
) -> Option<(Multisegment, Multisegment)> {
    let mut by_result: HashMap<&Multisegment, Vec<&Multisegment>> = HashMap::new();
    for (n, res) in left {
        by_result.entry(res).or_default().push(n);
    }
    for (m, res) in right {
        if let Some(ns) = by_result.get(res) {
            for n in ns {
                if strong_rdli(m, n, twisted).commutes {
                    return Some((m.clone(), (*n).clone()));
                }
            }
        }
    }
    None
}
