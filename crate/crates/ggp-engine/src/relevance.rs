//! The decision procedure for quotient-branching (GGP) relevance of a
//! pair of irreducible representations.

use crate::derivative::{
    derivative_left_multi, derivative_right_multi, hd_left, hd_right, removal_left_multi,
    removal_right_multi,
};
use crate::error::EngineError;
use crate::integral::{integral_left_multi, integral_right_multi};
use crate::irrep::IrrRep;
use crate::label::CuspidalPoint;
use crate::multisegment::Multisegment;
use crate::rat::{self, Rat};
use crate::rdli::strong_rdli;
use crate::segment::Segment;

/// The witness data produced for a pair of generic representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericWitness {
    /// Right-derivative witness for the first member.
    pub p: Multisegment,
    /// Left-derivative witness for the second member.
    pub q: Multisegment,
    /// The common derived representation: `D^R_p(L(m)) = L(t) = D^L_q(L(n))`.
    pub t: Multisegment,
}

/// For two generic multisegments, pairs the segments line by line and
/// produces derivative multisegments whose application to either side
/// yields the same representation.
pub fn generic_witness(m: &Multisegment, n: &Multisegment) -> Result<GenericWitness, EngineError> {
    if !m.is_generic() || !n.is_generic() {
        return Err(EngineError::NonGeneric);
    }
    let one = rat::int(1);
    let mut p: Vec<Segment> = Vec::new();
    let mut q: Vec<Segment> = Vec::new();
    let mut t: Vec<Segment> = Vec::new();
    let mut keys = m.line_keys();
    for k in n.line_keys() {
        if !keys.contains(&k) {
            keys.push(k);
        }
    }
    keys.sort_by(|k1, k2| k1.0.cmp(&k2.0).then(k1.1.cmp(&k2.1)));
    for key in keys {
        let mut m_pool: Vec<Segment> = m
            .iter()
            .filter(|s| crate::multisegment::line_key(s) == key)
            .cloned()
            .collect();
        let mut n_pool: Vec<Segment> = n
            .iter()
            .filter(|s| crate::multisegment::line_key(s) == key)
            .cloned()
            .collect();
        while !m_pool.is_empty() {
            let idx = m_pool
                .iter()
                .enumerate()
                .min_by(|(_, x), (_, y)| x.a.cmp(&y.a).then(y.b.cmp(&x.b)))
                .map(|(i, _)| i)
                .unwrap();
            let seg = m_pool.remove(idx);
            let partner = n_pool
                .iter()
                .enumerate()
                .filter(|(_, s)| seg.a <= s.a && s.a <= seg.b && seg.b <= s.b)
                .max_by(|(_, x), (_, y)| {
                    x.num_points().cmp(&y.num_points()).then(y.a.cmp(&x.a))
                })
                .map(|(i, _)| i);
            match partner {
                Some(i) => {
                    let mate = n_pool.remove(i);
                    if let Some(s) = Segment::make(seg.label.clone(), seg.a, mate.a - one) {
                        p.push(s);
                    }
                    if let Some(s) = Segment::make(seg.label.clone(), seg.b + one, mate.b) {
                        q.push(s);
                    }
                    if let Some(s) = Segment::make(seg.label.clone(), mate.a, seg.b) {
                        t.push(s);
                    }
                }
                None => p.push(seg),
            }
        }
        q.extend(n_pool);
    }
    Ok(GenericWitness {
        p: Multisegment::new(p),
        q: Multisegment::new(q),
        t: Multisegment::new(t),
    })
}

/// One step of the reduction loop, recorded for tracing and for the
/// certificate transport pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    /// The first member was replaced by its right derivative along the
    /// highest-derivative segments ending at `point`.
    ReduceRight {
        point: CuspidalPoint,
        removed: Multisegment,
    },
    /// The second member was replaced by its left derivative along the
    /// highest-derivative segments starting at `point`.
    ReduceLeft {
        point: CuspidalPoint,
        removed: Multisegment,
    },
    /// The two members were swapped.
    Interchange,
}

/// The answer of the decision procedure, together with the witness pair
/// and the reduction trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub relevant: bool,
    /// Right-derivative witness for `nu^{1/2} . pi` (present when
    /// relevant).
    pub p: Option<Multisegment>,
    /// Left-derivative witness for `pi2` (present when relevant).
    pub q: Option<Multisegment>,
    pub trace: Vec<TraceStep>,
    /// The pair state before each trace step (parallel to `trace`).
    pub states: Vec<(Multisegment, Multisegment)>,
    /// 1-based index into `trace` of the reduction step whose
    /// admissibility check failed (present when not relevant).
    pub failed_step: Option<usize>,
}

fn half() -> Rat {
    rat::rat(1, 2)
}

/// Whether the support of `m` contains a point on the line of
/// `(label, x)` with exponent at least `x`.
fn csupp_reaches_up(m: &Multisegment, label: &crate::label::CuspidalLabel, x: Rat) -> bool {
    m.iter()
        .any(|s| s.label == *label && (s.b - x).is_integer() && s.b >= x)
}

/// Whether the support of `m` contains a point on the line of
/// `(label, x)` with exponent at most `x`.
fn csupp_reaches_down(m: &Multisegment, label: &crate::label::CuspidalLabel, x: Rat) -> bool {
    m.iter()
        .any(|s| s.label == *label && (s.a - x).is_integer() && s.a <= x)
}

/// A per-line top point of the support of `a` that stays maximal in the
/// combined support of `a` and of `b` shifted down by one half: nothing
/// comparable in the shifted support of `b` sits at or above it.
fn find_right_point(a: &Multisegment, b: &Multisegment) -> Option<CuspidalPoint> {
    for (_, line) in a.lines() {
        let top = line.iter().map(|s| s.b).max().unwrap();
        let label = line.segments()[0].label.clone();
        if !csupp_reaches_up(b, &label, top + half()) {
            return Some(CuspidalPoint::new(label, top));
        }
    }
    None
}

/// A per-line bottom point of the support of `b` that stays minimal in
/// the combined support of `b` and of `a` shifted up by one half:
/// nothing comparable in the shifted support of `a` sits at or below it.
fn find_left_point(a: &Multisegment, b: &Multisegment) -> Option<CuspidalPoint> {
    for (_, line) in b.lines() {
        let bottom = line.iter().map(|s| s.a).min().unwrap();
        let label = line.segments()[0].label.clone();
        if !csupp_reaches_down(a, &label, bottom - half()) {
            return Some(CuspidalPoint::new(label, bottom));
        }
    }
    None
}

/// The segments of a multisegment ending at the given point.
fn end_slice(m: &Multisegment, point: &CuspidalPoint) -> Multisegment {
    Multisegment::new(m.slice_end(&point.label, point.exponent))
}

/// The segments of a multisegment starting at the given point.
fn start_slice(m: &Multisegment, point: &CuspidalPoint) -> Multisegment {
    Multisegment::new(m.slice_start(&point.label, point.exponent))
}

/// Decides whether the pair `(pi, pi2)` is relevant: whether there are
/// derivative multisegments `(p, q)` with
/// `D^R_p(nu^{1/2} pi) = D^L_q(pi2)` such that the derivative/integral
/// pair strongly commutes on `nu^{1/2} pi`.
///
/// The procedure reduces the pair until both members are generic
/// (recording a trace), builds the generic witness, and transports it
/// back through the trace, checking admissibility of every reduction
/// step; the pair is relevant exactly when all checks pass.
pub fn decide_relevant(pi: &IrrRep, pi2: &IrrRep) -> Result<Certificate, EngineError> {
    let mut a = pi.data().clone();
    let mut b = pi2.data().clone();
    let mut trace: Vec<TraceStep> = Vec::new();
    let mut states: Vec<(Multisegment, Multisegment)> = Vec::new();
    let bound = (2 * (a.abs_length() + b.abs_length()) + 4) as usize;

    while !(a.is_generic() && b.is_generic()) {
        if trace.len() > bound {
            return Err(EngineError::ReductionStalled(format!(
                "no progress after {} reduction steps",
                trace.len()
            )));
        }
        if let Some(point) = find_right_point(&a, &b) {
            let removed = end_slice(&hd_right(&a), &point);
            if removed.is_empty() {
                return Err(EngineError::ReductionStalled(format!(
                    "no highest-derivative segment ends at {point}"
                )));
            }
            let next = derivative_right_multi(&a, &removed).ok_or_else(|| {
                EngineError::ReductionStalled(format!(
                    "highest-derivative slice at {point} has zero derivative"
                ))
            })?;
            states.push((a.clone(), b.clone()));
            trace.push(TraceStep::ReduceRight { point, removed });
            a = next;
        } else if let Some(point) = find_left_point(&a, &b) {
            let removed = start_slice(&hd_left(&b), &point);
            if removed.is_empty() {
                return Err(EngineError::ReductionStalled(format!(
                    "no highest-derivative segment starts at {point}"
                )));
            }
            let next = derivative_left_multi(&b, &removed).ok_or_else(|| {
                EngineError::ReductionStalled(format!(
                    "highest-derivative slice at {point} has zero derivative"
                ))
            })?;
            states.push((a.clone(), b.clone()));
            trace.push(TraceStep::ReduceLeft { point, removed });
            b = next;
        } else {
            if matches!(trace.last(), Some(TraceStep::Interchange)) {
                return Err(EngineError::ReductionStalled(
                    "two consecutive interchanges".into(),
                ));
            }
            states.push((a.clone(), b.clone()));
            trace.push(TraceStep::Interchange);
            std::mem::swap(&mut a, &mut b);
        }
    }

    let witness = generic_witness(&a.twist(half()), &b)?;
    let mut mcur = witness.p;
    let mut ncur = witness.q;

    for j in (0..trace.len()).rev() {
        let (before_a, before_b) = &states[j];
        match &trace[j] {
            TraceStep::ReduceRight { removed, .. } => {
                let m_new = mcur.sum(&removed.twist(half()));
                if derivative_right_multi(&before_a.twist(half()), &m_new).is_none() {
                    return Ok(Certificate {
                        relevant: false,
                        p: None,
                        q: None,
                        trace,
                        states,
                        failed_step: Some(j + 1),
                    });
                }
                mcur = m_new;
            }
            TraceStep::ReduceLeft { removed, .. } => {
                let n_new = ncur.sum(removed);
                if derivative_left_multi(before_b, &n_new).is_none() {
                    return Ok(Certificate {
                        relevant: false,
                        p: None,
                        q: None,
                        trace,
                        states,
                        failed_step: Some(j + 1),
                    });
                }
                ncur = n_new;
            }
            TraceStep::Interchange => {
                // The pair after the swap is (before_b, before_a) with
                // witness (mcur, ncur); pull the witness back to the
                // unswapped pair.
                let right_hd = hd_right(&integral_left_multi(&before_b.twist(half()), &ncur));
                let left_hd = hd_left(&integral_right_multi(before_a, &mcur));
                let p = removal_right_multi(&mcur, &right_hd)?.twist(half());
                let q = removal_left_multi(&ncur, &left_hd)?.twist(-half());
                mcur = p;
                ncur = q;
            }
        }
    }

    Ok(Certificate {
        relevant: true,
        p: Some(mcur),
        q: Some(ncur),
        trace,
        states,
        failed_step: None,
    })
}

/// Re-derives the defining property from a certificate: both derivatives
/// exist, agree, and the pair strongly commutes.  Used to double-check
/// positive answers independently of the reduction bookkeeping.
pub fn verify_witness(pi: &IrrRep, pi2: &IrrRep, p: &Multisegment, q: &Multisegment) -> bool {
    let twisted = pi.data().twist(half());
    let lhs = derivative_right_multi(&twisted, p);
    let rhs = derivative_left_multi(pi2.data(), q);
    match (lhs, rhs) {
        (Some(x), Some(y)) if x == y => strong_rdli(p, q, &twisted).commutes,
        _ => false,
    }
}
