//! Segments `[a, b]_rho` on a cuspidal line.

use crate::error::EngineError;
use crate::label::{CuspidalLabel, CuspidalPoint};
use crate::rat::{self, Rat};
use std::cmp::Ordering;
use std::fmt;

/// A segment `[a, b]_rho`: the set of points `nu^a rho, ..., nu^b rho`
/// with `b - a` a non-negative integer.  The empty (void) segment is
/// represented by `Option<Segment>::None` throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub label: CuspidalLabel,
    pub a: Rat,
    pub b: Rat,
}

impl Segment {
    /// Builds `[a, b]_rho`, requiring `b - a` to be a non-negative
    /// integer.
    pub fn new(label: CuspidalLabel, a: Rat, b: Rat) -> Result<Self, EngineError> {
        let d = b - a;
        if !rat::is_integer(d) || d < num::Zero::zero() {
            return Err(EngineError::InvalidSegment(rat::display(d)));
        }
        Ok(Segment { label, a, b })
    }

    /// Builds `[a, b]_rho`, returning `None` for the void case `b < a`
    /// (with `b - a` still required to be an integer).  Used by the
    /// truncation/expansion steps of the derivative and integral
    /// engines, where `[x, x-1]` means "nothing".
    pub fn make(label: CuspidalLabel, a: Rat, b: Rat) -> Option<Self> {
        debug_assert!(rat::is_integer(b - a) || b < a);
        if b < a {
            None
        } else {
            Some(Segment { label, a, b })
        }
    }

    /// Number of points of the segment (its length as a set).
    pub fn num_points(&self) -> i64 {
        rat::to_i64(self.b - self.a) + 1
    }

    /// Length weighted by the dimension of the cuspidal label; the size
    /// of the general linear group the associated representation lives
    /// on.
    pub fn abs_length(&self) -> i64 {
        self.num_points() * self.dim()
    }

    pub fn dim(&self) -> i64 {
        self.label.dim as i64
    }

    pub fn start(&self) -> CuspidalPoint {
        CuspidalPoint::new(self.label.clone(), self.a)
    }

    pub fn end(&self) -> CuspidalPoint {
        CuspidalPoint::new(self.label.clone(), self.b)
    }

    /// True when the two segments lie on the same cuspidal line (same
    /// label, exponents differing by integers).
    pub fn same_line(&self, other: &Segment) -> bool {
        self.label == other.label && rat::is_integer(self.a - other.a)
    }

    /// True when the point `nu^x rho'` belongs to this segment.
    pub fn contains_exponent(&self, label: &CuspidalLabel, x: Rat) -> bool {
        &self.label == label && rat::is_integer(x - self.a) && self.a <= x && x <= self.b
    }

    /// Shift every exponent by `x`.
    pub fn twist(&self, x: Rat) -> Segment {
        Segment {
            label: self.label.clone(),
            a: self.a + x,
            b: self.b + x,
        }
    }

    /// The dual segment `[-b, -a]_{rho^vee}`.
    pub fn theta(&self) -> Segment {
        Segment {
            label: self.label.dual(),
            a: -self.b,
            b: -self.a,
        }
    }

    /// Linkedness: the two segments lie on the same line, neither
    /// contains the other, and their union is again a segment.
    pub fn linked(&self, other: &Segment) -> bool {
        if !self.same_line(other) {
            return false;
        }
        let one = rat::int(1);
        (self.a < other.a && other.a <= self.b + one && self.b < other.b)
            || (other.a < self.a && self.a <= other.b + one && other.b < self.b)
    }

    /// Strict precedence: `self` starts and ends before `other` and they
    /// are close enough to be linked.
    pub fn precedes(&self, other: &Segment) -> bool {
        self.same_line(other)
            && self.a < other.a
            && self.b < other.b
            && other.a <= self.b + rat::int(1)
    }

    /// Lexicographic order on one cuspidal line: by start, then by end.
    /// Errors when the segments are not on the same line.
    pub fn lt_lex(&self, other: &Segment) -> Result<bool, EngineError> {
        if !self.same_line(other) {
            return Err(EngineError::Incomparable);
        }
        Ok(self.a < other.a || (self.a == other.a && self.b < other.b))
    }

    /// Set intersection of two segments on the same line (`None` when
    /// empty or when the segments live on different lines).
    pub fn intersect(&self, other: &Segment) -> Option<Segment> {
        if !self.same_line(other) {
            return None;
        }
        Segment::make(self.label.clone(), self.a.max(other.a), self.b.min(other.b))
    }

    /// Union of two linked (or nested/overlapping) segments on the same
    /// line; only meaningful when the union is an interval.
    pub fn union(&self, other: &Segment) -> Option<Segment> {
        if !self.same_line(other) {
            return None;
        }
        if self.b + rat::int(1) < other.a || other.b + rat::int(1) < self.a {
            return None;
        }
        Segment::make(self.label.clone(), self.a.min(other.a), self.b.max(other.b))
    }

    /// True when `other`'s points all belong to `self`.
    pub fn contains_segment(&self, other: &Segment) -> bool {
        self.same_line(other) && self.a <= other.a && other.b <= self.b
    }

    /// Deterministic global ordering: label id, start, end.
    pub fn canonical_cmp(&self, other: &Segment) -> Ordering {
        self.label
            .id
            .cmp(&other.label.id)
            .then(self.a.cmp(&other.a))
            .then(self.b.cmp(&other.b))
    }

    /// Ordering used to list a multisegment so that no later segment
    /// precedes an earlier one: by end, then start, then label id.
    pub fn ascending_cmp(&self, other: &Segment) -> Ordering {
        self.b
            .cmp(&other.b)
            .then(self.a.cmp(&other.a))
            .then(self.label.id.cmp(&other.label.id))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}]@{}",
            rat::display(self.a),
            rat::display(self.b),
            self.label
        )
    }
}
