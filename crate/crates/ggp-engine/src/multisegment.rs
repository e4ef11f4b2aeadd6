//! Multisegments: finite multisets of segments in canonical order.

use crate::label::{CuspidalLabel, CuspidalPoint};
use crate::rat::{self, Rat};
use crate::segment::Segment;
use std::fmt;
use std::sync::Arc;

/// A finite multiset of segments, stored sorted by the canonical order
/// (label id, start, end) so that structural equality and hashing agree
/// with multiset equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Multisegment {
    segs: Vec<Segment>,
}

/// Key identifying a cuspidal line: the label id together with the
/// common fractional part of the exponents on the line.
pub type LineKey = (Arc<str>, Rat);

pub fn line_key(seg: &Segment) -> LineKey {
    (seg.label.id.clone(), rat::frac_class(seg.a))
}

impl Multisegment {
    pub fn empty() -> Self {
        Multisegment { segs: Vec::new() }
    }

    pub fn new(mut segs: Vec<Segment>) -> Self {
        segs.sort_by(|x, y| x.canonical_cmp(y));
        Multisegment { segs }
    }

    pub fn from_segment(seg: Segment) -> Self {
        Multisegment { segs: vec![seg] }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    pub fn iter(&self) -> impl Iterator<Item = &Segment> {
        self.segs.iter()
    }

    pub fn len(&self) -> usize {
        self.segs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    /// Total size: the sum of the weighted lengths of the segments.
    pub fn abs_length(&self) -> i64 {
        self.segs.iter().map(|s| s.abs_length()).sum()
    }

    /// Multiset sum with a single segment.
    pub fn add(&self, seg: Segment) -> Multisegment {
        let mut segs = self.segs.clone();
        let pos = segs
            .binary_search_by(|x| x.canonical_cmp(&seg))
            .unwrap_or_else(|e| e);
        segs.insert(pos, seg);
        Multisegment { segs }
    }

    /// Multiset sum with an optional segment (`None` adds nothing).
    pub fn add_opt(&self, seg: Option<Segment>) -> Multisegment {
        match seg {
            Some(s) => self.add(s),
            None => self.clone(),
        }
    }

    /// Multiset sum.
    pub fn sum(&self, other: &Multisegment) -> Multisegment {
        let mut segs = self.segs.clone();
        segs.extend(other.segs.iter().cloned());
        Multisegment::new(segs)
    }

    /// Removes one occurrence of `seg`; `None` when absent.
    pub fn sub(&self, seg: &Segment) -> Option<Multisegment> {
        let pos = self.segs.iter().position(|x| x == seg)?;
        let mut segs = self.segs.clone();
        segs.remove(pos);
        Some(Multisegment { segs })
    }

    /// Multiset difference; `None` when `other` is not contained.
    pub fn minus(&self, other: &Multisegment) -> Option<Multisegment> {
        let mut cur = self.clone();
        for seg in other.iter() {
            cur = cur.sub(seg)?;
        }
        Some(cur)
    }

    /// Multiplicity-aware containment test.
    pub fn contains(&self, seg: &Segment) -> bool {
        self.segs.iter().any(|x| x == seg)
    }

    /// Shift every exponent by `x`.
    pub fn twist(&self, x: Rat) -> Multisegment {
        Multisegment::new(self.segs.iter().map(|s| s.twist(x)).collect())
    }

    /// Segment-wise dual; an involution.
    pub fn theta(&self) -> Multisegment {
        Multisegment::new(self.segs.iter().map(|s| s.theta()).collect())
    }

    /// Cuspidal support: the multiset of points covered by the segments,
    /// sorted canonically.
    pub fn csupp(&self) -> Vec<CuspidalPoint> {
        let mut pts = Vec::new();
        for seg in &self.segs {
            let mut x = seg.a;
            while x <= seg.b {
                pts.push(CuspidalPoint::new(seg.label.clone(), x));
                x += rat::int(1);
            }
        }
        pts.sort_by(|p, q| p.canonical_cmp(q));
        pts
    }

    /// True when the point appears in the cuspidal support.
    pub fn csupp_contains(&self, label: &CuspidalLabel, x: Rat) -> bool {
        self.segs.iter().any(|s| s.contains_exponent(label, x))
    }

    /// Keeps the segments `[a', b']` on the line of `d = [a, b]` with
    /// `a <= a'` and `b <= b'`, together with nothing else.
    pub fn restrict(&self, d: &Segment) -> Multisegment {
        Multisegment::new(
            self.segs
                .iter()
                .filter(|s| s.same_line(d) && d.a <= s.a && d.b <= s.b)
                .cloned()
                .collect(),
        )
    }

    /// Segments starting at `nu^x rho` (on the line of the reference
    /// segment's label).
    pub fn slice_start(&self, label: &CuspidalLabel, x: Rat) -> Vec<Segment> {
        self.segs
            .iter()
            .filter(|s| &s.label == label && s.a == x)
            .cloned()
            .collect()
    }

    /// Segments ending at `nu^x rho`.
    pub fn slice_end(&self, label: &CuspidalLabel, x: Rat) -> Vec<Segment> {
        self.segs
            .iter()
            .filter(|s| &s.label == label && s.b == x)
            .cloned()
            .collect()
    }

    /// The segments listed so that no later segment precedes an earlier
    /// one: sorted by end, then start, then label.
    pub fn ascending_order(&self) -> Vec<Segment> {
        let mut segs = self.segs.clone();
        segs.sort_by(|x, y| x.ascending_cmp(y));
        segs
    }

    /// True when no two segments of the multiset are linked; equivalent
    /// to the associated Langlands representation being generic.
    pub fn is_generic(&self) -> bool {
        for (i, s) in self.segs.iter().enumerate() {
            for t in &self.segs[i + 1..] {
                if s.linked(t) {
                    return false;
                }
            }
        }
        true
    }

    /// Splits the multiset by cuspidal line, in deterministic (label id,
    /// fractional class) order.
    pub fn lines(&self) -> Vec<(LineKey, Multisegment)> {
        let mut out: Vec<(LineKey, Vec<Segment>)> = Vec::new();
        for seg in &self.segs {
            let key = line_key(seg);
            match out.iter_mut().find(|(k, _)| *k == key) {
                Some((_, v)) => v.push(seg.clone()),
                None => out.push((key, vec![seg.clone()])),
            }
        }
        out.sort_by(|(k1, _), (k2, _)| k1.0.cmp(&k2.0).then(k1.1.cmp(&k2.1)));
        out.into_iter()
            .map(|(k, v)| (k, Multisegment::new(v)))
            .collect()
    }

    /// All distinct line keys appearing in the multiset.
    pub fn line_keys(&self) -> Vec<LineKey> {
        self.lines().into_iter().map(|(k, _)| k).collect()
    }
}

impl FromIterator<Segment> for Multisegment {
    fn from_iter<T: IntoIterator<Item = Segment>>(iter: T) -> Self {
        Multisegment::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segs.is_empty() {
            return write!(f, "GL0");
        }
        let parts: Vec<String> = self.segs.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
