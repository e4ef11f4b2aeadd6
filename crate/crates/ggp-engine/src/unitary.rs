//! Unitary representations: Speh factors, quasi-Speh multisegments, the
//! matching criterion for relevance of unitary pairs, and branching
//! classifiers for Speh representations.

use crate::error::EngineError;
use crate::irrep::IrrRep;
use crate::label::CuspidalLabel;
use crate::multisegment::Multisegment;
use crate::rat::{self, Rat};
use crate::segment::Segment;

/// The segment `[-(u-1)/2, (u-1)/2]_rho`.
pub fn centered_segment(label: &CuspidalLabel, u: u32) -> Segment {
    let half_span = rat::rat(u as i64 - 1, 2);
    Segment::make(label.clone(), -half_span, half_span).unwrap()
}

/// The Speh multisegment `m_rho(u, v)`: `v` copies of the centered
/// segment of length `u`, at exponent shifts symmetric around zero.
pub fn speh_multisegment(label: &CuspidalLabel, u: u32, v: u32) -> Multisegment {
    let mut segs = Vec::new();
    let mut j = -rat::rat(v as i64 - 1, 2);
    for _ in 0..v {
        segs.push(centered_segment(label, u).twist(j));
        j += rat::int(1);
    }
    Multisegment::new(segs)
}

/// Quasi-Speh multisegment with the top row shortened from the left by
/// `w` points (`w = 0` is the Speh multisegment, `w = u` deletes the top
/// row).
pub fn quasi_speh_right(label: &CuspidalLabel, u: u32, v: u32, w: u32) -> Multisegment {
    assert!(w <= u, "shortening must not exceed the row length");
    let base = centered_segment(label, u);
    let mut segs = Vec::new();
    let mut j = -rat::rat(v as i64 - 1, 2);
    for _ in 0..v - 1 {
        segs.push(base.twist(j));
        j += rat::int(1);
    }
    let top = Segment::make(label.clone(), base.a + rat::int(w as i64), base.b);
    if let Some(s) = top {
        segs.push(s.twist(rat::rat(v as i64 - 1, 2)));
    }
    Multisegment::new(segs)
}

/// Quasi-Speh multisegment with the bottom row shortened from the right
/// by `w` points; the mirror image of [`quasi_speh_right`].
pub fn quasi_speh_left(label: &CuspidalLabel, u: u32, v: u32, w: u32) -> Multisegment {
    assert!(w <= u, "shortening must not exceed the row length");
    let base = centered_segment(label, u);
    let mut segs = Vec::new();
    let mut j = -rat::rat(v as i64 - 1, 2) + rat::int(1);
    for _ in 0..v - 1 {
        segs.push(base.twist(j));
        j += rat::int(1);
    }
    let bottom = Segment::make(label.clone(), base.a, base.b - rat::int(w as i64));
    if let Some(s) = bottom {
        segs.push(s.twist(-rat::rat(v as i64 - 1, 2)));
    }
    Multisegment::new(segs)
}

/// One factor of an irreducible unitary representation: a Speh
/// representation `speh(rho, u, v)` twisted into the complementary
/// series by `alpha` (`alpha = 0` is the Speh representation itself;
/// `0 < alpha < 1/2` stands for the product of the twists by `nu^alpha`
/// and `nu^{-alpha}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpehFactor {
    pub label: CuspidalLabel,
    pub u: u32,
    pub v: u32,
    pub alpha: Rat,
}

impl SpehFactor {
    pub fn new(label: CuspidalLabel, u: u32, v: u32, alpha: Rat) -> Result<Self, EngineError> {
        if !label.unitary {
            return Err(EngineError::InvalidInput(format!(
                "label {} is not unitary",
                label.id
            )));
        }
        if u == 0 || v == 0 {
            return Err(EngineError::InvalidInput(
                "factor parameters u, v must be positive".into(),
            ));
        }
        if alpha < rat::int(0) || alpha >= rat::rat(1, 2) {
            return Err(EngineError::InvalidInput(format!(
                "complementary-series parameter {} outside [0, 1/2)",
                rat::display(alpha)
            )));
        }
        Ok(SpehFactor { label, u, v, alpha })
    }

    /// The Langlands multisegment of the factor.
    pub fn multisegment(&self) -> Multisegment {
        let base = speh_multisegment(&self.label, self.u, self.v);
        if rat::is_zero(self.alpha) {
            base
        } else {
            base.twist(self.alpha).sum(&base.twist(-self.alpha))
        }
    }
}

/// An irreducible unitary representation: a product of Speh /
/// complementary-series factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitaryRep {
    pub factors: Vec<SpehFactor>,
}

impl UnitaryRep {
    pub fn new(factors: Vec<SpehFactor>) -> Self {
        UnitaryRep { factors }
    }

    pub fn rep(&self) -> IrrRep {
        let mut m = Multisegment::empty();
        for f in &self.factors {
            m = m.sum(&f.multisegment());
        }
        IrrRep::langlands(m)
    }
}

/// How two factors are paired by the matching criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchRule {
    /// Same `(rho, u, alpha)`, second factor has `v + 1`.
    GrowV,
    /// Same `(rho, u, alpha)`, second factor has `v - 1`.
    ShrinkV,
    /// Same `(rho, u, v)`, parameters `alpha` and `1/2 - alpha` with
    /// `alpha > 0`.
    MirrorAlpha,
}

/// A successful match: pairs of factor indices with the rule used, plus
/// the leftover factors (all of which must have `v = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchCertificate {
    pub pairs: Vec<(usize, usize, MatchRule)>,
    pub unmatched_left: Vec<usize>,
    pub unmatched_right: Vec<usize>,
}

fn pair_rule(f: &SpehFactor, g: &SpehFactor) -> Option<MatchRule> {
    if f.label != g.label || f.u != g.u {
        return None;
    }
    if f.alpha == g.alpha && g.v == f.v + 1 {
        return Some(MatchRule::GrowV);
    }
    if f.alpha == g.alpha && f.v >= 2 && g.v == f.v - 1 {
        return Some(MatchRule::ShrinkV);
    }
    if f.v == g.v && f.alpha > rat::int(0) && g.alpha == rat::rat(1, 2) - f.alpha {
        return Some(MatchRule::MirrorAlpha);
    }
    None
}

/// Decides relevance of a pair of unitary representations by searching
/// for a pairing of their factors: every factor with `v != 1` on either
/// side must be paired by one of the rules, and leftovers must have
/// `v = 1`.  Returns the pairing when one exists.
pub fn unitary_relevant(pi: &UnitaryRep, pi2: &UnitaryRep) -> Option<MatchCertificate> {
    let lf = &pi.factors;
    let rf = &pi2.factors;
    let adj: Vec<Vec<usize>> = lf
        .iter()
        .map(|f| {
            rf.iter()
                .enumerate()
                .filter(|(_, g)| pair_rule(f, g).is_some())
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let mut assignment: Vec<Option<usize>> = vec![None; lf.len()];
    let mut used: Vec<bool> = vec![false; rf.len()];
    if !assign(0, lf, rf, &adj, &mut assignment, &mut used) {
        return None;
    }
    let mut pairs = Vec::new();
    let mut unmatched_left = Vec::new();
    for (i, slot) in assignment.iter().enumerate() {
        match slot {
            Some(j) => pairs.push((i, *j, pair_rule(&lf[i], &rf[*j]).unwrap())),
            None => unmatched_left.push(i),
        }
    }
    let unmatched_right = (0..rf.len()).filter(|j| !used[*j]).collect();
    Some(MatchCertificate {
        pairs,
        unmatched_left,
        unmatched_right,
    })
}

/// Backtracking search for an admissible assignment of left factors to
/// right factors.  Factor counts are small (a handful per side), so an
/// exhaustive search is exact and cheap.
fn assign(
    i: usize,
    lf: &[SpehFactor],
    rf: &[SpehFactor],
    adj: &[Vec<usize>],
    assignment: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
) -> bool {
    if i == lf.len() {
        // Every unmatched right factor must be a leftover with v = 1.
        return rf
            .iter()
            .enumerate()
            .all(|(j, g)| used[j] || g.v == 1);
    }
    for &j in &adj[i] {
        if !used[j] {
            used[j] = true;
            assignment[i] = Some(j);
            if assign(i + 1, lf, rf, adj, assignment, used) {
                return true;
            }
            assignment[i] = None;
            used[j] = false;
        }
    }
    if lf[i].v == 1 {
        // A v = 1 factor may stay unmatched.
        if assign(i + 1, lf, rf, adj, assignment, used) {
            return true;
        }
    }
    false
}

/// Decides whether `Hom(pi restricted, speh)` is nonzero for the Speh
/// representation with rows `[a, b], [a+1, b+1], ..., [a+h, b+h]` on
/// `rho`, where `pi` lives one size up.  The criterion: the half-twist
/// of `pi` must contain the top `h` rows of the ladder, and the residue
/// must be generic of the complementary size, or (for one-dimensional
/// `rho`) one of a short list of linked two-segment shapes anchored at
/// the bottom or top row of the ladder.
pub fn speh_branching_classify(
    pi: &IrrRep,
    label: &CuspidalLabel,
    a: Rat,
    b: Rat,
    h: u32,
) -> bool {
    let one = rat::int(1);
    let mut ladder = Multisegment::empty();
    for i in 1..=h as i64 {
        ladder = ladder.add(Segment::make(label.clone(), a + rat::int(i), b + rat::int(i)).unwrap());
    }
    let shifted = pi.data().twist(rat::rat(1, 2));
    let residue = match shifted.minus(&ladder) {
        Some(r) => r,
        None => return false,
    };
    let k = label.dim as i64;
    let width = rat::to_i64(b - a) + 1;
    if residue.abs_length() != k * width + 1 {
        return false;
    }
    if residue.is_generic() {
        return true;
    }
    if k == 1 && residue.len() == 2 {
        let s1 = &residue.segments()[0];
        let s2 = &residue.segments()[1];
        // Shape [a, c] + [c+1, b+1] with a <= c <= b.
        if s1.label == *label
            && s2.label == *label
            && s1.a == a
            && s2.b == b + one
            && s2.a == s1.b + one
            && s1.b >= a
            && s1.b <= b
        {
            return true;
        }
        // Shape [a+h, b+h] + [a+h+1, a+h+1].
        let hh = rat::int(h as i64);
        if s1.label == *label
            && s2.label == *label
            && s1.a == a + hh
            && s1.b == b + hh
            && s2.a == a + hh + one
            && s2.b == a + hh + one
        {
            return true;
        }
        // Shape [a+h, c] + [c+1, b+h+1] with a+h <= c <= b+h: the
        // top-row counterpart of the first linked shape.
        if s1.label == *label
            && s2.label == *label
            && s1.a == a + hh
            && s2.b == b + hh + one
            && s2.a == s1.b + one
            && s1.b >= a + hh
            && s1.b <= b + hh
        {
            return true;
        }
    }
    false
}

/// The mirror classifier: decides whether `Hom(speh restricted, pi2)` is
/// nonzero for the Speh representation with rows `[a, b], ...,
/// [a+h, b+h]` on `rho`, where `pi2` lives one size down.  Here the
/// negative half-twist of `pi2` must contain the bottom `h` rows and
/// leave a generic residue.
pub fn speh_shifted_branching_classify(
    pi2: &IrrRep,
    label: &CuspidalLabel,
    a: Rat,
    b: Rat,
    h: u32,
) -> bool {
    let mut ladder = Multisegment::empty();
    for i in 0..h as i64 {
        ladder = ladder.add(Segment::make(label.clone(), a + rat::int(i), b + rat::int(i)).unwrap());
    }
    let shifted = pi2.data().twist(-rat::rat(1, 2));
    let residue = match shifted.minus(&ladder) {
        Some(r) => r,
        None => return false,
    };
    let k = label.dim as i64;
    let width = rat::to_i64(b - a) + 1;
    residue.abs_length() == k * width - 1 && residue.is_generic()
}
