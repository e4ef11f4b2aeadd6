//! Cuspidal labels and points on cuspidal lines.

use crate::rat::{self, Rat};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// An abstract label for an irreducible cuspidal representation.
///
/// Labels are identified purely by `id`: two labels with the same `id`
/// are the same cuspidal, and callers are expected never to register the
/// same `id` with different `dim`/`dual_id`/`unitary` data (the CLI
/// session layer enforces this).  `dual_id` names the contragredient
/// label; a self-dual label has `dual_id == id`.
#[derive(Clone, Debug)]
pub struct CuspidalLabel {
    pub id: Arc<str>,
    pub dim: u32,
    pub dual_id: Arc<str>,
    pub unitary: bool,
}

impl CuspidalLabel {
    pub fn new(id: &str, dim: u32, dual_id: &str, unitary: bool) -> Self {
        CuspidalLabel {
            id: Arc::from(id),
            dim,
            dual_id: Arc::from(dual_id),
            unitary,
        }
    }

    /// A self-dual unitary label, the common case in examples.
    pub fn self_dual(id: &str, dim: u32) -> Self {
        CuspidalLabel {
            id: Arc::from(id),
            dim,
            dual_id: Arc::from(id),
            unitary: true,
        }
    }

    /// The contragredient label.  Dimension and unitarity are preserved;
    /// the dual of the dual is the original label.
    pub fn dual(&self) -> Self {
        CuspidalLabel {
            id: self.dual_id.clone(),
            dim: self.dim,
            dual_id: self.id.clone(),
            unitary: self.unitary,
        }
    }
}

impl PartialEq for CuspidalLabel {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}
impl Eq for CuspidalLabel {}

impl PartialOrd for CuspidalLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for CuspidalLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.id.cmp(&other.id)
    }
}

impl Hash for CuspidalLabel {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

impl fmt::Display for CuspidalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)
    }
}

/// A point `nu^x . rho` on the cuspidal line of the label `rho`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CuspidalPoint {
    pub label: CuspidalLabel,
    pub exponent: Rat,
}

impl CuspidalPoint {
    pub fn new(label: CuspidalLabel, exponent: Rat) -> Self {
        CuspidalPoint { label, exponent }
    }

    /// Two points are comparable when they share a label and their
    /// exponents differ by an integer.
    pub fn comparable(&self, other: &Self) -> bool {
        self.label == other.label && rat::is_integer(self.exponent - other.exponent)
    }

    /// Partial order on a cuspidal line: defined only for comparable
    /// points.
    pub fn try_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.comparable(other) {
            Some(self.exponent.cmp(&other.exponent))
        } else {
            None
        }
    }

    /// Canonical total ordering used for deterministic enumeration:
    /// label id, then exponent.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.label
            .id
            .cmp(&other.label.id)
            .then(self.exponent.cmp(&other.exponent))
    }
}

impl fmt::Display for CuspidalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nu^{} {}", rat::display(self.exponent), self.label)
    }
}
