//! Irreducible representations presented by multisegment data.

use crate::involution::zelevinsky_involution;
use crate::multisegment::Multisegment;
use crate::rat::Rat;
use std::fmt;

/// How a multisegment parameterizes an irreducible representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DataKind {
    /// `L(m)`: the Langlands quotient attached to `m`.
    Langlands,
    /// `Z(m)`: the Zelevinsky construction attached to `m`.
    Zelevinsky,
}

/// An irreducible representation of some `GL_n`, stored in normalized
/// Langlands form.  `GL_0` (the empty multisegment) is a valid
/// representation, distinct from the zero object — operators that can
/// kill a representation return `Option<IrrRep>` with `None` meaning
/// zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrrRep {
    langlands: Multisegment,
}

impl IrrRep {
    /// `L(m)`.
    pub fn langlands(m: Multisegment) -> Self {
        IrrRep { langlands: m }
    }

    /// `Z(m)`, normalized to Langlands form through the involution.
    pub fn zelevinsky(m: Multisegment) -> Self {
        IrrRep {
            langlands: zelevinsky_involution(&m),
        }
    }

    pub fn from_data(kind: DataKind, m: Multisegment) -> Self {
        match kind {
            DataKind::Langlands => IrrRep::langlands(m),
            DataKind::Zelevinsky => IrrRep::zelevinsky(m),
        }
    }

    /// The Langlands multisegment.
    pub fn data(&self) -> &Multisegment {
        &self.langlands
    }

    /// The Zelevinsky multisegment (computed through the involution).
    pub fn zelevinsky_data(&self) -> Multisegment {
        zelevinsky_involution(&self.langlands)
    }

    /// The size `n` of the group `GL_n` the representation lives on.
    pub fn size(&self) -> i64 {
        self.langlands.abs_length()
    }

    pub fn twist(&self, x: Rat) -> IrrRep {
        IrrRep {
            langlands: self.langlands.twist(x),
        }
    }

    /// Contragredient-with-sign dual: apply the segment-wise dual to the
    /// Langlands data.
    pub fn theta(&self) -> IrrRep {
        IrrRep {
            langlands: self.langlands.theta(),
        }
    }

    pub fn is_generic(&self) -> bool {
        self.langlands.is_generic()
    }
}

impl fmt::Display for IrrRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({})", self.langlands)
    }
}
