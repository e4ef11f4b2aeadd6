//! Combinatorial engine for branching laws of general linear groups.
//!
//! The central objects are *multisegments*: finite multisets of segments
//! `[a, b]_rho` on cuspidal lines.  On top of them the crate implements
//! Langlands/Zelevinsky data normalization, the Zelevinsky involution,
//! Bernstein–Zelevinsky style derivative and integral operators, highest
//! derivative multisegments, commutation tests for derivative/integral
//! pairs, and a decision procedure for Gan–Gross–Prasad relevance of a
//! pair of irreducible representations, together with a brute-force
//! search oracle and utilities for unitary representations (Speh
//! factors and their matching criterion).

pub mod error;
pub mod rat;
pub mod label;
pub mod segment;
pub mod multisegment;
pub mod involution;
pub mod irrep;
pub mod derivative;
pub mod integral;
pub mod rdli;
pub mod relevance;
pub mod unitary;
pub mod oracle;

pub use error::EngineError;
pub use rat::Rat;
pub use label::{CuspidalLabel, CuspidalPoint};
pub use segment::Segment;
pub use multisegment::Multisegment;
pub use irrep::IrrRep;
