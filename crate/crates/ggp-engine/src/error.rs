use thiserror::Error;

/// Diagnostics surfaced by the engine when an operation's precondition
/// fails or an internal procedure cannot make progress.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    /// Two cuspidal points or segments live on different cuspidal lines
    /// and were asked to be compared.
    #[error("incomparable: operands live on different cuspidal lines")]
    Incomparable,

    /// A segment constructor received endpoints whose difference is not
    /// a non-negative integer.
    #[error("invalid segment endpoints: end - start = {0} is not a non-negative integer")]
    InvalidSegment(String),

    /// The removal process was invoked on a multisegment that has no
    /// segment starting at the required point.
    #[error("removal inapplicable: no segment [{start}, c] with c >= {end} present")]
    RemovalInapplicable { start: String, end: String },

    /// The reduction loop of the relevance decision procedure stopped
    /// making progress.
    #[error("reduction stalled: {0}")]
    ReductionStalled(String),

    /// An operation that requires a generic representation was given a
    /// non-generic one.
    #[error("expected a generic representation")]
    NonGeneric,

    /// A well-formedness constraint on input data was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
