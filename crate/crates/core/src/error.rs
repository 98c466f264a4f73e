use thiserror::Error;

/// Errors raised by the core modules. Messages are prefixed with the module
/// that rejected the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition: element {element} is repeated (block {block:?})")]
    Overlap { element: usize, block: Vec<usize> },

    #[error("partition: element {element} is outside the ground set (block {block:?})")]
    OutOfRange { element: usize, block: Vec<usize> },

    #[error("partition: empty block at position {0}")]
    EmptyBlock(usize),

    #[error("partition: element {0} is not covered by any block")]
    Gap(usize),

    #[error("arcs: {0}")]
    InvalidArcs(String),

    #[error("{context}: k must be at least {min}, got {k}")]
    BadOrder {
        context: &'static str,
        k: usize,
        min: usize,
    },

    #[error("{0}: operation requires the zero-based ground set")]
    Convention(&'static str),

    #[error("fillings: {0}")]
    Filling(String),

    #[error("bijections: {0}")]
    Precondition(String),

    /// The input is not in the domain (or the output not in the image) of a
    /// bijection.
    #[error("bijections: membership failure: {0}")]
    Membership(String),

    /// An internal invariant of a bijection step did not hold.
    #[error("bijections: assertion failed: {0}")]
    Assertion(String),

    #[error("bijections: iteration cap of {cap} exceeded in {phase}")]
    CapExceeded { phase: &'static str, cap: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("motzkin: {0}")]
    Motzkin(String),
}

pub type Result<T> = std::result::Result<T, Error>;
