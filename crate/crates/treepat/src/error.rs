use crate::perm::JumpDir;
use crate::tree::Dir;

/// Errors produced by parsing, preconditions and domain checks.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// The input contains the classical pattern 231; positions are 1-based.
    #[error("input contains 231 at positions ({0}, {1}, {2})")]
    Contains231(usize, usize, usize),

    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),

    #[error("cannot rotate vertex {vertex} {dir}: {reason}")]
    Rotation {
        vertex: usize,
        dir: Dir,
        reason: &'static str,
    },

    /// A slide failed mid-way; `step` is the 1-based index of the first
    /// rotation whose precondition does not hold.
    #[error("slide of vertex {vertex} {dir} fails at step {step}: {reason}")]
    Slide {
        vertex: usize,
        dir: Dir,
        step: usize,
        reason: &'static str,
    },

    #[error("malformed pattern: {0}")]
    PatternSyntax(String),

    #[error("edge string has length {got}, expected {expected}")]
    EdgeLength { expected: usize, got: usize },

    /// A `-` edge was requested at a position where the two edge values give
    /// different avoider sets.
    #[error("'-' not allowed for vertex {vertex}: the edge value changes the avoider set")]
    NotDontCare { vertex: usize },

    #[error("pattern {pattern} is not friendly: {reason}")]
    NotFriendly { pattern: String, reason: String },

    #[error("mesh pattern has length {0}, the tameness test requires length >= 3")]
    MeshTooShort(usize),

    #[error("cannot jump value {value} {dir} by {steps}: {reason}")]
    Jump {
        value: usize,
        dir: JumpDir,
        steps: usize,
        reason: &'static str,
    },

    /// A bijection was applied to an input outside its domain.
    #[error("input outside the map's domain: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("engine mismatch: {0}")]
    EngineMismatch(String),

    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    /// Something the preconditions rule out happened anyway.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
