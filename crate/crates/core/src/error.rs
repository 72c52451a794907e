use crate::natmath::Nat;
use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Domain violations are errors, never silent adjustments: the positive-pair
/// function rejects zeros instead of shifting, dimension mismatches are
/// rejected instead of padding, and an inverse that cannot find a preimage
/// reports it instead of returning garbage.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    DimensionZero,

    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("root degree must be at least 1")]
    DegreeZero,

    #[error("base must be at least 2, got {0}")]
    BaseTooSmall(u64),

    #[error("defined on positive integers only")]
    PositiveDomain,

    #[error("{0:?} is not a permutation of the argument positions")]
    InvalidPermutation(Vec<usize>),

    #[error("a pairing (dimension 2) is required, got dimension {0}")]
    PairingRequired(usize),

    #[error("function is not max-dominating at code {code}: decoded coordinate {coordinate} exceeds it")]
    NotMaxDominating { code: Nat, coordinate: Nat },

    #[error("shell numbering has no closed-form count and no enumeration bound")]
    CountUnavailable,

    #[error("two points encode to the same code {code}: {first:?} and {second:?}")]
    BijectivityViolation {
        code: Nat,
        first: Vec<Nat>,
        second: Vec<Nat>,
    },

    #[error("no point of the shell encodes to {code}, which would contradict bijectivity")]
    InverseSearchFailed { code: Nat },

    #[error("code {code} is not present in the table")]
    CodeNotInTable { code: Nat },

    #[error("prefix {prefix} exceeds the table's sound prefix {sound:?}")]
    UnsoundPrefix { prefix: u64, sound: Option<u64> },

    #[error("malformed tree expression at byte {0}")]
    TreeSyntax(usize),

    #[error("value too large to represent in memory: {0}")]
    Overflow(&'static str),
}
