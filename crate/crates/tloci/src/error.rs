use thiserror::Error;

/// Errors surfaced by the combinatorial kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("period k must be positive, got {0}")]
    NonPositivePeriod(i64),

    #[error("window has length {got}, expected k = {expected}")]
    WindowLength { got: usize, expected: usize },

    #[error("window entries {a} and {b} share residue {residue} mod {k}")]
    RepeatedResidue { a: i64, b: i64, residue: i64, k: usize },

    #[error("index {index} out of range [0, {k})")]
    IndexOutOfRange { index: usize, k: usize },

    #[error("mismatched periods: {0} vs {1}")]
    MismatchedK(usize, usize),

    #[error("permutation has shift {0}, expected 0")]
    NonzeroShift(i64),

    #[error("slipface table violates {rule} at cell (a = {a}, b = {b})")]
    SlipfaceValidation { rule: &'static str, a: i64, b: i64 },

    #[error("slipface table too narrow to determine window entry at column b = {b}")]
    TableTooNarrow { b: i64 },

    #[error("twist second coordinate {b} outside {{-k+1, ..., 0}} for k = {k}")]
    TwistOutOfRange { b: i64, k: usize },

    #[error("expected {expected} vanishing orders, got {got}")]
    WrongLength { got: usize, expected: usize },

    #[error("vanishing orders must be non-negative, got {0}")]
    NegativeVanishingOrder(i64),

    #[error("word is not reduced: letter {letter} at step {step} does not raise the inversion count")]
    NotReduced { step: usize, letter: usize },

    #[error("adjacent equal letters at position {0}; not a reduced word")]
    AdjacentEqualLetters(usize),

    #[error("{kind} move not applicable at position {position}: {reason}")]
    MoveInapplicable {
        kind: &'static str,
        position: usize,
        reason: &'static str,
    },

    #[error("shuffle moves require k >= 3, got k = {0}")]
    ShuffleRank(usize),

    #[error("degree {got} does not match chi + g = {expected}")]
    DegreeMismatch { got: i64, expected: i64 },

    #[error("word contains bullet slots; a full reduced word of length g is required")]
    BulletsPresent,

    #[error("shuffle poset requires a sorted window")]
    UnsortedWindow,

    #[error("sheet label {label} out of range [0, {k})")]
    SheetOutOfRange { label: usize, k: usize },

    #[error("transposition has equal entries ({0}, {0})")]
    DegenerateTransposition(usize),

    #[error("sheet count k must be at least 2, got {0}")]
    TooFewSheets(usize),

    #[error("monodromy tuple is empty")]
    EmptyTuple,

    #[error("tuple length {0} is odd; expected an even number of transpositions")]
    OddTupleLength(usize),

    #[error("total monodromy product is not a k-cycle")]
    NotKCycle,

    #[error("orbit search guard exceeded: requires k <= {max_k} and tuple length <= {max_r}, got k = {k}, length = {r}")]
    OrbitGuard {
        k: usize,
        r: usize,
        max_k: usize,
        max_r: usize,
    },

    #[error("unknown move descriptor {0:?}")]
    BadMoveDescriptor(String),
}

pub type Result<T> = std::result::Result<T, Error>;
