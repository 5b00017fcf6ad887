use thiserror::Error;

/// Errors produced by algebra construction, parsers, and algorithm entry points.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("subset sign of overlapping index sets {i:#b} and {j:#b}")]
    OverlappingSubsets { i: u32, j: u32 },

    #[error("algebra dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("k = {k} is outside the supported range 1..={max} for this operation")]
    KOutOfRange { k: usize, max: usize },

    #[error("walk length k = {k} must satisfy 1 <= k <= n = {n}")]
    WalkLength { k: usize, n: usize },

    #[error("expected exactly {expected} vectors, got {got}")]
    WrongVectorCount { expected: usize, got: usize },

    #[error("coding does not fit the graph: {0}")]
    CodingMismatch(String),

    #[error("graph parse error: {0}")]
    GraphParse(String),

    #[error("circuit parse error: {0}")]
    CircuitParse(String),

    #[error("decomposition parse error: {0}")]
    DecompositionParse(String),

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("polynomials live over different variable universes ({0} vs {1})")]
    VariableUniverseMismatch(usize, usize),

    #[error("monomial product shares variables and multilinear reduction was not requested")]
    NonMultilinearProduct,

    #[error("failed to find a prime of {bit_length} bits after {attempts} attempts; check the RNG seed plumbing")]
    PrimeGeneration { bit_length: u32, attempts: u32 },

    #[error("work budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("circuit is not skew: gate {gate} multiplies two non-input operands")]
    NonSkewCircuit { gate: usize },

    #[error("pattern has no usable path decomposition: {0}")]
    NoPathDecomposition(String),

    #[error("pattern on {k} vertices exceeds the supported maximum {max}")]
    PatternTooLarge { k: usize, max: usize },

    #[error("circuit evaluation error: {0}")]
    CircuitEval(String),

    #[error("cannot parse `{0}` as a rational number")]
    RatioParse(String),

    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(String),
}

pub type Result<T> = std::result::Result<T, Error>;
