use thiserror::Error;

/// Errors raised by the finite-model operations.
///
/// Budget exhaustion in the crossword search is not an error; it is reported
/// through the search outcome types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set mismatch: expected size {expected}, found {found}")]
    GroundMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for ground set of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("labels invalid: {0}")]
    InvalidLabels(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("word {0} is not a member of the family")]
    NotMember(String),

    #[error("interval endpoints are not ordered: {lower} is not contained in {upper}")]
    NotOrdered { lower: String, upper: String },

    #[error("{what} of size {actual} exceeds the limit {limit}")]
    TooLarge { what: &'static str, actual: usize, limit: usize },

    #[error("family is not T1: no member contains {a} but not {b}")]
    NotT1 { a: usize, b: usize },

    #[error("relation is not a preorder: {0}")]
    NotPreorder(String),

    #[error("not a partial order with bounds: {0}")]
    InvalidPoset(String),

    #[error("word is not an up-set: {0}")]
    NotUpSet(String),

    #[error("blocks do not partition the family: {0}")]
    NotPartition(String),

    #[error("malformed lattice term: {0}")]
    MalformedTerm(String),

    #[error("term does not depend on variable {0}")]
    NonEssentialVariable(usize),

    #[error("split point {split} is invalid for a term of arity {arity}")]
    InvalidSplit { split: usize, arity: usize },

    #[error("no pinning prefix exists although the term depends on every argument")]
    PinningNotFound,

    #[error("{chain} chain is not monotone at position {index}")]
    ChainNotMonotone { chain: &'static str, index: usize },

    #[error("{chain} chain is not strictly monotone at position {index}")]
    ChainNotStrict { chain: &'static str, index: usize },

    #[error("chain terminal condition fails: {0}")]
    ChainTerminal(&'static str),

    #[error("chains have different lengths ({xs} and {ys})")]
    ChainLengthMismatch { xs: usize, ys: usize },

    #[error("hypothesis fails: y_{n} contains x_{m} meet the top of the ascending chain")]
    ContainmentHypothesis { m: usize, n: usize },

    #[error("members do not form an antichain: {0}")]
    NotAntichain(String),

    #[error("semilattice above the base is not closed under meets: {0}")]
    NotMeetClosed(String),

    #[error("invalid tuple set: {0}")]
    InvalidTuples(String),

    #[error("no sunflower of size {threshold} exists at any split point")]
    NoSunflower { threshold: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("point is under-specified: pair sits at prefix position {position} but the island has {island_bits} bits")]
    UnderSpecifiedPoint { position: usize, island_bits: usize },

    #[error("points are identical")]
    IdenticalPoints,

    #[error("gamma bound {gamma_max} does not exceed the stratum {needed} of both points")]
    GammaTooSmall { gamma_max: usize, needed: usize },

    #[error("generator index {index} is not below the bound {bound}")]
    GeneratorOutOfRange { index: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
