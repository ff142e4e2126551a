use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("entry {0} is already present in the tableau")]
    DuplicateEntry(u32),
    #[error("cell ({row},{col}) is not a cell of the tableau")]
    CellOutOfRange { row: usize, col: usize },
    #[error("partitions of different sizes: {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("chain index {index} out of range 2..={chains}")]
    ChainIndexOutOfRange { index: usize, chains: usize },
    #[error("descendant T_I({0}) is not defined")]
    UndefinedDescendant(usize),
    #[error("first and last chains differ in length ({first} vs {last})")]
    UnequalEndChains { first: usize, last: usize },
    #[error("instance needs at least two chains")]
    SingleChain,
    #[error("interior chain {index} has the end-chain length {length}")]
    InteriorChainRepeatsEnd { index: usize, length: usize },
    #[error("ragged minor selection: {rows} rows, {cols} columns")]
    RaggedSelection { rows: usize, cols: usize },
    #[error("index {index} out of range for a {size}x{size} matrix")]
    MatrixIndex { index: usize, size: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial has no lowest power of t")]
    ZeroPolynomial,
    #[error("no value assigned to {0}")]
    MissingAssignment(String),
    #[error("polynomial parse error: {0}")]
    PolyParse(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("b-system has no solution for chain lengths {0:?}")]
    InfeasibleBSystem(Vec<usize>),
    #[error(
        "window ({0},{1}) does not bound a pair of equal chains with distinct interior lengths"
    )]
    InvalidWindow(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
