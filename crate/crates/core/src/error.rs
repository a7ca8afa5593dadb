use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("modulus {0} exceeds the supported range (< 2^32)")]
    ModulusTooLarge(u64),
    #[error("field degree {0} is not supported (expected 1 or 2)")]
    UnsupportedDegree(u32),
    #[error("operation requires an odd characteristic, got {0}")]
    EvenCharacteristic(u64),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero in a field")]
    DivisionByZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("invalid interval: lower bound exceeds upper bound")]
    InvalidInterval,
    #[error("polynomial division is not exact: {0}")]
    ExactDivisionFailure(String),

    #[error("adjacency matrix is not symmetric at ({0}, {1})")]
    AsymmetricMatrix(usize, usize),
    #[error("adjacency matrix has a negative entry at ({0}, {1})")]
    NegativeEntry(usize, usize),
    #[error("adjacency matrix has an odd diagonal entry at vertex {0}")]
    OddDiagonal(usize),
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("graph is not regular")]
    NotRegular,
    #[error("regular degree {0} is too small (need k >= 2)")]
    DegreeTooSmall(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("not realizable: {0}")]
    NotRealizable(String),

    #[error("lambda is 0 or 1; the Legendre curve is singular")]
    SingularLambda,
    #[error("supersingular count {found} differs from the mass-formula value {expected}")]
    MassFormulaViolation { expected: u64, found: u64 },
    #[error("j-invariant {0} has a non-trivial weight although 12 | N-1")]
    WeightNotOne(String),
    #[error("N = {0} is not congruent to 1 mod 12")]
    NotCongruentOneMod12(u64),
    #[error("p must differ from N (both {0})")]
    LevelEqualsCharacteristic(u64),
    #[error("no modular polynomial available for p = {0}")]
    MissingModularPolynomial(u64),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("modular polynomial level {found} does not match requested {expected}")]
    LevelMismatch { expected: u64, found: u64 },
    #[error("modular polynomial coefficients differ at ({0}, {1}) and ({1}, {0})")]
    SymmetryViolation(usize, usize),
    #[error("modular polynomial is not monic in X of degree p+1: {0}")]
    MonicityViolation(String),
    #[error("row {row} of the Brandt matrix sums to {sum}, expected {expected}")]
    RowSumViolation { row: usize, sum: u64, expected: u64 },
    #[error("method velu2 is only available for p = 2 (requested p = {0})")]
    UnsupportedMethod(u64),
    #[error("curve model construction failed: {0}")]
    ModelConstructionFailure(String),
    #[error("odd diagonal entries {0:?} prevent a geometric realization")]
    ParityObstruction(Vec<(usize, u64)>),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
