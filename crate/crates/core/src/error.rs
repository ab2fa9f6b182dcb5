use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("field GF({p}^{m}) exceeds the supported size 2^20")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus {0:?} is reducible")]
    ReducibleModulus(Vec<u32>),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("element code {code} out of range for a field of order {order}")]
    ElementOutOfRange { code: u64, order: u32 },
    #[error("field of order {0} is not a quadratic extension")]
    NotQuadraticExtension(u32),
    #[error("length {n} is not coprime to q = {q}")]
    NonCoprimeLength { n: usize, q: u32 },
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("generator matrix is zero")]
    ZeroMatrix,
    #[error("defining set is not a union of cyclotomic cosets (missing {0})")]
    NotCosetClosed(usize),
    #[error("polynomial does not divide x^n - 1")]
    NotDivisor,
    #[error("evaluation point {0} is repeated")]
    RepeatedEvaluationPoint(u32),
    #[error("column multiplier at position {0} is zero")]
    ZeroMultiplier(usize),
    #[error("redundancy r = {r} outside 1..={max}")]
    RedundancyOutOfRange { r: usize, max: usize },
    #[error("basis is dependent over the subfield")]
    DependentBasis,
    #[error("distance budget exceeded: {lower} <= d <= {upper}")]
    BudgetExceeded { lower: usize, upper: usize },
    #[error("independent computations disagree: {0}")]
    OracleDisagreement(String),
    #[error("codes have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("code is not dual-containing")]
    NotDualContaining,
    #[error("requested {requested} ebits but at most {max} are available")]
    TooManyEbitsRequested { requested: usize, max: usize },
    #[error("witness search failed: {0}")]
    WitnessSearchFailed(String),
    #[error("condition violated: {0}")]
    ConditionViolated(String),
    #[error("Hermitian dual is not in moment form")]
    NotMomentForm,
    #[error("invalid r = {0}")]
    InvalidR(usize),
    #[error("code is not LCD")]
    NotLcd,
    #[error("parity of k is not supported: {0}")]
    ParityNotSupported(String),
    #[error("congruence mismatch: {0}")]
    CongruenceMismatch(String),
    #[error("no witness exists: {0}")]
    NoWitness(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("claim mismatch: {0}")]
    ClaimMismatch(String),
    #[error("verification failed at `{0}`")]
    VerificationFailed(String),
}
