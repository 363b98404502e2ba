use thiserror::Error;

/// Errors from parsing, validation and the domain operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable index {0} is out of range 1..=64")]
    VariableIndex(u32),
    #[error("duplicate variable index {0} in monomial")]
    DuplicateVariable(u32),
    #[error("number of variables must be in 1..=64, got {0}")]
    VarCount(u32),
    #[error("monomial {0} does not fit in {1} variables")]
    MonomialRange(String, u32),
    #[error("the unit monomial cannot appear among ideal generators")]
    UnitGenerator,
    #[error("a module needs at least one component")]
    NoComponents,
    #[error("{0} shifts but {1} ideals")]
    ComponentMismatch(usize, usize),
    #[error("shifts must be non-decreasing")]
    UnsortedShifts,
    #[error("component {0} is defined over {1} variables, expected {2}")]
    MixedVarCount(usize, u32, u32),
    #[error("invalid module JSON: {0}")]
    Json(String),
    #[error("degree {0} is out of range 1..={1}")]
    DegreeRange(i64, u32),
    #[error("not a squarefree stable {kind}: {witness}")]
    NotStable { kind: &'static str, witness: String },
    #[error("not a squarefree lexicographic submodule: {0}")]
    NotLex(String),
    #[error("degree slices over {n} variables exceed the enumeration cap {cap}")]
    EnumerationCap { n: u32, cap: u32 },
    #[error("module has no generators")]
    NoGenerators,
    #[error("operation requires a module over S^r (all shifts zero)")]
    NonzeroShifts,
    #[error("({0}, {1}) is not an extremal position")]
    NotExtremal(usize, i64),
    #[error("component {0} has no generators")]
    EmptyComponent(usize),
    #[error("{0} generators exceed the oracle cap {1}")]
    OracleCap(usize, usize),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("invalid construction: {0}")]
    Construction(String),
    #[error("random search exhausted {0} attempts: {1}")]
    RandomSearch(usize, String),
    #[error("value does not fit in a 64-bit JSON number")]
    ValueTooLarge,
    #[error("malformed Betti table text: {0}")]
    TableParse(String),
}
