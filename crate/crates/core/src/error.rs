use alloc::string::String;
use core::fmt;

/// Errors raised by constructions and analyses. Verification failures of
/// already-built objects are reported through [`crate::hopf::VerifyReport`]
/// instead; an `Error` means an operation could not produce its result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidConductor(u32),
    ConductorMismatch(u32, u32),
    DivisionByZero,
    Parse(String),
    /// Group enumeration would exceed the element cap.
    CapExceeded { cap: usize },
    NotSubgroup(String),
    NotAbelian(String),
    ConductorTooSmall { needed: u32, have: u32 },
    NotExactFactorization(String),
    NotCentralizing(String),
    NotSquareOrder(usize),
    InvalidDecomposition(String),
    /// A cocycle or twist identity fails; the string names it with a witness.
    IdentityFails(String),
    /// A freshly built object fails the Hopf axioms.
    HopfAxioms(String),
    IncompatibleCocyclePair(String),
    NotCertified(String),
    NotInvertible(String),
    InvalidData(String),
    /// Root search for a minimal polynomial failed; a larger conductor may help.
    EigenvalueSearchExhausted(String),
    DimensionMismatch { expected: usize, found: usize },
    NotNormal(String),
    Inconclusive(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidConductor(n) => write!(f, "invalid conductor {n}"),
            Error::ConductorMismatch(a, b) => write!(f, "conductor mismatch: {a} vs {b}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::CapExceeded { cap } => write!(f, "group enumeration exceeds cap of {cap} elements"),
            Error::NotSubgroup(s) => write!(f, "not a subgroup: {s}"),
            Error::NotAbelian(s) => write!(f, "group is not abelian: {s}"),
            Error::ConductorTooSmall { needed, have } => {
                write!(f, "conductor {have} too small; roots of unity of order {needed} required")
            }
            Error::NotExactFactorization(s) => write!(f, "not an exact factorization: {s}"),
            Error::NotCentralizing(s) => write!(f, "element does not centralize subgroup: {s}"),
            Error::NotSquareOrder(n) => write!(f, "group order {n} is not a square"),
            Error::InvalidDecomposition(s) => write!(f, "invalid decomposition: {s}"),
            Error::IdentityFails(s) => write!(f, "identity fails: {s}"),
            Error::HopfAxioms(s) => write!(f, "Hopf axioms fail: {s}"),
            Error::IncompatibleCocyclePair(s) => write!(f, "incompatible cocycle pair: {s}"),
            Error::NotCertified(s) => write!(f, "map not certified: {s}"),
            Error::NotInvertible(s) => write!(f, "not invertible: {s}"),
            Error::InvalidData(s) => write!(f, "invalid data: {s}"),
            Error::EigenvalueSearchExhausted(s) => {
                write!(f, "field/eigenvalue search exhausted ({s}); enlarge the conductor")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotNormal(s) => write!(f, "not normal: {s}"),
            Error::Inconclusive(s) => write!(f, "inconclusive: {s}"),
        }
    }
}

impl core::error::Error for Error {}
