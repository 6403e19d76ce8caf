use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{0}: argument must be positive")]
    ZeroArgument(&'static str),

    #[error("{d} does not divide {n}")]
    NotADivisor { d: u64, n: u64 },

    #[error("{u} is not a unit mod {n}")]
    NotAUnit { u: u64, n: u64 },

    #[error("residue must be 1 or 3, got {0}")]
    InvalidResidue(u64),

    #[error("sign must be +1 or -1, got {0}")]
    InvalidSign(i64),

    #[error("order {0} is not a multiple of 4")]
    OrderNotMultipleOfFour(u64),

    #[error("{context} is not integral: {value} (off by {error:e})")]
    NonIntegral {
        context: &'static str,
        value: f64,
        error: f64,
    },

    #[error("symbol element {element} out of range [1, {max}]")]
    SymbolOutOfRange { element: u64, max: u64 },

    #[error("symbol is not oriented: {a} and {b} are inverses mod {n}")]
    NotOriented { a: u64, b: u64, n: u64 },

    #[error("not integral: {0}")]
    NotIntegral(String),

    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: u64, n: u64 },

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("invalid time {p}/{q}")]
    InvalidTime { p: u64, q: u64 },

    #[error("step size must be in [1, {n}], got {k}")]
    InvalidStep { k: u64, n: u64 },

    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: u64, cap: u64 },

    #[error("transfer time {p}/{q} found but fidelity is only {fidelity}")]
    FidelityMismatch { p: u64, q: u64, fidelity: f64 },
}
