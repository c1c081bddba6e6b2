use thiserror::Error;

/// Errors raised while building or querying algebraic structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} size {actual} exceeds the configured cap {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("modulus {0} is invalid: every modulus must be at least 2")]
    InvalidModulus(u64),
    #[error("ring axiom `{law}` fails at {witness}")]
    AxiomViolation { law: &'static str, witness: String },
    #[error("module axiom `{law}` fails at {witness}")]
    ModuleAxiomViolation { law: &'static str, witness: String },
    #[error("the tables describe the zero ring (1 = 0)")]
    ZeroRing,
    #[error("element index {index} is outside a carrier of size {size}")]
    BadElement { index: usize, size: usize },
    #[error("table of length {actual} does not match expected length {expected}")]
    BadTable { expected: usize, actual: usize },
    #[error("operation `{0}` is not available for the integer adapter")]
    IntegerAdapter(&'static str),
    #[error("modules are not over the same ring")]
    RingMismatch,
    #[error("operation `{0}` requires a nonzero module")]
    ZeroModule(&'static str),
    #[error("the scalar set must be nonempty")]
    EmptyScalarSet,
    #[error("the module is not a multiplication module")]
    NotMultiplication,
    #[error("the ideal must be proper")]
    ImproperIdeal,
    #[error("I(+)N is not an ideal of the idealization: IM is not contained in N")]
    NotPairIdeal,
    #[error("map is not an R-module homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("construction identity `{identity}` failed: {detail}")]
    IdentityViolation {
        identity: &'static str,
        detail: String,
    },
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("unknown counterexample target `{0}`")]
    UnknownTarget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
