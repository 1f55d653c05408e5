use crate::value::Value;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("zmod modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("cardinality {cardinality} exceeds the enumeration cap {cap}")]
    CapExceeded { cardinality: usize, cap: usize },

    #[error("quotient by the unit ideal")]
    QuotientByUnitIdeal,

    #[error("cyclic module order {d} does not divide the ring modulus {n}")]
    BadCyclicOrder { d: u64, n: u64 },

    #[error("product construction needs at least {min} components")]
    EmptyProduct { min: usize },

    #[error("structures belong to different rings")]
    RingMismatch,

    #[error("structures belong to different modules")]
    ModuleMismatch,

    #[error("unknown element {0}")]
    UnknownElement(Value),

    #[error("not an ideal: {reason}")]
    NotAnIdeal { reason: String },

    #[error("not a submodule: {reason}")]
    NotASubmodule { reason: String },

    #[error("not multiplicatively closed: {0}")]
    NotMultClosed(#[from] MultClosedError),

    #[error("ideal is not maximal")]
    NotMaximal,

    #[error("not a module homomorphism: {reason}")]
    NotAHom { reason: String },

    #[error("lifted set must come from an ideal p and submodule N with pM contained in N")]
    LiftViolation,

    #[error("construction expects a {expected} ring")]
    WrongRingKind { expected: &'static str },

    #[error("axiom audit failed: {0}")]
    AxiomViolation(String),

    #[error("degenerate localization: the fraction ring collapsed to zero")]
    DegenerateLocalization,

    #[error("unknown suite property {0:?}")]
    UnknownProperty(String),

    #[error("unknown search target {0:?}")]
    UnknownTarget(String),

    #[error("replay payload does not fit property {property:?}: {reason}")]
    BadReplay { property: String, reason: String },

    #[error("{0}")]
    Invalid(String),
}

/// Why a candidate set fails the multiplicatively closed axioms.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum MultClosedError {
    #[error("1 is missing from the set")]
    MissingOne,
    #[error("0 belongs to the set")]
    ContainsZero,
    #[error("{x}*{y} = {product} is not in the set")]
    NotClosed { x: Value, y: Value, product: Value },
}
