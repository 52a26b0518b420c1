use thiserror::Error;

use crate::ring::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring descriptor: {0}")]
    InvalidRing(String),

    #[error("element {element} is outside the carrier Z/{modulus}")]
    OutOfCarrier { element: Element, modulus: Element },

    #[error("hyperproduct of an empty set")]
    EmptyOperand,

    #[error("zeroth hyperpower is undefined")]
    ZeroPower,

    #[error("integer overflow while evaluating a hyperproduct")]
    Overflow,

    #[error("ideal handle does not belong to this ring family")]
    FamilyMismatch,

    #[error("not a hyperideal: {0}")]
    NotHyperideal(String),

    #[error("degenerate quotient: {0}")]
    DegenerateQuotient(String),

    #[error("homomorphism endpoints do not match")]
    EndpointMismatch,

    #[error("unknown law id `{0}`")]
    UnknownLaw(String),

    #[error("grid is incompatible with law {law}: {reason}")]
    IncompatibleGrid { law: String, reason: String },

    #[error("empty grid")]
    EmptyGrid,

    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),

    #[error("malformed specification: {0}")]
    Spec(String),
}
