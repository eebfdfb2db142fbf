use thiserror::Error;

use crate::order::Elem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must contain at least one element")]
    EmptyCarrier,
    #[error("invalid element label `{0}`")]
    InvalidLabel(String),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    /// The supplied relation is not a partial order. `witness` holds the
    /// offending element indices (one for reflexivity, two for antisymmetry,
    /// three for transitivity).
    #[error("not a poset: {axiom} fails at {message}")]
    NotAPoset {
        axiom: &'static str,
        witness: Vec<Elem>,
        message: String,
    },
    /// Some pair of elements lacks a greatest lower or least upper bound.
    #[error("not a lattice: ({x}, {y}) has no {bound}")]
    NotALattice {
        x: String,
        y: String,
        bound: &'static str,
        witness: (Elem, Elem),
    },

    #[error("operation table does not form a commutative monoid: {0}")]
    NotAMonoid(String),
    #[error("no residuum: {{x : x·{y} ≤ {z}}} has no greatest element")]
    NoResiduum {
        y: String,
        z: String,
        witness: (Elem, Elem),
    },
    #[error("supplied implication disagrees with the derived residuum at {y}→{z}: supplied {supplied}, derived {derived}")]
    ImpMismatch {
        y: String,
        z: String,
        supplied: String,
        derived: String,
    },
    #[error("not an MV-algebra: {0}")]
    NotMV(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("lattice size {0} outside the supported range 1..=7")]
    SizeOutOfRange(usize),
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("hypothesis `{flag}` is not a hypothesis of target `{target}`")]
    UnknownHypothesis { target: String, flag: String },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document: {0}")]
    Validation(String),
}
