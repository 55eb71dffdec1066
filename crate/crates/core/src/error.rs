//! Error types shared across the verification kernel.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("singular matrix{}", match .form { Some(i) => format!(" (form {i})"), None => String::new() })]
    Singular {
        /// Index of the offending form when known (1-based).
        form: Option<usize>,
        /// A nonzero kernel vector, as scalar strings.
        kernel: Vec<String>,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not antisymmetric at entry ({row}, {col})")]
    NotAntisymmetric { row: usize, col: usize },

    #[error("expected bidegree ({want_p}, {want_q}), found {found}")]
    WrongBidegree {
        want_p: usize,
        want_q: usize,
        found: String,
    },

    #[error("argument count {got} does not match total degree {want}")]
    ArityMismatch { want: usize, got: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("structure constants fail the Jacobi identity; witness triple ({0}, {1}, {2})")]
    JacobiFails(usize, usize, usize),

    #[error("Jacobi identity required in strict mode; rerun in lab mode to inspect pre-Lie data")]
    JacobiRequired,

    #[error("bivector is not the inverse of the 2-form")]
    NotInverse,

    #[error("epsilon product must be -1 for this operation")]
    EpsilonProductNotMinusOne,

    #[error("hyperkahler axiom {axiom} fails: {witness}")]
    AxiomFailure { axiom: String, witness: String },

    #[error("input is not a hypersymplectic structure with torsion")]
    NotHst,

    #[error("duplicate bracket entry ({0}, {1}, {2})")]
    DuplicateBracket(usize, usize, usize),

    #[error("unknown example `{0}` (expected r8, su3 or s3t5)")]
    UnknownExample(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
