use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two scalars (or a scalar and an algebra) live in different fields.
    FieldMismatch,
    DivisionByZero,
    /// Cyclotomic order must be a positive integer.
    InvalidField(u32),
    CoefficientLength {
        expected: usize,
        found: usize,
    },
    ArityMismatch {
        expected: usize,
        found: usize,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    InvalidPermutation,
    LegOutOfRange {
        leg: usize,
        arity: usize,
    },
    DuplicateLeg(usize),
    IndexOutOfRange {
        index: usize,
        dim: usize,
    },
    /// The element or matrix has no two-sided inverse.
    Singular,
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
    },
    NotUnital {
        i: usize,
    },
    InvalidTwist(&'static str),
    NotCentral,
    InvalidShiftSystem(&'static str),
    ShiftOutOfDomain,
    /// An internal consistency assertion of a construction failed.
    Postcondition(String),
    /// Load-time verification rejected a structure; carries the failing check ids.
    VerificationFailed(Vec<String>),
    UnknownBuiltin(String),
    MissingRMatrix,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "scalars belong to different fields"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InvalidField(n) => write!(f, "invalid cyclotomic order {n}"),
            Error::CoefficientLength { expected, found } => {
                write!(f, "expected {expected} coefficients, found {found}")
            }
            Error::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected}, found {found}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::InvalidPermutation => write!(f, "malformed permutation"),
            Error::LegOutOfRange { leg, arity } => {
                write!(f, "leg {leg} out of range for arity {arity}")
            }
            Error::DuplicateLeg(l) => write!(f, "leg {l} listed twice"),
            Error::IndexOutOfRange { index, dim } => {
                write!(f, "basis index {index} out of range for dimension {dim}")
            }
            Error::Singular => write!(f, "element is not invertible"),
            Error::NotAssociative { i, j, k } => {
                write!(f, "multiplication is not associative on basis triple ({i}, {j}, {k})")
            }
            Error::NotUnital { i } => write!(f, "unit does not act trivially on basis element {i}"),
            Error::InvalidTwist(why) => write!(f, "invalid twist: {why}"),
            Error::NotCentral => write!(f, "element is not central"),
            Error::InvalidShiftSystem(why) => write!(f, "invalid shift system: {why}"),
            Error::ShiftOutOfDomain => write!(f, "shifted parameter lies outside the domain"),
            Error::Postcondition(what) => write!(f, "postcondition failed: {what}"),
            Error::VerificationFailed(ids) => {
                write!(f, "verification failed:")?;
                for id in ids {
                    write!(f, " {id}")?;
                }
                Ok(())
            }
            Error::UnknownBuiltin(name) => write!(f, "unknown builtin structure `{name}`"),
            Error::MissingRMatrix => write!(f, "structure has no R-matrix"),
        }
    }
}

impl core::error::Error for Error {}
