use std::fmt;

use thiserror::Error;

/// A failed quandle axiom, with the 1-based witness that breaks it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `x ▷ x != x`.
    Idempotence { x: usize },
    /// Column `y` (the map `x ↦ x ▷ y`) hits `value` twice.
    ColumnNotBijective { column: usize, value: usize },
    /// `(x ▷ y) ▷ z != (x ▷ z) ▷ (y ▷ z)`.
    Distributivity { x: usize, y: usize, z: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::Idempotence { x } => write!(f, "idempotence fails at x = {x}"),
            AxiomViolation::ColumnNotBijective { column, value } => write!(
                f,
                "column {column} is not a bijection (value {value} appears twice)"
            ),
            AxiomViolation::Distributivity { x, y, z } => write!(
                f,
                "right self-distributivity fails at (x, y, z) = ({x}, {y}, {z})"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("a group needs at least one generator")]
    EmptyGenerators,

    #[error("{0}")]
    NotMember(String),

    #[error("{what} needs {size} elements, above the enumeration bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: String,
        bound: u64,
    },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("block system needs two distinct points")]
    SamePoint,

    #[error("group is not transitive")]
    NotTransitive,

    #[error("quandle axiom violated: {0}")]
    Axiom(AxiomViolation),

    #[error("malformed table: {0}")]
    Shape(String),

    #[error("quandle is not connected")]
    NotConnected,

    #[error("rho must fix the base point {0}")]
    RhoMovesBase(usize),

    #[error("phi must fix the base point {0}")]
    PhiMovesBase(usize),

    #[error("rho is not central in the stabilizer of the base point")]
    RhoNotCentral,

    #[error("folder is not an envelope: the conjugacy class of rho generates a proper subgroup")]
    FolderNotEnvelope,

    #[error("matrix is singular over Z_{0}")]
    SingularMatrix(u32),

    #[error("matrix fixes a nonzero vector")]
    FixedVector,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("duplicate catalog label {0:?}")]
    DuplicateLabel(String),

    #[error("catalog record {label:?}: declared {flag} but {witness}")]
    FlagMismatch {
        label: String,
        flag: &'static str,
        witness: String,
    },

    #[error("isomorphic quandles over {0} without a class-fusing map of the group")]
    FusionCheck(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// True for failures caused by a resource bound rather than bad input.
    pub fn is_bound(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
