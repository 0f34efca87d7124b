//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("tuple length {len} does not match permutation degree {degree}")]
    LengthMismatch { degree: usize, len: usize },
    #[error("images {0:?} are not a bijection of 1..={1}")]
    NotAPermutation(Vec<usize>, usize),
    #[error("arity mismatch: permutation degree {0} vs {1} composition parts")]
    ArityMismatch(usize, usize),
    #[error("permutation is not an unshuffle representative of S_{p} x S_{q}")]
    NotARepresentative { p: usize, q: usize },
    #[error("variable scheme mismatch: {0} vs {1}")]
    SchemeMismatch(String, String),
    #[error("variable index {index} out of range 1..={r}")]
    VariableOutOfRange { index: usize, r: usize },
    #[error("point has {got} coordinates, scheme has {want} variables")]
    PointLengthMismatch { want: usize, got: usize },
    #[error("configuration mismatch: {0} vs {1}")]
    ConfigMismatch(String, String),
    #[error("kernel has fibre dimension {kernel}, scheme has {scheme}")]
    KernelDimensionMismatch { kernel: usize, scheme: usize },
    #[error("kernel entry index ({a},{b}) out of range 1..={r}")]
    KernelIndexOutOfRange { a: usize, b: usize, r: usize },
    #[error("kernel is not skew-symmetric: k[{a}][{b}](t1,t2) != -k[{b}][{a}](t2,t1)")]
    NotSkew { a: usize, b: usize },
    #[error("G is not symmetric: G(t1,t2) != G(t2,t1)")]
    NotSymmetric,
    #[error("configuration is not diagonal: points {0} and {1} differ")]
    NotDiagonal(String, String),
    #[error("expected a canonical scheme of dimension {want}, got {got}")]
    NotCanonicalScheme { want: usize, got: String },
    #[error("group size cap exceeded: degree {0} > 6")]
    SizeCap(usize),
    #[error("representations live over different groups")]
    GroupMismatch,
    #[error("{0} is not a subgroup of {1}")]
    NotASubgroup(String, String),
    #[error("representative list is not a transversal of the right cosets")]
    NotATransversal,
    #[error("invalid subgroup nesting: {0}")]
    InvalidNesting(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("equality pattern must have length {want}, got {got}")]
    PatternLength { want: usize, got: usize },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
