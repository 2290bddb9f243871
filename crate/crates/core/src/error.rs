use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("entry buffer has length {len}, expected {expected}")]
    InvalidLength { len: usize, expected: usize },

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("matrix is not Hermitian (residual {residual:.3e})")]
    NotHermitian { residual: f64 },

    #[error("generator `{name}` is not skew-Hermitian (residual {residual:.3e})")]
    NotSkewHermitian { name: String, residual: f64 },

    #[error("generator `{name}` does not commute with tensor-factor permutations (residual {residual:.3e})")]
    NotPermutationInvariant { name: String, residual: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("operator leaks out of block {label:?} (leakage {leakage:.3e})")]
    Leakage { label: Vec<u32>, leakage: f64 },

    #[error("unresolved Casimir degeneracy: {0}")]
    UnresolvedDegeneracy(String),

    #[error("closure is not saturated")]
    Unsaturated,
}

impl Error {
    /// True for failures of the numerics rather than of the caller's input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Leakage { .. } | Error::UnresolvedDegeneracy(_) | Error::NonFinite
        )
    }
}
