//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension m={0} out of range (expected 1..=16)")]
    DimensionOutOfRange(usize),
    #[error("dimension mismatch: m={0} vs m={1}")]
    DimensionMismatch(u8, u8),
    #[error("signature bits {bits:#x} out of range for m={m}")]
    SignatureOutOfRange { bits: u32, m: u8 },
    #[error("signature entry {0} is not +1 or -1")]
    BadSignatureEntry(i8),
    #[error("generator index {index} out of range 1..={n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("null-letter index {index} out of range 1..={m}")]
    LetterOutOfRange { index: usize, m: u8 },
    #[error("monomial mask {mask:#x} out of range for n={n} generators")]
    MalformedMask { mask: u32, n: usize },
    #[error("matrix side {0} is not a power of two in 2..=65536")]
    BadMatrixSide(usize),
    #[error("matrix size mismatch: {0} vs {1}")]
    MatrixSizeMismatch(usize, usize),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("images do not satisfy the defining generator relations")]
    InvalidAutomorphism,
    #[error("expected {expected} generator images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("element is not of vector grade")]
    NotGradeOne,
    #[error("element does not lie in the requested spinor space")]
    NotInSpinorSpace,
    #[error("element does not stabilize the requested spinor space")]
    NotAStabilizer,
    #[error("operand does not have exactly one term per column")]
    NotColumnSparse,
    #[error("parse error at byte {at}: {message}")]
    Parse { at: usize, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
