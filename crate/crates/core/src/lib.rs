//! Exact computation of the Patalan, (p,q)-Patalan, super Catalan and
//! super Patalan number families, together with mechanical verification of
//! the identities relating them: the closed form, the two-variable
//! generating function, the compositional-inverse and convolutional
//! recurrences, the Pascal-matrix factorization, the Hadamard-inverse
//! integrality theorem and the extended-matrix involution.
//!
//! All arithmetic is exact. Scalars are arbitrary-precision integers
//! ([`exact::WholeNumber`]) and normalized rationals
//! ([`exact::ExactFraction`]); there is no floating point anywhere in the
//! crate. Every recurrence step that divides is checked to land on an
//! integer, so a non-integral intermediate surfaces as an error instead of
//! a silently wrong table.
//!
//! With the default `parallel` feature the cell-independent computations
//! (closed-form tables, exact matrix products) run on rayon; sequential
//! variants are always available under a `_seq` suffix.

pub mod exact;
pub mod matrixlab;
pub mod oeis;
pub mod powerseries;
pub mod report;
pub mod sequences;

pub use exact::{ExactFraction, Params, WholeNumber};
pub use report::Verification;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters p={p}, q={q}: require p >= 2 and 1 <= q < p")]
    InvalidParams { p: i64, q: i64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("non-integral value {value} in {context}")]
    NonIntegral { context: String, value: String },
    #[error("inner series must have zero constant term")]
    ConstantTermNotZero,
    #[error("series is not invertible under composition: need s(0) = 0 and s'(0) != 0")]
    NotInvertible,
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("b-file line {line}: {msg}")]
    BFile { line: usize, msg: String },
    #[error("mapping file line {line}: {msg}")]
    Mapping { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
