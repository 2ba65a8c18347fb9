//! Exact coefficient arithmetic, monomials, polynomials and matrices.
//!
//! Every value in this module is immutable after construction and every
//! operation is a pure function, so values can be shared freely across
//! threads.

mod field;
mod matrix;
mod monomial;
mod parse;
mod poly;
mod ring;

pub use field::{FieldSpec, Scalar};
pub use matrix::PolyMatrix;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::ParseError;
pub use poly::Polynomial;
pub use ring::PolyRing;

use thiserror::Error;

/// Errors raised by polynomial and matrix operations.
#[derive(Debug, Error)]
pub enum PolyError {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("minor size {k} out of range for {rows}x{cols} matrix")]
    MinorSize { k: usize, rows: usize, cols: usize },
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
}
