//! Exact computer algebra for intertwining differential operators between
//! principal series of the double cover of SL(3,R) and the K-type
//! decompositions of their solution spaces.
//!
//! Everything is computed over the Gaussian rationals; there are no
//! tolerances anywhere.

pub mod algebra;
pub mod exec;
pub mod hypergeo;
pub mod kflat;
pub mod linalg;
pub mod pipeline;
pub mod qmchar;
pub mod report;
pub mod scalar;
pub mod selftest;
pub mod su2model;
pub mod verma;
pub mod weight;

pub use scalar::{GaussRational, Rational};
pub use weight::Weight;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("not a representation of Q8: {0}")]
    NotARepresentation(String),
    #[error("line is not stable under Ad(M): {0}")]
    NotAdStable(String),
    #[error("hypergeometric parameter error: {0}")]
    Hypergeometric(String),
    #[error("unknown label `{label}`; valid labels: {valid}")]
    UnknownLabel { label: String, valid: String },
}

pub type Result<T> = std::result::Result<T, Error>;
