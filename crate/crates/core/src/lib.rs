//! Exact diagonalizability tests for (PT-symmetric) matrices over the
//! Gaussian rationals, and exceptional-point loci for one-parameter families.
//!
//! The decision procedure never computes an eigenvalue. For a matrix `M` it
//! forms the characteristic polynomial `p` and the adjugate of `λE - M`,
//! takes `d` as the monic gcd of the adjugate entries, sets the minimal
//! polynomial `m = p / d`, and declares `M` diagonalizable exactly when
//! `gcd(m, m')` is constant.

pub mod cli;
pub mod diag;
pub mod error;
pub mod exact;
pub mod family;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod problem;
pub mod ratfunc;
pub mod report;

pub use error::{Error, Result};
