//! Exact-arithmetic toolkit for quadratic sequences of k-th powers, the
//! projective surfaces X_{n,k} they live on, and the symmetric differential
//! whose integral curves classify the low-genus curves of those surfaces.

pub mod arith;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod polycore;
pub mod surfaces;
pub mod symdiff;

pub use error::{Error, Result};
