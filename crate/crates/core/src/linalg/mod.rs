//! Exact linear algebra over Q: dense matrices for small boundary maps and
//! sparse echelon forms for the large graded pieces.

mod dense;
mod rational;
mod sparse;

pub use dense::RationalMatrix;
pub use rational::Rational;
pub use sparse::{Echelon, SparseMatrix, SparseVec};
