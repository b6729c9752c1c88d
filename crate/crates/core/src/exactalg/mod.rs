//! Exact coefficient and sparse multivariate polynomial arithmetic.
//!
//! Coefficients live in the Gaussian rationals `Q(i)`, the smallest
//! characteristic-zero field containing a square root of -1; every identity
//! the engine verifies is defined over it. Polynomials are sparse maps from
//! exponent vectors to nonzero coefficients, ordered lexicographically in a
//! per-ring declared variable order.

mod gauss;
mod matrix;
mod parse;
mod poly;
mod ring;

pub use gauss::GaussianRational;
pub use matrix::PolyMatrix;
pub use parse::parse_polynomial;
pub use poly::{poly_arith, ArithOp, Polynomial, TermOrder};
pub use ring::HypersurfaceRing;
