//! Exact rational arithmetic and dense/Laurent polynomials.

mod laurent;
mod polynomial;
mod rational;

pub use laurent::LaurentPolynomial;
pub use polynomial::{
    elementary_symmetric, poly_derivative, poly_eval, poly_from_roots, poly_shift, Polynomial,
    Variable,
};
pub use rational::{rat, Rational};
