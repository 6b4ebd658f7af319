//! Riemann canonical form of `∫ R(x) dx / √|P(x)|` for `N = 2m` real simple
//! roots, and the elliptic (`N = 4`) closed forms with their D₄ orbit.
//!
//! The substitution `x = ψ_A(t)` sends `∞, 0, 1` to `x_{N-1}, x_N, x_1`, so
//! that `r_N(A)P = C·t(1-t)(1-k₂t)…(1-k_{N-2}t)`.

mod elliptic;
mod form;

pub use elliptic::{
    d4_orbit, elliptic_definite, elliptic_reduce, EllipticCombination, EllipticParams,
    EllipticTerm, IntegrandKind,
};
pub use form::{
    canonical_form, canonical_matrix, pullback_form, CanonicalForm, PullbackForm, RationalFunction,
};
