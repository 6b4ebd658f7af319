//! Reduction, canonical forms and numeric evaluation of real hyper-elliptic
//! integrals `∫ (x-p)^n dx / √Q(x)`.
//!
//! * [`ratpoly`]: exact rationals, dense and Laurent polynomials.
//! * [`reduction`]: expresses any `I_{n,p}` on the fundamental basis
//!   `{I_{-1,p}, I_0, …, I_{M-2}}` plus an elementary part, by single-column
//!   back-substitution on the band transition matrices.
//! * [`moebius`]: projective line, homographies, cross-ratio and the dihedral
//!   action on root labels.
//! * [`canonical`]: Riemann canonical form `t(1-t)(1-k₂t)…` and the elliptic
//!   (four-root) closed forms with their D₄ orbit.
//! * [`special`]: Carlson-based `F`, `Π`, the singularity-aware quadrature
//!   oracle and Lauricella `F_D`.
//! * [`verify`]: exact and numeric verification harness.

pub mod canonical;
pub mod error;
pub mod moebius;
pub mod ratpoly;
pub mod reduction;
pub mod scalar;
pub mod special;
pub mod verify;

pub use canonical::{CanonicalForm, EllipticCombination, IntegrandKind};
pub use error::{Error, Result};
pub use moebius::{DihedralElement, Homography, ProjPoint, RootCycle};
pub use ratpoly::{rat, LaurentPolynomial, Polynomial, Rational, Variable};
pub use reduction::{BasisElement, ReductionResult};
pub use scalar::Scalar;
pub use verify::VerificationReport;
