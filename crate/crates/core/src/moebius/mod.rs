//! Projective line: homographies, cross-ratio, cyclic order of roots and the
//! dihedral relabelings `τ_k`, `η_k`, plus the operator `r_k(A)`.

mod dihedral;
mod homography;
mod projective;

pub use dihedral::{
    classify_cycle, x_canonical, DihedralElement, DihedralKind, Monotonicity, RootCycle,
};
pub use homography::{r_operator, CanonicalSplit, Homography, Reciprocal};
pub use projective::{arc_contains, cross_ratio, ProjPoint};
