//! Numeric layer: Carlson symmetric integrals, incomplete `F` and `Π`, the
//! canonical integrals `I₀`, `P`, a quadrature oracle for `∫R/√|P|` and
//! Lauricella `F_D`. Double precision throughout.

mod carlson;
mod gauss;
mod lauricella;
mod legendre;
mod quadrature;

pub use carlson::{carlson_rc, carlson_rf, carlson_rj};
pub use gauss::{adaptive_gl, tanh_sinh, Estimate};
pub use lauricella::{lauricella_fd, lauricella_fd_series};
pub use legendre::{
    canonical_i0, canonical_p, canonical_p_pv, ellip_f, ellip_pi, ellip_pi_pv, SINGULAR_GAP,
};
pub use quadrature::{quad_sqrt, quad_sqrt_estimate, Integrand, QuadratureSpec, Radicand};
