//! Special functions and weighted quadrature.

mod quadrature;
mod special;

pub use quadrature::{angular_integral, radial_integral, QuadratureSpec};
pub use special::{
    jacobi, jacobi_derivative, jacobi_second_derivative, laguerre, laguerre_derivative,
    laguerre_expansion_coefficients, log_gamma,
};
