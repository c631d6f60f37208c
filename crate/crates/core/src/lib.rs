//! Finite-dimensional realizations of the Drinfeld machinery: weight-space
//! Manin triples, Lie bialgebra cocycles, Fourier-truncated loop algebras,
//! and numerical integration of algebra 1-cocycles to multiplicative
//! bivectors on matrix groups.
//!
//! Every algebraic axiom the constructions rely on is exposed as an
//! executable check that reports residuals rather than bare booleans, so a
//! failing identity can be localized to a basis triple and a magnitude.

pub mod algebra;
pub mod bialgebra;
pub mod catalog;
mod error;
pub mod flow;
pub mod io;
pub mod linalg;
pub mod loops;
pub mod poisson;
pub mod report;
pub mod rng;
pub mod weights;

pub use error::Error;

/// Complex double-precision scalar used for all stored tensors.
pub type C64 = num_complex::Complex<f64>;
/// Dense complex matrix.
pub type CMat = nalgebra::DMatrix<C64>;
/// Dense complex column vector.
pub type CVec = nalgebra::DVector<C64>;

/// Default tolerance for residual checks.
pub const DEFAULT_TOL: f64 = 1e-10;

pub(crate) fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}
