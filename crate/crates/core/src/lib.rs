//! Numerical laboratory for the semiclassical magnetic Schrödinger operator
//! with the de Gennes (Robin) boundary condition.
//!
//! The building block is the half-line oscillator family
//!
//! ```text
//! L[γ,ξ] = -d²/dt² + (t-ξ)²   on L²(ℝ₊),   u'(0) = γ u(0),
//! ```
//!
//! whose band functions μ_j(γ,ξ) drive everything else: the de Gennes
//! function Θ(γ) = inf_ξ μ₁(γ,ξ) and its minimizer ξ(γ), sublevel intervals
//! of the bands, exact spectral counts for the half-cylinder and disc
//! realizations, weighted (curvature-corrected) one-dimensional models, and
//! the leading-order Weyl counting formulas they are compared against.

pub mod curved;
pub mod cylinder;
pub mod degennes;
pub mod disc;
pub mod error;
pub mod geometry;
pub mod levelsets;
pub mod model1d;
pub mod tridiag;
pub mod weyl;

mod polyfit;

pub use error::{Error, Result};
