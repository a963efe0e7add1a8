//! Riccati parametric deformations of the Cornu spiral.
//!
//! The crate is organised bottom-up:
//!
//! - [`fresnel`]: the Fresnel integrals `C`, `S`, the phase-shifted integral
//!   `C̃(z; φ)` and an independent adaptive Simpson oracle.
//! - [`riccati`]: particular and general solutions of
//!   `y' + y² = y/z − π²z²`, the linear `u` equation behind them and the
//!   deformation parameter `θ = a + ib`.
//! - [`spiral`]: points, sampled curves, curvature and foci of the deformed
//!   spirals `w_g = R[(1 + θ)C + i(θ − 1)S]`.
//! - [`darboux`]: the factorization operators `A±`, the parametric Darboux
//!   distortion, the partner solutions and an ODE residual engine.
//! - [`plot`]: CSV/SVG emission, figure drivers and the command-line front end.

pub mod darboux;
pub mod error;
pub mod fresnel;
pub mod phase;
pub mod plot;
pub mod riccati;
pub mod spiral;

pub use error::{Error, Result};
pub use riccati::{ComplexValue, DeformationParameter};
