//! Low-energy spectrum of three identical bosons with zero-range
//! interactions.
//!
//! - [`specfun`]: `K0` and stable hyperbolic ratios.
//! - [`symbols`]: symbols of the diagonalized radial equations, the Efimov
//!   constant `s0` and the regularization threshold `δ0`.
//! - [`ladder`]: the exact `β`-ladder `μ_n` and the closed-form charge density.
//! - [`stm`]: Nyström discretization of the radial equations and `μ` scans.
//! - [`thomas`]: Thomas's singular solution of the free equation.
//! - [`oracle`]: quadrature checks of the transforms behind the symbols.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod ladder;
pub mod oracle;
pub mod specfun;
pub mod stm;
pub mod symbols;
pub mod thomas;

pub use error::{Error, Result};

use std::sync::OnceLock;

/// Tolerance used for the crate-wide value of `s0`.
pub const S0_TOLERANCE: f64 = 1e-13;

/// The Efimov constant, computed once per process.
pub fn efimov_s0() -> f64 {
    static S0: OnceLock<f64> = OnceLock::new();
    *S0.get_or_init(|| {
        symbols::find_s0(S0_TOLERANCE)
            .expect("g has a sign change in (0.5, 2)")
            .s0
    })
}
