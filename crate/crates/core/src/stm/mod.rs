//! Nyström discretization of the radial bound-state equation
//!
//! ```text
//! (δ/π) ∫ φ(q) log[(p+q)/|p-q|] dq + (√(3p²/4 + μ) + α) φ(p)
//!     - (2/π) ∫ φ(q) log[(p²+q²+pq+μ)/(p²+q²-pq+μ)] dq = 0,   φ(p) = p ξ̂(p),
//! ```
//!
//! spectral scans in `μ`, and residuals of sampled solutions.

mod grid;
mod kernels;
mod operator;
mod residual;
mod scan;

pub use grid::{
    build_grid, default_grid, default_grid_with, gauss_legendre, GridKind, RadialGrid, PANEL_ORDER,
};
pub use kernels::{coulomb_kernel, coulomb_row_integral, tms_kernel};
pub use operator::{assemble, smallest_eigenvalue, DiscretizedOperator, ModelParams};
pub use residual::{default_window, residual, residual_report, ResidualReport};
pub use scan::{scan_bound_states, BoundStateScan, ScanSample, CROSSING_REL_TOL};
