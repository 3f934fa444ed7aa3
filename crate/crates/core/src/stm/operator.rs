use nalgebra::{DMatrix, DVector};

use super::grid::RadialGrid;
use super::kernels::{coulomb_row_integral, log_coth_ratio, tms_kernel};
use crate::error::{Error, Result};

use std::f64::consts::PI;

/// Physical parameters of the radial problem at energy `E = -mu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Inverse scattering length; `0` is the unitary point.
    pub alpha: f64,
    /// Strength of the three-body regularization `δ/|y|`.
    pub delta: f64,
    /// Range of the regularization; only `+inf` is supported.
    pub ell: f64,
    pub mu: f64,
}

impl ModelParams {
    pub fn new(mu: f64, delta: f64) -> Result<Self> {
        let params = Self {
            alpha: 0.0,
            delta,
            ell: f64::INFINITY,
            mu,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn with_alpha(mut self, alpha: f64) -> Result<Self> {
        self.alpha = alpha;
        self.validate()?;
        Ok(self)
    }

    pub fn with_mu(mut self, mu: f64) -> Result<Self> {
        self.mu = mu;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mu > 0.0) || !self.mu.is_finite() {
            return Err(Error::Precondition(format!(
                "mu must be positive, got {}",
                self.mu
            )));
        }
        if !(self.delta >= 0.0) || !self.delta.is_finite() {
            return Err(Error::Precondition(format!(
                "delta must be non-negative, got {}",
                self.delta
            )));
        }
        if !self.alpha.is_finite() {
            return Err(Error::Precondition(format!(
                "alpha must be finite, got {}",
                self.alpha
            )));
        }
        if self.ell != f64::INFINITY {
            return Err(Error::UnsupportedRange(self.ell));
        }
        Ok(())
    }

    /// Multiplicative part of the operator acting on `φ(p) = p ξ̂(p)`.
    pub fn diagonal_term(&self, p: f64) -> f64 {
        (0.75 * p * p + self.mu).sqrt() + self.alpha
    }
}

/// Nyström row `i` of the operator on `φ = p ξ̂`, before symmetrization:
/// `(Aφ)_i = Σ_j row[j] φ_j`.
///
/// The `δ` kernel is treated by subtracting `φ(p_i)` under the integral and
/// adding back `φ(p_i) ∫ K(p_i, q) dq` over the grid's range in closed form.
pub(crate) fn nystrom_row(grid: &RadialGrid, params: &ModelParams, i: usize, row: &mut [f64]) {
    let p = grid.nodes()[i];
    let coulomb_scale = params.delta / PI;
    let mut subtracted = 0.0;
    for (j, (&q, &w)) in grid.nodes().iter().zip(grid.weights()).enumerate() {
        let mut k = tms_kernel(p, q, params.mu);
        if params.delta != 0.0 && j != i {
            let c = coulomb_scale * log_coth_ratio(p, q);
            subtracted += c * w;
            k += c;
        }
        row[j] = k * w;
    }
    let mut diag = params.diagonal_term(p);
    if params.delta != 0.0 {
        diag += coulomb_scale * coulomb_row_integral(p, grid.p_min(), grid.p_max()) - subtracted;
    }
    row[i] += diag;
}

/// Symmetric matrix `W^{1/2} A W^{-1/2}` of the radial operator on a grid.
#[derive(Debug, Clone)]
pub struct DiscretizedOperator {
    pub matrix: DMatrix<f64>,
    pub params: ModelParams,
    pub grid: RadialGrid,
}

pub fn assemble(grid: &RadialGrid, params: &ModelParams) -> Result<DiscretizedOperator> {
    params.validate()?;
    let n = grid.len();
    let sqrt_w: Vec<f64> = grid.weights().iter().map(|w| w.sqrt()).collect();
    let mut matrix = DMatrix::zeros(n, n);
    let mut row = vec![0.0; n];
    for i in 0..n {
        nystrom_row(grid, params, i, &mut row);
        matrix[(i, i)] = row[i];
        // row[j] = K_ij w_j, so √w_i K_ij √w_j = row[j] √w_i / √w_j
        for j in (i + 1)..n {
            let v = row[j] * sqrt_w[i] / sqrt_w[j];
            matrix[(i, j)] = v;
            matrix[(j, i)] = v;
        }
    }
    Ok(DiscretizedOperator {
        matrix,
        params: *params,
        grid: grid.clone(),
    })
}

impl DiscretizedOperator {
    pub fn dim(&self) -> usize {
        self.grid.len()
    }

    /// Applies the unsymmetrized Nyström operator to samples of `φ`.
    pub fn apply(&self, phi: &[f64]) -> Result<Vec<f64>> {
        if phi.len() != self.dim() {
            return Err(Error::GridMismatch {
                values: phi.len(),
                nodes: self.dim(),
            });
        }
        let sqrt_w: Vec<f64> = self.grid.weights().iter().map(|w| w.sqrt()).collect();
        let scaled =
            DVector::from_iterator(self.dim(), phi.iter().zip(&sqrt_w).map(|(f, s)| f * s));
        let out = &self.matrix * scaled;
        Ok(out.iter().zip(&sqrt_w).map(|(v, s)| v / s).collect())
    }

    /// Largest `|S_ij - S_ji|`.
    pub fn symmetry_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                worst = worst.max((self.matrix[(i, j)] - self.matrix[(j, i)]).abs());
            }
        }
        worst
    }

    /// All eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self
            .matrix
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn negative_count(&self) -> usize {
        self.eigenvalues().iter().filter(|&&v| v < 0.0).count()
    }
}

pub fn smallest_eigenvalue(op: &DiscretizedOperator) -> f64 {
    op.eigenvalues()[0]
}
