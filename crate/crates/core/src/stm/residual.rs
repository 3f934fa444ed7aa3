use super::operator::{nystrom_row, ModelParams};
use crate::error::{Error, Result};
use crate::ladder::ChargeDensity;

/// Residual of the radial equation on a sampled charge density.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    /// `‖Aφ‖ / ‖Dφ‖` over interior nodes in the `dp/p` norm, where `D` is the
    /// multiplicative part of the operator.
    pub relative_l2: f64,
    /// `max |Aφ| / max |Dφ|` over interior nodes.
    pub relative_sup: f64,
    pub interior_nodes: Vec<usize>,
    /// `(Aφ)_i` at the interior nodes.
    pub components: Vec<f64>,
}

/// Interior window `[1e-2 √μ, 1e2 √μ]` used by [`residual`].
pub fn default_window(mu: f64) -> (f64, f64) {
    let k = mu.sqrt();
    (1e-2 * k, 1e2 * k)
}

/// Relative L² residual of the radial equation over the default window.
pub fn residual(density: &ChargeDensity, params: &ModelParams) -> Result<f64> {
    Ok(residual_report(density, params, default_window(params.mu))?.relative_l2)
}

/// Evaluates the Nyström operator on `φ = p ξ̂` at nodes inside `window`.
/// All grid nodes take part in the quadrature.
pub fn residual_report(
    density: &ChargeDensity,
    params: &ModelParams,
    window: (f64, f64),
) -> Result<ResidualReport> {
    params.validate()?;
    let grid = density.grid();
    if density.values().len() != grid.len() {
        return Err(Error::GridMismatch {
            values: density.values().len(),
            nodes: grid.len(),
        });
    }
    let phi: Vec<f64> = grid
        .nodes()
        .iter()
        .zip(density.values())
        .map(|(p, xi)| p * xi)
        .collect();

    let mut row = vec![0.0; grid.len()];
    let mut interior_nodes = Vec::new();
    let mut components = Vec::new();
    let (mut num, mut den, mut sup_r, mut sup_d) = (0.0, 0.0, 0.0f64, 0.0f64);
    for (i, &p) in grid.nodes().iter().enumerate() {
        if p < window.0 || p > window.1 {
            continue;
        }
        nystrom_row(grid, params, i, &mut row);
        let r: f64 = row.iter().zip(&phi).map(|(a, f)| a * f).sum();
        let d = params.diagonal_term(p) * phi[i];
        let w = grid.weights()[i] / p;
        num += w * r * r;
        den += w * d * d;
        sup_r = sup_r.max(r.abs());
        sup_d = sup_d.max(d.abs());
        interior_nodes.push(i);
        components.push(r);
    }
    if interior_nodes.is_empty() {
        return Err(Error::InvalidRange(format!(
            "no grid nodes inside the residual window [{}, {}]",
            window.0, window.1
        )));
    }
    let ratio = |a: f64, b: f64| if a == 0.0 { 0.0 } else { a / b };
    Ok(ResidualReport {
        relative_l2: ratio(num.sqrt(), den.sqrt()),
        relative_sup: ratio(sup_r, sup_d),
        interior_nodes,
        components,
    })
}
