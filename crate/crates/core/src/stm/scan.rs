use rayon::prelude::*;

use super::grid::RadialGrid;
use super::operator::{assemble, ModelParams};
use crate::error::{Error, Result};

/// Relative resolution of refined crossings in `mu`.
pub const CROSSING_REL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanSample {
    pub mu: f64,
    pub smallest_eigenvalue: f64,
    pub negative_count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundStateScan {
    pub delta: f64,
    pub samples: Vec<ScanSample>,
    /// Values of `mu` at which an eigenvalue of the discretized operator
    /// passes through zero, ascending.
    pub crossings: Vec<f64>,
}

impl BoundStateScan {
    pub fn min_eigenvalue(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.smallest_eigenvalue)
            .fold(f64::INFINITY, f64::min)
    }

    /// Ratios of consecutive crossings.
    pub fn crossing_ratios(&self) -> Vec<f64> {
        self.crossings.windows(2).map(|w| w[1] / w[0]).collect()
    }
}

fn spectrum(grid: &RadialGrid, params: &ModelParams) -> Result<Vec<f64>> {
    Ok(assemble(grid, params)?.eigenvalues())
}

/// Sweeps `mu` over a log-spaced set of `n_mu` values on a fixed grid and
/// locates every `mu` where the discretized operator becomes singular.
///
/// A bound state at `E = -mu` shows up as an eigenvalue passing through
/// zero, so the crossings are read off the change in the number of
/// negative eigenvalues between consecutive samples. Each crossing of the
/// `k`-th eigenvalue is then refined by bisection in `log mu`.
pub fn scan_bound_states(
    grid: &RadialGrid,
    delta: f64,
    mu_lo: f64,
    mu_hi: f64,
    n_mu: usize,
) -> Result<BoundStateScan> {
    if !(mu_lo > 0.0 && mu_hi > mu_lo && mu_hi.is_finite()) {
        return Err(Error::Precondition(format!(
            "need 0 < mu_lo < mu_hi, got [{mu_lo}, {mu_hi}]"
        )));
    }
    if n_mu < 2 {
        return Err(Error::Precondition(format!(
            "need at least 2 mu values, got {n_mu}"
        )));
    }
    let base = ModelParams::new(mu_lo, delta)?;
    let (l0, l1) = (mu_lo.ln(), mu_hi.ln());
    let mus: Vec<f64> = (0..n_mu)
        .map(|i| {
            if i == n_mu - 1 {
                mu_hi
            } else {
                (l0 + (l1 - l0) * i as f64 / (n_mu - 1) as f64).exp()
            }
        })
        .collect();

    let samples = mus
        .par_iter()
        .map(|&mu| {
            let ev = spectrum(grid, &base.with_mu(mu)?)?;
            Ok(ScanSample {
                mu,
                smallest_eigenvalue: ev[0],
                negative_count: ev.iter().filter(|&&v| v < 0.0).count(),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut jobs = Vec::new();
    for w in samples.windows(2) {
        let (a, b) = (w[0].negative_count, w[1].negative_count);
        for k in a.min(b)..a.max(b) {
            jobs.push((k, w[0].mu, w[1].mu));
        }
    }
    let mut crossings = jobs
        .par_iter()
        .map(|&(k, lo, hi)| refine_crossing(grid, &base, k, lo, hi))
        .collect::<Result<Vec<_>>>()?;
    crossings.sort_by(f64::total_cmp);

    Ok(BoundStateScan {
        delta,
        samples,
        crossings,
    })
}

fn refine_crossing(
    grid: &RadialGrid,
    base: &ModelParams,
    k: usize,
    lo: f64,
    hi: f64,
) -> Result<f64> {
    let eig_k = |mu: f64| -> Result<f64> { Ok(spectrum(grid, &base.with_mu(mu)?)?[k]) };
    let (mut a, mut b) = (lo.ln(), hi.ln());
    let mut fa = eig_k(lo)?;
    let fb = eig_k(hi)?;
    if (fa < 0.0) == (fb < 0.0) {
        return Err(Error::Bracket {
            what: "eigenvalue",
            interval: format!("mu in [{lo}, {hi}], index {k}"),
        });
    }
    while b - a > CROSSING_REL_TOL {
        let m = 0.5 * (a + b);
        let fm = eig_k(m.exp())?;
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok((0.5 * (a + b)).exp())
}
