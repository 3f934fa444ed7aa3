//! Analytic symbols of the diagonalized radial problem.
//!
//! After the substitution `p = (2√μ/√3) sinh x` the radial equations become
//! convolutions on the line, and the Fourier transform turns them into
//! multiplication by a symbol. For the unregularized model the symbol is
//!
//! ```text
//! g(s) = 1 - (8/√3) sinh(πs/6) / (s cosh(πs/2))
//! ```
//!
//! and the regularized `δ/|y|` model adds `2δ sinh(πs/2) / (√3 s cosh(πs/2))`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{sinh_ratio, tanh_over_s};

const SQRT_3: f64 = 1.732_050_807_568_877_293_527_446_341_505_872_4;

/// `4π/(3√3) - 1`, the excess of the three-body attraction at `s = 0`.
fn attraction_excess() -> f64 {
    4.0 * PI / (3.0 * SQRT_3) - 1.0
}

/// Symbol of the unregularized model. Even in `s`; `g(0) = 1 - 4π/(3√3)`.
pub fn eval_g(s: f64) -> f64 {
    1.0 - 8.0 / SQRT_3 * sinh_ratio(s)
}

/// Symbol of the model regularized by a `δ/|y|` two-body strength.
pub fn eval_reg_symbol(s: f64, delta: f64) -> f64 {
    1.0 + 2.0 / SQRT_3 * (delta * tanh_over_s(s) - 4.0 * sinh_ratio(s))
}

/// Closed-form `s → 0` limit of [`eval_reg_symbol`]: `1 + (δπ - 4π/3)/√3`.
pub fn reg_symbol_at_zero(delta: f64) -> f64 {
    1.0 + (delta * PI - 4.0 * PI / 3.0) / SQRT_3
}

/// Threshold above which the regularized symbol is positive everywhere,
/// `(√3/π)(4π/(3√3) - 1) = 4/3 - √3/π`.
pub fn delta0() -> f64 {
    SQRT_3 / PI * attraction_excess()
}

/// The older sufficient bound `(2/π)(4π/(3√3) - 1)` on `δ`.
pub fn delta_literature_bound() -> f64 {
    2.0 / PI * attraction_excess()
}

/// Lower bound on the asymptotic strength `γ` of the momentum-space
/// convolution kernel, `(1/π³)(4π/(3√3) - 1)`.
pub fn gamma_bound() -> f64 {
    attraction_excess() / PI.powi(3)
}

/// Strength of `δ/|y|` whose Fourier transform has asymptotic kernel `γ/|p|²`.
pub fn gamma_to_delta(gamma: f64) -> f64 {
    2.0 * PI * PI * gamma
}

pub fn delta_to_gamma(delta: f64) -> f64 {
    delta / (2.0 * PI * PI)
}

/// The Efimov constant together with the accuracy it was certified to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EfimovConstant {
    pub s0: f64,
    /// `|g(s0)|`
    pub residual: f64,
    pub tolerance: f64,
}

/// Positive root `s0` of `g` from the bracket `(0.5, 2)`.
pub fn find_s0(tol: f64) -> Result<EfimovConstant> {
    find_s0_in(0.5, 2.0, tol)
}

/// Positive root of `g` by bisection, starting from `(lo, hi)`.
///
/// If the bracket does not straddle the root, the interval `(0, 20]` is
/// scanned for a sign change instead. Bisection runs to the resolution of
/// `f64`, so the returned root does not depend on the starting bracket
/// beyond a few ulps.
pub fn find_s0_in(lo: f64, hi: f64, tol: f64) -> Result<EfimovConstant> {
    if !(tol > 0.0) {
        return Err(Error::Precondition(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let (mut a, mut b) = if lo > 0.0 && hi > lo && eval_g(lo) * eval_g(hi) < 0.0 {
        (lo, hi)
    } else {
        scan_for_root()?
    };
    let mut ga = eval_g(a);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let gm = eval_g(mid);
        if gm == 0.0 {
            a = mid;
            b = mid;
            break;
        }
        if (gm < 0.0) == (ga < 0.0) {
            a = mid;
            ga = gm;
        } else {
            b = mid;
        }
    }
    let s0 = if eval_g(a).abs() <= eval_g(b).abs() {
        a
    } else {
        b
    };
    let residual = eval_g(s0).abs();
    if residual > tol {
        return Err(Error::NonConvergence {
            what: "find_s0",
            detail: format!("|g(s0)| = {residual:e} exceeds tolerance {tol:e}"),
        });
    }
    Ok(EfimovConstant {
        s0,
        residual,
        tolerance: tol,
    })
}

fn scan_for_root() -> Result<(f64, f64)> {
    let n = 2000;
    let step = 20.0 / n as f64;
    let mut prev_s = step;
    let mut prev_g = eval_g(prev_s);
    for i in 2..=n {
        let s = step * i as f64;
        let gs = eval_g(s);
        if prev_g * gs < 0.0 {
            return Ok((prev_s, s));
        }
        prev_s = s;
        prev_g = gs;
    }
    Err(Error::Bracket {
        what: "g",
        interval: "(0, 20]".into(),
    })
}

/// Result of scanning the regularized symbol on `[0, s_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolScan {
    pub delta: f64,
    pub s_max: f64,
    pub n_points: usize,
    pub min_value: f64,
    pub argmin: f64,
    /// Consecutive scan points `[s_i, s_{i+1}]` with opposite signs.
    pub sign_changes: Vec<[f64; 2]>,
}

impl SymbolScan {
    /// True when the scan certifies strict positivity on the sampled range.
    pub fn is_positive(&self) -> bool {
        self.sign_changes.is_empty() && self.min_value > 0.0
    }
}

/// Samples `eval_reg_symbol(·, delta)` on `n` uniform points of `[0, s_max]`.
/// The point `s = 0` uses the closed-form limit.
pub fn certify_positivity(delta: f64, s_max: f64, n: usize) -> Result<SymbolScan> {
    if !(s_max > 0.0) || !s_max.is_finite() {
        return Err(Error::Precondition(format!(
            "s_max must be positive, got {s_max}"
        )));
    }
    if n < 2 {
        return Err(Error::Precondition(format!(
            "need at least 2 scan points, got {n}"
        )));
    }
    let h = s_max / (n - 1) as f64;
    let value_at = |i: usize| {
        let s = if i == n - 1 { s_max } else { h * i as f64 };
        let v = if i == 0 {
            reg_symbol_at_zero(delta)
        } else {
            eval_reg_symbol(s, delta)
        };
        (s, v)
    };

    let (mut prev_s, mut prev_v) = value_at(0);
    let mut min_value = prev_v;
    let mut argmin = prev_s;
    let mut sign_changes = Vec::new();
    for i in 1..n {
        let (s, v) = value_at(i);
        if v < min_value {
            min_value = v;
            argmin = s;
        }
        if (prev_v < 0.0) != (v < 0.0) {
            sign_changes.push([prev_s, s]);
        }
        prev_s = s;
        prev_v = v;
    }
    Ok(SymbolScan {
        delta,
        s_max,
        n_points: n,
        min_value,
        argmin,
        sign_changes,
    })
}
