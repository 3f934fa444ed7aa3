//! The exact bound-state ladder of the unitary (`α = 0`) model with
//! three-body parameter `β`, and the closed-form charge density solving the
//! radial equation at any `μ > 0`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::stm::RadialGrid;

const SQRT_3: f64 = 1.732_050_807_568_877_293_527_446_341_505_872_4;

/// `cot⁻¹ β` on the branch `(0, π)`.
pub fn acot(beta: f64) -> f64 {
    FRAC_PI_2 - beta.atan()
}

/// `μ_n = 3 exp(-(2/s0) cot⁻¹ β) exp(2πn/s0)`.
pub fn mu_n(beta: f64, n: i64, s0: f64) -> f64 {
    3.0 * ((2.0 * PI * n as f64 - 2.0 * acot(beta)) / s0).exp()
}

/// Ratio `μ_{n+1}/μ_n = exp(2π/s0)`.
pub fn geometric_ratio(s0: f64) -> f64 {
    (2.0 * PI / s0).exp()
}

/// `cos(a) - β sin(a)` with `a = (s0/2) log(3/μ)`; vanishes exactly on the ladder.
pub fn quantization_residual(mu: f64, beta: f64, s0: f64) -> f64 {
    let a = 0.5 * s0 * (3.0 / mu).ln();
    a.cos() - beta * a.sin()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderEntry {
    pub n: i64,
    pub mu: f64,
    /// `E_n = -μ_n`
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundStateLadder {
    pub beta: f64,
    pub s0: f64,
    pub entries: Vec<LadderEntry>,
}

impl BoundStateLadder {
    pub fn new(beta: f64, s0: f64, levels: RangeInclusive<i64>) -> Result<Self> {
        if !(s0 > 0.0) || !s0.is_finite() {
            return Err(Error::Precondition(format!(
                "s0 must be positive, got {s0}"
            )));
        }
        if !beta.is_finite() {
            return Err(Error::Precondition(format!(
                "beta must be finite, got {beta}"
            )));
        }
        let entries = levels
            .map(|n| {
                let mu = mu_n(beta, n, s0);
                LadderEntry { n, mu, energy: -mu }
            })
            .collect();
        Ok(Self { beta, s0, entries })
    }

    pub fn ratios(&self) -> Vec<f64> {
        self.entries.windows(2).map(|w| w[1].mu / w[0].mu).collect()
    }
}

/// Closed-form solution of the radial equation at spectral parameter `mu`:
///
/// ```text
/// ξ̂_μ(p) = sin[s0 log(√3 p/(2√μ) + √(3p²/4 + μ)/√μ)] / (p √(3p²/4 + μ))
/// ```
///
/// At `p = 0` the continuous extension `s0 √3 / (2μ)` is returned.
pub fn xi_mu(p: f64, mu: f64, s0: f64) -> f64 {
    if p == 0.0 {
        return s0 * SQRT_3 / (2.0 * mu);
    }
    // log(t + √(t² + 1)) = asinh(t)
    let x = (SQRT_3 * p / (2.0 * mu.sqrt())).asinh();
    (s0 * x).sin() / (p * (0.75 * p * p + mu).sqrt())
}

/// `x = asinh(√3 p / (2√μ))`.
pub fn x_of_p(p: f64, mu: f64) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::Domain {
            function: "x_of_p",
            value: p,
            reason: "momentum must be positive",
        });
    }
    Ok((SQRT_3 * p / (2.0 * mu.sqrt())).asinh())
}

/// `p = (2√μ/√3) sinh x`.
pub fn p_of_x(x: f64, mu: f64) -> f64 {
    2.0 * mu.sqrt() / SQRT_3 * x.sinh()
}

/// `θ(x) = μ sinh x cosh x ξ̂(p(x))` for `x ≥ 0`, extended as an odd function.
pub fn theta_from_xi<F: Fn(f64) -> f64>(xi: F, mu: f64) -> impl Fn(f64) -> f64 {
    move |x: f64| {
        if x == 0.0 {
            return 0.0;
        }
        let t = x.abs();
        x.signum() * mu * t.sinh() * t.cosh() * xi(p_of_x(t, mu))
    }
}

/// Inverse of [`theta_from_xi`]: `ξ̂(p) = (2/√3) θ(x(p)) / (p √(3p²/4 + μ))`.
pub fn xi_from_theta<F: Fn(f64) -> f64>(theta: F, mu: f64) -> impl Fn(f64) -> f64 {
    move |p: f64| {
        let x = (SQRT_3 * p / (2.0 * mu.sqrt())).asinh();
        2.0 / SQRT_3 * theta(x) / (p * (0.75 * p * p + mu).sqrt())
    }
}

/// Samples of a rotationally invariant charge density `ξ̂(p)` on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ChargeDensity {
    grid: RadialGrid,
    values: Vec<f64>,
    mu: f64,
}

impl ChargeDensity {
    pub fn new(grid: RadialGrid, values: Vec<f64>, mu: f64) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::GridMismatch {
                values: values.len(),
                nodes: grid.len(),
            });
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Precondition(format!(
                "non-finite density sample {bad}"
            )));
        }
        if !(mu > 0.0) {
            return Err(Error::Precondition(format!(
                "mu must be positive, got {mu}"
            )));
        }
        Ok(Self { grid, values, mu })
    }

    pub fn sample(grid: RadialGrid, mu: f64, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.nodes().iter().map(|&p| f(p)).collect();
        Self::new(grid, values, mu)
    }

    /// Samples of [`xi_mu`].
    pub fn closed_form(grid: RadialGrid, mu: f64, s0: f64) -> Result<Self> {
        Self::sample(grid, mu, |p| xi_mu(p, mu, s0))
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::find_s0;

    fn s0() -> f64 {
        find_s0(1e-13).unwrap().s0
    }

    #[test]
    fn acot_branch() {
        assert_eq!(acot(0.0), FRAC_PI_2);
        assert!((acot(1.0) - PI / 4.0).abs() < 1e-15);
        assert!((acot(-1.0) - 3.0 * PI / 4.0).abs() < 1e-15);
        assert!(acot(1e12) > 0.0 && acot(-1e12) < PI);
    }

    #[test]
    fn ladder_values() {
        let s0 = s0();
        assert!((mu_n(0.0, 0, s0) - 3.0 * (-PI / s0).exp()).abs() < 1e-15);
        assert!((mu_n(0.0, 0, 1.00624) - 0.132_191_9).abs() < 1e-6);
        let ladder = BoundStateLadder::new(0.3, s0, -2..=2).unwrap();
        assert_eq!(ladder.entries.len(), 5);
        for e in &ladder.entries {
            assert_eq!(e.energy, -e.mu);
        }
        for r in ladder.ratios() {
            assert!((r / geometric_ratio(s0) - 1.0).abs() < 1e-14);
        }
        assert!(BoundStateLadder::new(0.0, -1.0, 0..=1).is_err());
    }

    #[test]
    fn quantization_zeros() {
        let s0 = s0();
        for beta in [-2.0, 0.0, 1.0] {
            for n in -1..=1 {
                assert!(quantization_residual(mu_n(beta, n, s0), beta, s0).abs() < 1e-13);
            }
        }
        assert_eq!(quantization_residual(3.0, 0.7, s0), 1.0);
    }

    #[test]
    fn quantization_changes_sign_between_levels() {
        let s0 = s0();
        let beta = 0.5;
        let (a, b) = (mu_n(beta, 0, s0), mu_n(beta, 1, s0));
        let mut changes = 0;
        let mut prev = quantization_residual(a * 1.001, beta, s0);
        for i in 1..=400 {
            let mu = a * 1.001 * (b / (a * 1.001) / 1.001).powf(i as f64 / 400.0);
            let v = quantization_residual(mu, beta, s0);
            if (v < 0.0) != (prev < 0.0) {
                changes += 1;
            }
            prev = v;
        }
        // between consecutive roots of cos - β sin the residual cannot vanish
        assert_eq!(changes, 0);
        let just_below = quantization_residual(b / 1.01, beta, s0);
        let just_above = quantization_residual(b * 1.01, beta, s0);
        assert!(just_below * just_above < 0.0);
    }

    #[test]
    fn xi_mu_limits() {
        let s0 = s0();
        let mu = 0.8;
        let p = 1e-7;
        let expected = s0 * SQRT_3 / (2.0 * mu);
        assert!((xi_mu(p, mu, s0) / expected - 1.0).abs() < 1e-6);
        assert_eq!(xi_mu(0.0, mu, s0), expected);
        for i in 0..200 {
            let p = 1e-3 * 1.1f64.powi(i);
            let env = 1.0 / (p * (0.75 * p * p + mu).sqrt());
            assert!(xi_mu(p, mu, s0).abs() <= env * (1.0 + 1e-15));
        }
    }

    #[test]
    fn large_momentum_decomposition() {
        let s0 = s0();
        for &mu in &[0.5f64, 1.0, 3.0] {
            let phase = 0.5 * s0 * (3.0 / mu).ln();
            for &p in &[1e3f64, 1e4] {
                let lead = 2.0 / SQRT_3
                    * (phase.cos() * (s0 * p.ln()).sin() + phase.sin() * (s0 * p.ln()).cos());
                let diff = xi_mu(p, mu, s0) * (p * p + 1.0) - lead;
                assert!(
                    diff.abs() <= 2.0 * (1.0 + mu) / (p * p),
                    "mu {mu} p {p}: {diff}"
                );
            }
        }
    }

    #[test]
    fn change_of_variables() {
        let mu = 1.7;
        for i in 0..20 {
            let p = 1e-3 * 2.3f64.powi(i);
            let back = p_of_x(x_of_p(p, mu).unwrap(), mu);
            assert!((back / p - 1.0).abs() < 1e-14);
        }
        let x = x_of_p(2.0 * mu.sqrt() / SQRT_3, mu).unwrap();
        assert!((x - 1f64.asinh()).abs() < 1e-15);
        assert!((x - (1.0 + 2f64.sqrt()).ln()).abs() < 1e-15);
        assert!(x_of_p(0.0, mu).is_err());
    }

    #[test]
    fn theta_of_closed_form_is_sinusoid() {
        let s0 = s0();
        let mu = 2.5;
        let theta = theta_from_xi(|p| xi_mu(p, mu, s0), mu);
        for i in 0..=40 {
            let x = -6.0 + 0.3 * i as f64;
            let expected = SQRT_3 / 2.0 * (s0 * x).sin();
            assert!((theta(x) - expected).abs() < 1e-13, "x = {x}");
        }
    }

    #[test]
    fn transforms_round_trip() {
        let mu = 0.6;
        let xi = |p: f64| (-p).exp() / (1.0 + p * p);
        let back = xi_from_theta(theta_from_xi(xi, mu), mu);
        for i in 0..60 {
            let p = 1e-4 * 1.3f64.powi(i);
            assert!((back(p) / xi(p) - 1.0).abs() < 1e-12, "p = {p}");
        }
    }

    #[test]
    fn density_validation() {
        let grid = crate::stm::build_grid(1e-2, 1e2, 16, crate::stm::GridKind::LogUniform).unwrap();
        assert!(ChargeDensity::new(grid.clone(), vec![0.0; 3], 1.0).is_err());
        assert!(ChargeDensity::new(grid.clone(), vec![f64::NAN; 16], 1.0).is_err());
        assert!(ChargeDensity::closed_form(grid, 1.0, s0()).is_ok());
    }
}
