//! Special functions: the Macdonald function `K0` and stable hyperbolic
//! ratios used by the symbol evaluations.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;

/// Absolute and relative tolerances for iterative procedures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Accuracy {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Accuracy {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Result<Self> {
        let ok = |t: f64| t.is_finite() && t > 0.0;
        if !ok(abs_tol) || !ok(rel_tol) {
            return Err(Error::Precondition(format!(
                "tolerances must be positive and finite, got abs {abs_tol}, rel {rel_tol}"
            )));
        }
        Ok(Self { abs_tol, rel_tol })
    }

    pub fn accepts(&self, error: f64, scale: f64) -> bool {
        error <= self.abs_tol.max(self.rel_tol * scale.abs())
    }
}

impl Default for Accuracy {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
        }
    }
}

/// Branch point between the ascending series and the continued fraction.
const K0_SWITCH: f64 = 2.0;

/// Modified Bessel function of the second kind, order zero.
///
/// For `x <= 2` the ascending series
/// `K0(x) = -(ln(x/2) + γ) I0(x) + Σ_k (x²/4)^k H_k / (k!)²` is summed
/// directly. For `x > 2` Steed's continued fraction for `K_ν` (ν = 0) is
/// used, which converges faster as `x` grows. The result underflows to `0`
/// beyond `x ≈ 745`.
pub fn k0(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain {
            function: "k0",
            value: x,
            reason: "x must be positive",
        });
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x <= K0_SWITCH {
        Ok(k0_series(x))
    } else {
        Ok(k0_continued_fraction(x))
    }
}

fn k0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut i0 = 1.0;
    let mut tail = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        tail += term * harmonic;
        if term * harmonic < 1e-18 * tail {
            break;
        }
    }
    -((0.5 * x).ln() + EULER_GAMMA) * i0 + tail
}

// Steed/Temme CF2 with ν = 0: K0(x) = sqrt(π/2x) e^{-x} / s.
fn k0_continued_fraction(x: f64) -> f64 {
    const EPS: f64 = 1e-17;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    (PI / (2.0 * x)).sqrt() * (-x).exp() / s
}

const TAYLOR_CUTOFF: f64 = 1e-6;

/// `tanh(πs/2) / s`, with value `π/2` at `s = 0`.
pub fn tanh_over_s(s: f64) -> f64 {
    let t = s.abs();
    if t < TAYLOR_CUTOFF {
        return FRAC_PI_2 * (1.0 - PI * PI * t * t / 12.0);
    }
    let e = (-PI * t).exp();
    -(-PI * t).exp_m1() / (1.0 + e) / t
}

/// `sinh(πs/6) / (s cosh(πs/2))`, with value `π/6` at `s = 0`.
pub fn sinh_ratio(s: f64) -> f64 {
    let t = s.abs();
    if t < TAYLOR_CUTOFF {
        return PI / 6.0 * (1.0 - 13.0 * PI * PI * t * t / 108.0);
    }
    let a = PI * t / 6.0;
    // (e^a - e^-a) / (e^3a + e^-3a) = e^-2a (1 - e^-2a) / (1 + e^-6a)
    (-2.0 * a).exp() * -(-2.0 * a).exp_m1() / (1.0 + (-6.0 * a).exp()) / t
}

#[cfg(test)]
mod tests {
    use super::*;

    // Trapezoid rule on the integral representation K0(x) = ∫₀^∞ exp(-x cosh t) dt;
    // the integrand is entire and decays doubly exponentially.
    fn k0_integral(x: f64) -> f64 {
        let h = 1.0 / 64.0;
        let mut sum = 0.5 * (-x).exp();
        let mut k = 1;
        loop {
            let t = k as f64 * h;
            let v = (-x * t.cosh()).exp();
            sum += v;
            if v < 1e-300 || v < 1e-22 * sum {
                break;
            }
            k += 1;
        }
        sum * h
    }

    #[test]
    fn k0_at_one_matches_integral() {
        let reference = k0_integral(1.0);
        assert!((reference - 0.421_024_438_240_708_3).abs() < 1e-15);
        assert!((k0(1.0).unwrap() / reference - 1.0).abs() < 1e-13);
    }

    #[test]
    fn k0_small_argument_limit() {
        for &x in &[1e-6, 1e-8, 1e-10] {
            let v = k0(x).unwrap() + (0.5 * x).ln() + EULER_GAMMA;
            assert!(v.abs() < 10.0 * x, "x = {x}: {v}");
        }
    }

    #[test]
    fn k0_large_argument_limit() {
        let mut prev = f64::INFINITY;
        for &x in &[50.0, 200.0, 600.0] {
            let ratio = k0(x).unwrap() * (2.0 * x / PI).sqrt() * x.exp();
            let err = (ratio - 1.0).abs();
            // leading correction is -1/(8x)
            assert!(err < 0.2 / x && err < prev);
            prev = err;
        }
    }

    #[test]
    fn k0_matches_integral_on_both_branches() {
        for &x in &[
            1e-4, 0.1, 1.5, 1.999, 2.0, 2.001, 3.0, 7.5, 20.0, 50.0, 300.0,
        ] {
            let reference = k0_integral(x);
            let rel = (k0(x).unwrap() / reference - 1.0).abs();
            assert!(rel < 1e-12, "x = {x}: rel {rel}");
        }
    }

    #[test]
    fn k0_underflows_to_zero() {
        assert_eq!(k0(800.0).unwrap(), 0.0);
        assert_eq!(k0(f64::INFINITY).unwrap(), 0.0);
    }

    #[test]
    fn k0_domain() {
        assert!(k0(0.0).is_err());
        assert!(k0(-1.0).is_err());
        assert!(k0(f64::NAN).is_err());
    }

    #[test]
    fn k0_monotone_positive() {
        let mut prev = f64::INFINITY;
        for i in 0..365 {
            let x = 1e-5 * 1.05f64.powi(i);
            let v = k0(x).unwrap();
            assert!(v > 0.0 && v < prev, "x = {x}");
            prev = v;
        }
    }

    #[test]
    fn hyperbolic_limits() {
        assert_eq!(tanh_over_s(0.0), FRAC_PI_2);
        assert_eq!(sinh_ratio(0.0), PI / 6.0);
        // Taylor branch joins the exponential branch smoothly
        for &s in &[0.9e-6, 1.1e-6] {
            let direct_t = (PI * s / 2.0).tanh() / s;
            let direct_r = (PI * s / 6.0).sinh() / (s * (PI * s / 2.0).cosh());
            assert!((tanh_over_s(s) - direct_t).abs() < 1e-12);
            assert!((sinh_ratio(s) - direct_r).abs() < 1e-12);
        }
    }

    #[test]
    fn sinh_ratio_decays() {
        // direct evaluation; cosh(50π) is still well inside f64 range
        for &s in &[10.0f64, 100.0] {
            let direct = (PI * s / 6.0).sinh() / (s * (PI * s / 2.0).cosh());
            assert!((sinh_ratio(s) / direct - 1.0).abs() < 1e-13);
        }
        assert!(sinh_ratio(100.0) < sinh_ratio(10.0));
        assert!(sinh_ratio(1e4) >= 0.0 && sinh_ratio(1e4).is_finite());
        assert!(tanh_over_s(1e4).is_finite());
    }

    #[test]
    fn hyperbolic_ratios_are_even() {
        for i in 0..20 {
            let s = 0.37 * i as f64 - 3.1;
            assert_eq!(tanh_over_s(s), tanh_over_s(-s));
            assert_eq!(sinh_ratio(s), sinh_ratio(-s));
        }
    }

    #[test]
    fn accuracy_validation() {
        assert!(Accuracy::new(0.0, 1e-8).is_err());
        let acc = Accuracy::default();
        assert!(acc.abs_tol <= 1e-6 && acc.rel_tol <= 1e-6);
        assert!(acc.accepts(1e-13, 1.0));
    }
}
