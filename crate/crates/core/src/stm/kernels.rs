use std::f64::consts::FRAC_2_PI;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Angular average of the exchange term:
/// `-(2/π) log[(p² + q² + pq + μ) / (p² + q² - pq + μ)]`.
pub fn tms_kernel(p: f64, q: f64, mu: f64) -> f64 {
    let lower = p * p + q * q - p * q + mu;
    -FRAC_2_PI * (2.0 * p * q / lower).ln_1p()
}

/// Angular average of the Fourier-transformed `δ/|y|` term:
/// `(δ/π) log[(p + q) / |p - q|]`. Logarithmically singular at `p = q`.
pub fn coulomb_kernel(p: f64, q: f64, delta: f64) -> Result<f64> {
    if p == q {
        return Err(Error::CoincidentNodes(p));
    }
    Ok(delta / PI * log_coth_ratio(p, q))
}

/// `log[(p + q)/|p - q|] = 2 atanh(min/max)` for `p ≠ q`.
pub(crate) fn log_coth_ratio(p: f64, q: f64) -> f64 {
    let (a, b) = if p < q { (p, q) } else { (q, p) };
    2.0 * (a / b).atanh()
}

/// `∫_a^b log[(p + q)/|p - q|] dq` in closed form. `p` must not coincide
/// with either endpoint.
pub fn coulomb_row_integral(p: f64, a: f64, b: f64) -> f64 {
    antiderivative(p, b) - antiderivative(p, a)
}

// d/dq [p log|p² - q²| + q log((p + q)/|p - q|)] = log((p + q)/|p - q|)
fn antiderivative(p: f64, q: f64) -> f64 {
    if q == 0.0 {
        return 2.0 * p * p.ln();
    }
    p * ((p - q).abs() * (p + q)).ln() + q * log_coth_ratio(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tms_kernel_values() {
        // (1 + 1 + 1 + 1) / (1 + 1 - 1 + 1) = 2
        assert!((tms_kernel(1.0, 1.0, 1.0) + FRAC_2_PI * 2f64.ln()).abs() < 1e-15);
        assert_eq!(tms_kernel(0.3, 2.5, 0.7), tms_kernel(2.5, 0.3, 0.7));
        // O(q) as q → 0
        let (p, mu) = (1.3, 0.4);
        let slope = -FRAC_2_PI * 2.0 * p / (p * p + mu);
        for &q in &[1e-4, 1e-6, 1e-8] {
            assert!((tms_kernel(p, q, mu) / q - slope).abs() < 10.0 * q);
        }
        assert!(tms_kernel(1e8, 1e8, 1e-8).is_finite());
    }

    #[test]
    fn coulomb_kernel_values() {
        assert!((coulomb_kernel(2.0, 1.0, 0.8).unwrap() - 0.8 / PI * 3f64.ln()).abs() < 1e-15);
        assert_eq!(
            coulomb_kernel(0.2, 3.0, 1.0).unwrap(),
            coulomb_kernel(3.0, 0.2, 1.0).unwrap()
        );
        assert!(coulomb_kernel(0.2, 3.0, 1.0).unwrap() > 0.0);
        assert!(matches!(
            coulomb_kernel(1.5, 1.5, 1.0),
            Err(Error::CoincidentNodes(_))
        ));
    }

    #[test]
    fn row_integral_matches_direct_quadrature() {
        // adaptive Gauss-Kronrod on a mesh graded toward q = p from both sides
        let p = 0.7;
        let mut pts = vec![0.1];
        pts.extend((1..30).map(|k| p - 0.6 * 0.5f64.powi(k)));
        pts.push(p);
        pts.extend((1..30).rev().map(|k| p + 4.3 * 0.5f64.powi(k)));
        pts.push(5.0);
        let numeric = crate::oracle::integrate(
            |q| if q == p { 0.0 } else { log_coth_ratio(p, q) },
            &pts,
            1e-13,
        )
        .unwrap();
        let closed = coulomb_row_integral(p, 0.1, 5.0);
        assert!((numeric - closed).abs() < 1e-9, "{numeric} vs {closed}");
    }

    #[test]
    fn singular_integral_is_finite() {
        // ∫₀^∞ log((1+q)/|1-q|) e^{-q} dq; the endpoint form with large b
        // converges since the integrand tail is 2/q · e^{-q}
        let p = 1.0f64;
        let h = 1e-4;
        let mut sum = 0.0;
        let mut q = 0.5 * h;
        while q < 60.0 {
            if (q - p).abs() > 0.5 * h {
                sum += log_coth_ratio(p, q) * (-q).exp() * h;
            }
            q += h;
        }
        assert!(sum.is_finite() && sum > 0.0 && sum < 10.0);
    }
}
