//! Brute-force checks of the identities that diagonalize the radial
//! equations: the cosine transforms of the two position-space kernels, the
//! hyperbolic factorization of the exchange kernel, and the odd extension
//! that turns half-line integrals into convolutions.
//!
//! Everything here runs on adaptive Gauss–Kronrod quadrature and shares no
//! code with the Nyström discretization.

#[allow(clippy::excessive_precision)]
mod gk;

pub use gk::{graded_toward_zero, integrate, MAX_SUBDIVISIONS};

use std::f64::consts::PI;

use crate::error::Result;

const SQRT_3: f64 = 1.732_050_807_568_877_293_527_446_341_505_872_4;

/// Default truncation of the infinite range; both kernels decay like `e^{-x}`.
pub const DEFAULT_TAIL_CUT: f64 = 80.0;

const QUAD_TOL: f64 = 1e-12;
const GRADING_LEVELS: u32 = 50;

/// `log coth(x/2)` for `x > 0`.
pub fn log_coth_half(x: f64) -> f64 {
    if x > 1.0 {
        2.0 * (-x).exp().atanh()
    } else {
        (-x).exp().ln_1p() - (-(-x).exp_m1()).ln()
    }
}

/// `log[(2 cosh x + 1)/(2 cosh x - 1)]`.
pub fn exchange_kernel(x: f64) -> f64 {
    (2.0 / (2.0 * x.cosh() - 1.0)).ln_1p()
}

/// `(π/(2s)) tanh(πs/2)`, the cosine transform of [`log_coth_half`].
pub fn coth_kernel_transform(s: f64) -> f64 {
    if s == 0.0 {
        return PI * PI / 4.0;
    }
    PI / (2.0 * s) * (PI * s / 2.0).tanh()
}

/// `π sinh(πs/6)/(s cosh(πs/2))`, the cosine transform of [`exchange_kernel`].
pub fn exchange_kernel_transform(s: f64) -> f64 {
    if s == 0.0 {
        return PI * PI / 6.0;
    }
    PI * (PI * s / 6.0).sinh() / (s * (PI * s / 2.0).cosh())
}

/// `∫₀^{tail_cut} cos(sx) f(x) dx`, with the mesh graded toward `x = 0` to
/// absorb a logarithmic endpoint singularity.
pub fn cosine_transform(f: impl Fn(f64) -> f64, s: f64, tail_cut: f64) -> Result<f64> {
    let mut pts = graded_toward_zero(1.0, GRADING_LEVELS);
    let mut x = 1.0;
    while x < tail_cut {
        x = (x + 1.0).min(tail_cut);
        pts.push(x);
    }
    integrate(|x| (s * x).cos() * f(x), &pts, QUAD_TOL)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformCheck {
    pub s: f64,
    pub numeric: f64,
    pub analytic: f64,
    pub abs_err: f64,
}

impl TransformCheck {
    fn new(s: f64, numeric: f64, analytic: f64) -> Self {
        Self {
            s,
            numeric,
            analytic,
            abs_err: (numeric - analytic).abs(),
        }
    }
}

pub fn check_coth_transform(s: f64) -> Result<TransformCheck> {
    let numeric = cosine_transform(log_coth_half, s, DEFAULT_TAIL_CUT)?;
    Ok(TransformCheck::new(s, numeric, coth_kernel_transform(s)))
}

pub fn check_exchange_transform(s: f64) -> Result<TransformCheck> {
    let numeric = cosine_transform(exchange_kernel, s, DEFAULT_TAIL_CUT)?;
    Ok(TransformCheck::new(
        s,
        numeric,
        exchange_kernel_transform(s),
    ))
}

/// Residuals of the two factorizations
///
/// ```text
/// 4(sinh²x + sinh²y ± sinh x sinh y + 3/4) = (2cosh(x+y) ∓ 1)(2cosh(x-y) ± 1)
/// ```
///
/// returned as `(upper sign, lower sign)`.
pub fn factorization_check(x: f64, y: f64) -> (f64, f64) {
    let (sx, sy) = (x.sinh(), y.sinh());
    let (cp, cm) = ((x + y).cosh(), (x - y).cosh());
    let base = 4.0 * (sx * sx + sy * sy) + 3.0;
    let cross = 4.0 * sx * sy;
    let plus = (base + cross - (2.0 * cp - 1.0) * (2.0 * cm + 1.0)).abs();
    let minus = (base - cross - (2.0 * cp + 1.0) * (2.0 * cm - 1.0)).abs();
    (plus, minus)
}

// log[(sh²x + sh²y + sh x sh y + 3/4)/(sh²x + sh²y - sh x sh y + 3/4)]
fn exchange_half_kernel(x: f64, y: f64) -> f64 {
    let (sx, sy) = (x.sinh(), y.sinh());
    let lower = sx * sx + sy * sy - sx * sy + 0.75;
    (2.0 * sx * sy / lower).ln_1p()
}

// log|(sinh x + sinh y)/(sinh x - sinh y)|
fn coth_half_kernel(x: f64, y: f64) -> f64 {
    let (sx, sy) = (x.sinh(), y.sinh());
    ((sx + sy) / (sx - sy)).abs().ln()
}

fn graded_around(center: f64, lo: f64, hi: f64) -> Vec<f64> {
    let mut pts = vec![lo];
    let left = center - lo;
    for k in 0..GRADING_LEVELS {
        let d = left * 0.5f64.powi(k as i32 + 1);
        if d > 0.0 {
            pts.push(center - d);
        }
    }
    pts.push(center);
    let right = hi - center;
    for k in (0..GRADING_LEVELS).rev() {
        let d = right * 0.5f64.powi(k as i32 + 1);
        if d > 0.0 {
            pts.push(center + d);
        }
    }
    pts.push(hi);
    pts.dedup();
    pts
}

fn odd(theta: &impl Fn(f64) -> f64, y: f64) -> f64 {
    if y < 0.0 {
        -theta(-y)
    } else {
        theta(y)
    }
}

/// Half-line integrals against the original kernels next to the
/// full-line convolutions obtained from the odd extension of `θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OddExtensionCheck {
    pub x: f64,
    /// `∫₀^∞ θ(y) log[(sh²x + sh²y + sh x sh y + 3/4)/(… - sh x sh y …)] dy`
    pub half_line_exchange: f64,
    /// `∫ θ(y) log[(2cosh(x-y) + 1)/(2cosh(x-y) - 1)] dy` over ℝ
    pub full_line_exchange: f64,
    /// `∫₀^∞ θ(y) log|(sinh x + sinh y)/(sinh x - sinh y)| dy`
    pub half_line_coth: f64,
    /// `∫ θ(y) log|coth((x-y)/2)| dy` over ℝ
    pub full_line_coth: f64,
}

impl OddExtensionCheck {
    pub fn defect(&self) -> f64 {
        (self.half_line_exchange - self.full_line_exchange)
            .abs()
            .max((self.half_line_coth - self.full_line_coth).abs())
    }
}

fn full_line_convolutions(
    theta: &impl Fn(f64) -> f64,
    x: f64,
    tail_cut: f64,
) -> Result<(f64, f64)> {
    let mut pts = graded_around(x, x - tail_cut, x + tail_cut);
    if x - tail_cut < 0.0 && x > 0.0 {
        pts.push(0.0);
        pts.sort_by(f64::total_cmp);
    }
    let exchange = integrate(|y| odd(theta, y) * exchange_kernel(x - y), &pts, QUAD_TOL)?;
    let coth = integrate(
        |y| {
            let z = (x - y).abs();
            if z == 0.0 {
                0.0
            } else {
                odd(theta, y) * log_coth_half(z)
            }
        },
        &pts,
        QUAD_TOL,
    )?;
    Ok((exchange, coth))
}

/// Compares half-line and full-line forms at `x > 0` for `θ` given on `x ≥ 0`.
pub fn odd_extension_check(
    theta: impl Fn(f64) -> f64,
    x: f64,
    tail_cut: f64,
) -> Result<OddExtensionCheck> {
    let pts = graded_around(x, 0.0, x + tail_cut);
    let half_line_exchange = integrate(|y| theta(y) * exchange_half_kernel(x, y), &pts, QUAD_TOL)?;
    let half_line_coth = integrate(
        |y| {
            let k = coth_half_kernel(x, y);
            if k.is_finite() {
                theta(y) * k
            } else {
                0.0
            }
        },
        &pts,
        QUAD_TOL,
    )?;
    let (full_line_exchange, full_line_coth) = full_line_convolutions(&theta, x, tail_cut)?;
    Ok(OddExtensionCheck {
        x,
        half_line_exchange,
        full_line_exchange,
        half_line_coth,
        full_line_coth,
    })
}

/// Left side of the position-space equation
///
/// ```text
/// θ(x) + (2δ/(√3π)) ∫ θ(y) log|coth((x-y)/2)| dy
///      - (4/(√3π)) ∫ θ(y) log[(2cosh(x-y)+1)/(2cosh(x-y)-1)] dy
/// ```
///
/// with `θ` extended as an odd function. On `θ = sin(s·)` it equals the
/// regularized symbol at `s` times `sin(sx)`.
pub fn balance(theta: impl Fn(f64) -> f64, x: f64, delta: f64, tail_cut: f64) -> Result<f64> {
    let (exchange, coth) = full_line_convolutions(&theta, x, tail_cut)?;
    Ok(odd(&theta, x) + 2.0 * delta / (SQRT_3 * PI) * coth - 4.0 / (SQRT_3 * PI) * exchange)
}
