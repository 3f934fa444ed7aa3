//! Thomas's singular solution of the free three-body eigenvalue equation
//! in the relative coordinates `s1 = x1 - x3`, `s2 = x2 - x3`.
//!
//! With `s² = |s1|² + |s2|² - s1·s2`, `ξ1 = |s1|/|s1 - 2 s2|`,
//! `ξ2 = |s2|/|s2 - 2 s1|` and `ζ = √3 ξ`, the function
//!
//! ```text
//! Ψ = K0(η s)/s² · Σ_i (π/2 - atan ζ_i)(1 + ζ_i²)/ζ_i
//! ```
//!
//! satisfies `(Δ1 + Δ2 + ∇1·∇2) Ψ = (3/4) η² Ψ` away from the coincidence
//! planes, and `|s1| Ψ → (π/√3) K0(η|s2|)/|s2|` as `s1 → 0`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::specfun::k0;

const SQRT_3: f64 = 1.732_050_807_568_877_293_527_446_341_505_872_4;

/// Eigenvalue of `Δ1 + Δ2 + ∇1·∇2` on `Ψ`, in units of `η²`.
pub const EIGENVALUE_FACTOR: f64 = 0.75;

pub type Vec3 = [f64; 3];

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

fn sub_twice(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - 2.0 * b[0], a[1] - 2.0 * b[1], a[2] - 2.0 * b[2]]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThomasPoint {
    pub s1: Vec3,
    pub s2: Vec3,
    pub eta: f64,
}

impl ThomasPoint {
    pub fn new(s1: Vec3, s2: Vec3, eta: f64) -> Result<Self> {
        let pt = Self { s1, s2, eta };
        pt.validate()?;
        Ok(pt)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eta > 0.0) {
            return Err(Error::Domain {
                function: "thomas_psi",
                value: self.eta,
                reason: "eta must be positive",
            });
        }
        let d = self.coincidence_distance();
        if !(d > 0.0) {
            return Err(Error::Domain {
                function: "thomas_psi",
                value: d,
                reason: "point lies on a coincidence set",
            });
        }
        Ok(())
    }

    /// Euclidean distance in ℝ⁶ to the nearest of `{s1 = 0}`, `{s2 = 0}`,
    /// `{s1 = 2 s2}`, `{s2 = 2 s1}`.
    pub fn coincidence_distance(&self) -> f64 {
        let r5 = 5f64.sqrt();
        norm(self.s1)
            .min(norm(self.s2))
            .min(norm(sub_twice(self.s1, self.s2)) / r5)
            .min(norm(sub_twice(self.s2, self.s1)) / r5)
    }

    /// The point with both relative coordinates multiplied by `lambda`.
    pub fn scaled(&self, lambda: f64) -> Self {
        let m = |v: Vec3| [lambda * v[0], lambda * v[1], lambda * v[2]];
        Self {
            s1: m(self.s1),
            s2: m(self.s2),
            eta: self.eta,
        }
    }

    fn hyperradius_sq(&self) -> f64 {
        dot(self.s1, self.s1) + dot(self.s2, self.s2) - dot(self.s1, self.s2)
    }

    fn angular(&self) -> f64 {
        let xi1 = norm(self.s1) / norm(sub_twice(self.s1, self.s2));
        let xi2 = norm(self.s2) / norm(sub_twice(self.s2, self.s1));
        angular_term(xi1) + angular_term(xi2)
    }
}

fn angular_term(xi: f64) -> f64 {
    let z = SQRT_3 * xi;
    (FRAC_PI_2 - z.atan()) * (1.0 + z * z) / z
}

pub fn thomas_psi(pt: &ThomasPoint) -> Result<f64> {
    pt.validate()?;
    let s2 = pt.hyperradius_sq();
    Ok(k0(pt.eta * s2.sqrt())? / s2 * pt.angular())
}

/// Member of the scaling family `Ψ_λ(s1, s2) = λ³ Ψ(λ s1, λ s2)`, evaluated
/// as `(λ/s²) K0(λ η s) [...]`. It solves the same equation with `η → λη`.
pub fn thomas_psi_scaled(pt: &ThomasPoint, lambda: f64) -> Result<f64> {
    pt.validate()?;
    if !(lambda > 0.0) {
        return Err(Error::Domain {
            function: "thomas_psi_scaled",
            value: lambda,
            reason: "scale must be positive",
        });
    }
    let s2 = pt.hyperradius_sq();
    Ok(lambda / s2 * k0(lambda * pt.eta * s2.sqrt())? * pt.angular())
}

/// Applies `Δ1 + Δ2 + ∇1·∇2` by second-order central differences with step `h`.
/// The mixed derivatives use the four-point cross stencil.
pub fn apply_free_operator(f: impl Fn(&[f64; 6]) -> f64, at: &[f64; 6], h: f64) -> f64 {
    let shifted = |moves: &[(usize, f64)]| {
        let mut y = *at;
        for &(k, d) in moves {
            y[k] += d;
        }
        f(&y)
    };
    let center = f(at);
    let mut laplacian = 0.0;
    for k in 0..6 {
        laplacian += shifted(&[(k, h)]) - 2.0 * center + shifted(&[(k, -h)]);
    }
    let mut mixed = 0.0;
    for a in 0..3 {
        let b = a + 3;
        mixed +=
            shifted(&[(a, h), (b, h)]) - shifted(&[(a, h), (b, -h)]) - shifted(&[(a, -h), (b, h)])
                + shifted(&[(a, -h), (b, -h)]);
    }
    laplacian / (h * h) + mixed / (4.0 * h * h)
}

fn psi_at(coords: &[f64; 6], eta: f64, lambda: f64) -> f64 {
    let pt = ThomasPoint {
        s1: [coords[0], coords[1], coords[2]],
        s2: [coords[3], coords[4], coords[5]],
        eta,
    };
    thomas_psi_scaled(&pt, lambda).unwrap_or(f64::NAN)
}

/// Relative residual `|LΨ - (3/4)η²Ψ| / |(3/4)η²Ψ|` with `L = Δ1 + Δ2 + ∇1·∇2`
/// discretized by central differences.
pub fn pde_residual(pt: &ThomasPoint, h: f64) -> Result<f64> {
    pde_residual_scaled(pt, 1.0, h)
}

/// [`pde_residual`] for the scaled solution `Ψ_λ`, whose decay parameter is `λη`.
pub fn pde_residual_scaled(pt: &ThomasPoint, lambda: f64, h: f64) -> Result<f64> {
    pt.validate()?;
    let distance = pt.coincidence_distance();
    if !(h > 0.0) || h > distance / 10.0 {
        return Err(Error::StepTooLarge { step: h, distance });
    }
    let at = [pt.s1[0], pt.s1[1], pt.s1[2], pt.s2[0], pt.s2[1], pt.s2[2]];
    let psi = thomas_psi_scaled(pt, lambda)?;
    let lhs = apply_free_operator(|y| psi_at(y, pt.eta, lambda), &at, h);
    let eta = lambda * pt.eta;
    let rhs = EIGENVALUE_FACTOR * eta * eta * psi;
    Ok((lhs - rhs).abs() / rhs.abs())
}

/// The analytic coefficient `(π/√3) K0(η|s|)/|s|` of the `1/|s1|`
/// singularity on the plane `s1 = 0` (with `s = s2`).
pub fn coincidence_coefficient(s: Vec3, eta: f64) -> Result<f64> {
    let r = norm(s);
    Ok(PI / SQRT_3 * k0(eta * r)? / r)
}

const AXES: [Vec3; 6] = [
    [1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0],
    [0.0, 1.0, 0.0],
    [0.0, -1.0, 0.0],
    [0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0],
];

/// `ε Ψ` at `|s1| = ε`, averaged over the six axis directions of `s1`.
pub fn boundary_coefficient(s2: Vec3, eta: f64, eps: f64) -> Result<f64> {
    if norm(s2) == 0.0 {
        return Err(Error::Domain {
            function: "boundary_coefficient",
            value: 0.0,
            reason: "s2 must be non-zero",
        });
    }
    let mut sum = 0.0;
    for axis in AXES {
        let s1 = [eps * axis[0], eps * axis[1], eps * axis[2]];
        sum += eps * thomas_psi(&ThomasPoint::new(s1, s2, eta)?)?;
    }
    Ok(sum / AXES.len() as f64)
}

/// [`boundary_coefficient`] with the roles of `s1` and `s2` exchanged.
pub fn boundary_coefficient_swapped(s1: Vec3, eta: f64, eps: f64) -> Result<f64> {
    if norm(s1) == 0.0 {
        return Err(Error::Domain {
            function: "boundary_coefficient",
            value: 0.0,
            reason: "s1 must be non-zero",
        });
    }
    let mut sum = 0.0;
    for axis in AXES {
        let s2 = [eps * axis[0], eps * axis[1], eps * axis[2]];
        sum += eps * thomas_psi(&ThomasPoint::new(s1, s2, eta)?)?;
    }
    Ok(sum / AXES.len() as f64)
}
