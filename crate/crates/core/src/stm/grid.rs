use crate::error::{Error, Result};

/// Nodes per Gauss–Legendre panel.
pub const PANEL_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    /// Midpoint rule in `log p`.
    LogUniform,
    /// Gauss–Legendre panels of uniform width in `log p`.
    GaussLegendreLog,
}

/// Quadrature on `[p_min, p_max]` for integrals `∫ f(p) dp`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    kind: GridKind,
    p_min: f64,
    p_max: f64,
}

impl RadialGrid {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn p_min(&self) -> f64 {
        self.p_min
    }

    pub fn p_max(&self) -> f64 {
        self.p_max
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&p, &w)| w * f(p))
            .sum()
    }
}

pub fn build_grid(p_min: f64, p_max: f64, n: usize, kind: GridKind) -> Result<RadialGrid> {
    if !(p_min > 0.0 && p_max > p_min && p_max.is_finite()) {
        return Err(Error::InvalidRange(format!(
            "need 0 < p_min < p_max < inf, got [{p_min}, {p_max}]"
        )));
    }
    if n < 8 {
        return Err(Error::InvalidRange(format!(
            "need at least 8 nodes, got {n}"
        )));
    }
    let (u0, u1) = (p_min.ln(), p_max.ln());
    let mut log_nodes = Vec::with_capacity(n);
    let mut log_weights = Vec::with_capacity(n);
    match kind {
        GridKind::LogUniform => {
            let h = (u1 - u0) / n as f64;
            for i in 0..n {
                log_nodes.push(u0 + (i as f64 + 0.5) * h);
                log_weights.push(h);
            }
        }
        GridKind::GaussLegendreLog => {
            // n nodes over n / PANEL_ORDER panels; the first n % panels panels carry one more node
            let panels = n / PANEL_ORDER;
            let order = n / panels;
            let extra = n % panels;
            let base = gauss_legendre(order);
            let longer = gauss_legendre(order + 1);
            let h = (u1 - u0) / panels as f64;
            for k in 0..panels {
                let a = u0 + k as f64 * h;
                let rule = if k < extra { &longer } else { &base };
                for (&x, &w) in rule.0.iter().zip(&rule.1) {
                    log_nodes.push(a + 0.5 * h * (x + 1.0));
                    log_weights.push(0.5 * h * w);
                }
            }
        }
    }
    // dp = p du
    let nodes: Vec<f64> = log_nodes.iter().map(|u| u.exp()).collect();
    let weights = nodes.iter().zip(&log_weights).map(|(p, w)| p * w).collect();
    Ok(RadialGrid {
        nodes,
        weights,
        kind,
        p_min,
        p_max,
    })
}

/// Default grid for spectral parameter `mu`: Gauss–Legendre panels on
/// `[1e-4 √μ, 1e4 √μ]` with 1000 nodes.
pub fn default_grid(mu: f64) -> Result<RadialGrid> {
    default_grid_with(mu, 1000)
}

pub fn default_grid_with(mu: f64, n: usize) -> Result<RadialGrid> {
    if !(mu > 0.0) {
        return Err(Error::Precondition(format!(
            "mu must be positive, got {mu}"
        )));
    }
    let k = mu.sqrt();
    build_grid(1e-4 * k, 1e4 * k, n, GridKind::GaussLegendreLog)
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, nodes ascending.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    let nf = order as f64;
    for i in 0..order.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(order, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(order, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
