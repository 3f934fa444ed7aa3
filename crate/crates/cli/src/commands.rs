use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use efimov_core::ladder::{quantization_residual, BoundStateLadder};
use efimov_core::oracle::{
    balance, check_coth_transform, check_exchange_transform, DEFAULT_TAIL_CUT,
};
use efimov_core::stm::{
    build_grid, default_window, residual_report, scan_bound_states, GridKind, ModelParams,
};
use efimov_core::symbols::{
    certify_positivity, delta0, delta_literature_bound, eval_g, eval_reg_symbol, find_s0,
    gamma_bound, gamma_to_delta, reg_symbol_at_zero,
};
use efimov_core::thomas::{
    boundary_coefficient, coincidence_coefficient, pde_residual, ThomasPoint,
};
use efimov_core::{efimov_s0, ladder};

use crate::config::{
    parse_float_range, parse_int_range, Command, Delta0Params, LadderParams, OracleParams,
    ResidualParams, S0Params, ScanParams, SymbolParams, ThomasParams,
};
use crate::error::CliError;
use crate::output::{Cell, Report};

pub fn execute(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::S0(p) => s0(p),
        Command::Delta0(p) => delta0_cmd(p),
        Command::Ladder(p) => ladder_cmd(p),
        Command::Symbol(p) => symbol(p),
        Command::Scan(p) => scan(p),
        Command::Residual(p) => residual(p),
        Command::Thomas(p) => thomas(p),
        Command::Oracle(p) => oracle(p),
    }
}

fn s0(p: &S0Params) -> Result<Report, CliError> {
    let c = find_s0(p.tol)?;
    let mut r = Report::new(&["s0", "residual", "geometric_ratio"]);
    r.summary("s0", c.s0);
    r.summary("residual", c.residual);
    r.summary("tolerance", c.tolerance);
    r.push(vec![
        c.s0.into(),
        c.residual.into(),
        ladder::geometric_ratio(c.s0).into(),
    ])?;
    Ok(r)
}

fn delta0_cmd(_: &Delta0Params) -> Result<Report, CliError> {
    let mut r = Report::new(&["quantity", "value"]);
    let rows = [
        ("delta0", delta0()),
        ("symbol_at_zero_for_delta0", reg_symbol_at_zero(delta0())),
        ("delta_literature_bound", delta_literature_bound()),
        ("gamma_bound", gamma_bound()),
        ("gamma_bound_as_delta", gamma_to_delta(gamma_bound())),
        ("g_at_zero", eval_g(0.0)),
    ];
    for (k, v) in rows {
        r.summary(k, v);
        r.push(vec![k.into(), v.into()])?;
    }
    Ok(r)
}

fn ladder_cmd(p: &LadderParams) -> Result<Report, CliError> {
    let (lo, hi) = parse_int_range(&p.n)?;
    let s0 = efimov_s0();
    let table = BoundStateLadder::new(p.beta, s0, lo..=hi)?;
    let mut r = Report::new(&["n", "mu", "energy", "ratio", "quantization_residual"]);
    r.summary("beta", p.beta);
    for e in &table.entries {
        let below = ladder::mu_n(p.beta, e.n - 1, s0);
        r.push(vec![
            e.n.into(),
            e.mu.into(),
            e.energy.into(),
            (e.mu / below).into(),
            quantization_residual(e.mu, p.beta, s0).into(),
        ])?;
    }
    Ok(r)
}

fn symbol(p: &SymbolParams) -> Result<Report, CliError> {
    let scan = certify_positivity(p.delta, p.s_max, p.n)?;
    let mut r = Report::new(&["s", "symbol"]);
    r.summary("delta", p.delta);
    r.summary("min_value", scan.min_value);
    r.summary("argmin", scan.argmin);
    r.summary("positive", scan.is_positive());
    let brackets: Vec<String> = scan
        .sign_changes
        .iter()
        .map(|[a, b]| {
            format!(
                "{}..{}",
                crate::output::format_float(*a),
                crate::output::format_float(*b)
            )
        })
        .collect();
    r.summary("sign_changes", brackets.join(";"));
    let h = p.s_max / (p.n - 1) as f64;
    for i in 0..p.n {
        let s = if i == p.n - 1 { p.s_max } else { h * i as f64 };
        let v = if i == 0 {
            reg_symbol_at_zero(p.delta)
        } else {
            eval_reg_symbol(s, p.delta)
        };
        r.push(vec![s.into(), v.into()])?;
    }
    Ok(r)
}

fn scan(p: &ScanParams) -> Result<Report, CliError> {
    let (mu_lo, mu_hi) = parse_float_range(&p.mu)?;
    let grid = build_grid(p.p_min, p.p_max, p.grid, GridKind::GaussLegendreLog)?;
    let scan = scan_bound_states(&grid, p.delta, mu_lo, mu_hi, p.n_mu)?;
    let mut r = Report::new(&["mu", "smallest_eigenvalue", "negative_count", "crossings"]);
    r.summary("delta", p.delta);
    r.summary("min_eigenvalue", scan.min_eigenvalue());
    r.summary("crossing_count", scan.crossings.len());
    let ratios: Vec<String> = scan
        .crossing_ratios()
        .iter()
        .map(|&x| crate::output::format_float(x))
        .collect();
    r.summary("crossing_ratios", ratios.join(";"));
    let mut prev = f64::NEG_INFINITY;
    for s in &scan.samples {
        // crossings in (previous sample, this sample]
        let here: Vec<String> = scan
            .crossings
            .iter()
            .filter(|&&c| c > prev && c <= s.mu)
            .map(|&c| crate::output::format_float(c))
            .collect();
        let cell = if here.is_empty() {
            Cell::Empty
        } else {
            Cell::Text(here.join(";"))
        };
        r.push(vec![
            s.mu.into(),
            s.smallest_eigenvalue.into(),
            s.negative_count.into(),
            cell,
        ])?;
        prev = s.mu;
    }
    Ok(r)
}

fn residual(p: &ResidualParams) -> Result<Report, CliError> {
    let params = ModelParams::new(p.mu, p.delta)?;
    let k = p.mu.sqrt();
    let grid = build_grid(p.p_min * k, p.p_max * k, p.grid, GridKind::GaussLegendreLog)?;
    let density = ladder::ChargeDensity::closed_form(grid, p.mu, efimov_s0())?;
    let report = residual_report(&density, &params, default_window(p.mu))?;
    let mut r = Report::new(&["p", "component"]);
    r.summary("relative_l2", report.relative_l2);
    r.summary("relative_sup", report.relative_sup);
    r.summary("interior_nodes", report.interior_nodes.len());
    let nodes = density.grid().nodes();
    for (&i, &c) in report.interior_nodes.iter().zip(&report.components) {
        r.push(vec![nodes[i].into(), c.into()])?;
    }
    Ok(r)
}

fn random_vec(rng: &mut StdRng) -> [f64; 3] {
    [
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
    ]
}

fn thomas(p: &ThomasParams) -> Result<Report, CliError> {
    let mut rng = StdRng::seed_from_u64(p.seed);
    let mut r = Report::new(&[
        "s1_x",
        "s1_y",
        "s1_z",
        "s2_x",
        "s2_y",
        "s2_z",
        "eta",
        "residual",
        "order_ratio",
        "boundary_coefficient",
        "analytic_coefficient",
    ]);
    let mut worst = 0.0f64;
    while r.rows.len() < p.points {
        let pt = ThomasPoint::new(
            random_vec(&mut rng),
            random_vec(&mut rng),
            rng.random_range(0.5..2.0),
        )?;
        if pt.coincidence_distance() < 20.0 * p.h.max(p.eps) {
            continue;
        }
        let fine = pde_residual(&pt, p.h)?;
        let coarse = pde_residual(&pt, 2.0 * p.h)?;
        worst = worst.max(fine);
        let mut row: Vec<Cell> = pt.s1.iter().chain(&pt.s2).map(|&v| v.into()).collect();
        row.push(pt.eta.into());
        row.push(fine.into());
        row.push((coarse / fine).into());
        row.push(boundary_coefficient(pt.s2, pt.eta, p.eps)?.into());
        row.push(coincidence_coefficient(pt.s2, pt.eta)?.into());
        r.push(row)?;
    }
    r.summary("max_residual", worst);
    Ok(r)
}

const TRANSFORM_TOL: f64 = 1e-8;
const BALANCE_TOL: f64 = 1e-6;

fn oracle(p: &OracleParams) -> Result<Report, CliError> {
    let freqs: Vec<f64> =
        p.s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::Config(format!("bad frequency '{t}'")))
            })
            .collect::<Result<_, _>>()?;
    let mut r = Report::new(&[
        "check",
        "s",
        "numeric",
        "analytic",
        "abs_err",
        "tolerance",
        "pass",
    ]);
    let mut all = true;
    let mut push = |r: &mut Report, name: &str, s: f64, numeric: f64, analytic: f64, tol: f64| {
        let err = (numeric - analytic).abs();
        all &= err <= tol;
        r.push(vec![
            name.into(),
            s.into(),
            numeric.into(),
            analytic.into(),
            err.into(),
            tol.into(),
            (err <= tol).into(),
        ])
    };
    for &s in &freqs {
        let c = check_coth_transform(s)?;
        push(
            &mut r,
            "coth_transform",
            s,
            c.numeric,
            c.analytic,
            TRANSFORM_TOL,
        )?;
        let c = check_exchange_transform(s)?;
        push(
            &mut r,
            "exchange_transform",
            s,
            c.numeric,
            c.analytic,
            TRANSFORM_TOL,
        )?;
        let b = balance(|y| (s * y).sin(), p.x, 0.0, DEFAULT_TAIL_CUT)?;
        push(
            &mut r,
            "balance",
            s,
            b,
            eval_g(s) * (s * p.x).sin(),
            BALANCE_TOL,
        )?;
    }
    r.summary("x", p.x);
    r.summary("all_pass", all);
    Ok(r)
}
