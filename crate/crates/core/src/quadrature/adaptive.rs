//! Level-synchronous adaptive Gauss–Kronrod (7/15) integration.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Execution};

// Kronrod abscissae on [0,1]; odd indices are the 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Result of a numerical integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub n_evals: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureOptions {
    /// Target absolute error for the whole interval.
    pub tol: f64,
    pub max_evals: u64,
    /// Upper bound on the width of every panel.
    pub max_panel_width: Option<f64>,
    pub exec: Execution,
}

impl QuadratureOptions {
    pub fn new(tol: f64) -> Self {
        QuadratureOptions { tol, max_evals: 4_000_000, max_panel_width: None, exec: Execution::default() }
    }

    pub fn with_max_panel_width(mut self, w: f64) -> Self {
        self.max_panel_width = Some(w);
        self
    }

    pub fn with_exec(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
}

/// `(kronrod15, |kronrod15 − gauss7|)` on one panel.
fn gk15<F: Fn(f64) -> f64>(f: &F, p: Panel) -> (f64, f64) {
    let center = 0.5 * (p.a + p.b);
    let half = 0.5 * (p.b - p.a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Integrates `f` over `[a, b]`.
///
/// Every round evaluates all unresolved panels (in parallel when enabled),
/// accepts those whose Kronrod/Gauss disagreement is within their share
/// `tol·width/(b−a)` of the budget, and bisects the rest. Accepted panels are
/// summed in left-endpoint order so the result does not depend on scheduling.
pub fn integrate<F>(f: F, a: f64, b: f64, opts: &QuadratureOptions) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    if opts.tol.is_nan() || opts.tol <= 0.0 || a.is_nan() || b.is_nan() || b <= a {
        return Err(Error::InvalidArgument(format!("need tol > 0 and a < b (tol={}, [{a}, {b}])", opts.tol)));
    }
    let width = b - a;
    let initial = opts
        .max_panel_width
        .map(|w| (width / w).ceil().max(1.0) as usize)
        .unwrap_or(1);
    let h = width / initial as f64;
    let mut pending: Vec<Panel> = (0..initial)
        .map(|i| Panel { a: a + i as f64 * h, b: if i + 1 == initial { b } else { a + (i + 1) as f64 * h } })
        .collect();
    let mut accepted: Vec<(Panel, f64, f64)> = Vec::new();
    let mut n_evals = 0u64;

    while !pending.is_empty() {
        n_evals += 15 * pending.len() as u64;
        if n_evals > opts.max_evals {
            return Err(Error::Budget(format!(
                "quadrature did not reach tol {:e} within {} evaluations",
                opts.tol, opts.max_evals
            )));
        }
        let results = par::map(opts.exec, &pending, |&p| gk15(&f, p));
        let mut next = Vec::new();
        for (p, (val, err)) in pending.into_iter().zip(results) {
            if !val.is_finite() || !err.is_finite() {
                return Err(Error::Budget(format!("non-finite integrand on [{}, {}]", p.a, p.b)));
            }
            let share = opts.tol * (p.b - p.a) / width;
            let roundoff = 50.0 * f64::EPSILON * val.abs();
            let mid = 0.5 * (p.a + p.b);
            if err <= share || err <= roundoff || mid <= p.a || mid >= p.b {
                accepted.push((p, val, err));
            } else {
                next.push(Panel { a: p.a, b: mid });
                next.push(Panel { a: mid, b: p.b });
            }
        }
        pending = next;
    }

    accepted.sort_by(|x, y| x.0.a.total_cmp(&y.0.a));
    let value = accepted.iter().map(|x| x.1).sum();
    let abs_error_estimate = accepted.iter().map(|x| x.2).sum::<f64>();
    if abs_error_estimate > opts.tol {
        return Err(Error::Budget(format!(
            "error estimate {abs_error_estimate:e} exceeds tol {:e} (roundoff-limited)",
            opts.tol
        )));
    }
    Ok(QuadratureResult { value, abs_error_estimate, n_evals })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let r = integrate(|x| x.powi(5) - 2.0 * x, 0.0, 1.0, &QuadratureOptions::new(1e-12)).unwrap();
        assert!((r.value - (1.0 / 6.0 - 1.0)).abs() < 1e-15);
        assert_eq!(r.n_evals, 15);
    }

    #[test]
    fn oscillatory_with_cap() {
        let w = 101.0 * std::f64::consts::PI;
        let opts = QuadratureOptions::new(1e-12).with_max_panel_width(1.0 / (4.0 * 101.0));
        let r = integrate(|x| (w * x).sin(), 0.0, 0.5, &opts).unwrap();
        let exact = (1.0 - (w * 0.5).cos()) / w;
        assert!((r.value - exact).abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn reproducible_across_modes() {
        let f = |x: f64| (1.0 / (x + 1e-3)).sqrt().sin();
        let o = QuadratureOptions::new(1e-10);
        let a = integrate(f, 0.0, 1.0, &o.with_exec(Execution::Sequential)).unwrap();
        let b = integrate(f, 0.0, 1.0, &o.with_exec(Execution::Parallel)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_exhaustion() {
        let opts = QuadratureOptions { max_evals: 100, ..QuadratureOptions::new(1e-14) };
        let r = integrate(|x| (1.0 / x).sin(), 1e-9, 1.0, &opts);
        assert!(matches!(r, Err(Error::Budget(_))));
    }

    #[test]
    fn rejects_bad_interval() {
        assert!(integrate(|x| x, 1.0, 0.0, &QuadratureOptions::new(1e-8)).is_err());
        assert!(integrate(|x| x, 0.0, 1.0, &QuadratureOptions::new(0.0)).is_err());
    }
}
