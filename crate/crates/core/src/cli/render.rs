use std::fmt::Write as _;

use serde_json::json;

use super::{CliConfig, Format, Output};
use crate::betavalues::{beta_odd_exact, beta_odd_exact_via_euler, beta_series, PiPowerValue};
use crate::eulerpoly::{
    bernoulli_number, bernoulli_polynomial, euler_number, euler_polynomial, generalized_bernoulli_chi4,
    run_identity_suite,
};
use crate::exact::{Rational, RationalPolynomial};
use crate::hpreal::Fixed;
use crate::quadrature::{
    aux_integral_i_closed, aux_integral_j_closed, aux_integral_numeric, beta_even_quadrature_with, IntegrandSpec,
    SignConvention,
};
use crate::telescope::PartialSumTrace;
use crate::Execution;

/// f64 quadrature values are shown with at most this many decimals.
const F64_DIGITS: u32 = 15;

fn json_line(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn decimal_f64(x: f64, digits: u32) -> String {
    Fixed::from_f64(x, 40).to_decimal_string(digits.min(F64_DIGITS))
}

pub(crate) fn beta_odd(k: u32, cross_check: bool, cfg: &CliConfig) -> Output {
    let v = beta_odd_exact(k);
    let report = v.report(cfg.digits);
    let via = cross_check.then(|| beta_odd_exact_via_euler(k));
    let agrees = via.as_ref().is_none_or(|w| *w == v);
    let body = match cfg.format {
        Format::Json => match &via {
            None => json_line(&report),
            Some(w) => json_line(&json!({
                "coeff": report.coeff,
                "pi_power": report.pi_power,
                "decimal": report.decimal,
                "digits": report.digits,
                "via_euler": w.coeff(),
                "agrees": agrees,
            })),
        },
        Format::Csv => {
            let mut s = String::from("k,coeff,pi_power,decimal,digits");
            if via.is_some() {
                s.push_str(",via_euler,agrees");
            }
            let _ = write!(s, "\n{},{},{},{},{}", k, report.coeff, report.pi_power, report.decimal, report.digits);
            if let Some(w) = &via {
                let _ = write!(s, ",{},{}", w.coeff(), agrees);
            }
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("beta({}) = {} = {}\n", 2 * k + 1, v, report.decimal);
            if let Some(w) = &via {
                let verdict = if agrees { "agrees" } else { "DISAGREES" };
                let _ = writeln!(s, "via Euler numbers: {w} ({verdict})");
            }
            s
        }
    };
    Output::checked(body, agrees)
}

pub(crate) fn beta_even(k: u32, show_erratum: bool, cfg: &CliConfig) -> crate::Result<Output> {
    let q = beta_even_quadrature_with(k, cfg.tol, SignConvention::Derived, Execution::default())?;
    let printed = if show_erratum {
        Some(beta_even_quadrature_with(k, cfg.tol, SignConvention::Printed, Execution::default())?)
    } else {
        None
    };
    let sd = cfg.digits.clamp(10, 30);
    let series = beta_series(2 * k, sd)?;
    let diff = (q.value - series.to_f64()).abs();
    let agrees = diff <= cfg.tol + 10f64.powi(-(sd as i32)) + 4.0 * f64::EPSILON;
    let value = decimal_f64(q.value, cfg.digits);
    let body = match cfg.format {
        Format::Json => {
            let mut o = json!({
                "k": k,
                "quadrature": q,
                "decimal": value,
                "series": { "decimal": series.to_decimal_string(), "digits": sd },
                "abs_difference": diff,
                "agrees": agrees,
            });
            if let Some(p) = &printed {
                o["printed_sign"] = json!(p);
            }
            json_line(&o)
        }
        Format::Csv => {
            let mut s = String::from("k,value,abs_error_estimate,n_evals,series,abs_difference,agrees");
            if printed.is_some() {
                s.push_str(",printed_sign_value");
            }
            let _ = write!(
                s,
                "\n{},{:e},{:e},{},{},{:e},{}",
                k,
                q.value,
                q.abs_error_estimate,
                q.n_evals,
                series.to_decimal_string(),
                diff,
                agrees
            );
            if let Some(p) = &printed {
                let _ = write!(s, ",{:e}", p.value);
            }
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("beta({}) = {}\n", 2 * k, value);
            let _ = writeln!(s, "abs error estimate: {:.3e} ({} evaluations)", q.abs_error_estimate, q.n_evals);
            let verdict = if agrees { "agrees" } else { "DISAGREES" };
            let _ = writeln!(s, "series cross-check: {} (|difference| {:.3e}, {verdict})", series, diff);
            if let Some(p) = &printed {
                let _ = writeln!(s, "sign (-1)^k:     {}", value);
                let _ = writeln!(
                    s,
                    "sign (-1)^(k-1): {} (rejected: beta(2k) is positive)",
                    decimal_f64(p.value, cfg.digits)
                );
            }
            s
        }
    };
    Ok(Output::checked(body, agrees))
}

fn number_body(label: &str, field: &str, n: usize, v: &Rational, cfg: &CliConfig) -> String {
    match cfg.format {
        Format::Json => json_line(&json!({ "n": n, field: v })),
        Format::Csv => format!("n,{field}\n{n},{v}\n"),
        Format::Text => format!("{label} = {v}\n"),
    }
}

fn poly_body(label: &str, n: usize, p: &RationalPolynomial, cfg: &CliConfig) -> String {
    match cfg.format {
        Format::Json => json_line(&json!({ "n": n, "coefficients": p, "polynomial": p.to_string() })),
        Format::Csv => {
            let mut s = String::from("n,power,coefficient\n");
            for (i, c) in p.coeffs().iter().enumerate() {
                let _ = writeln!(s, "{n},{i},{c}");
            }
            s
        }
        Format::Text => format!("{label}(x) = {p}\n"),
    }
}

pub(crate) fn euler(n: usize, poly: bool, cfg: &CliConfig) -> Output {
    let body = if poly {
        poly_body(&format!("E_{n}"), n, &euler_polynomial(n), cfg)
    } else {
        number_body(&format!("E_{n}"), "euler_number", n, &euler_number(n), cfg)
    };
    Output::ok(body)
}

pub(crate) fn bernoulli(n: usize, poly: bool, chi4: bool, cfg: &CliConfig) -> crate::Result<Output> {
    let body = if poly {
        poly_body(&format!("B_{n}"), n, &bernoulli_polynomial(n), cfg)
    } else if chi4 {
        let v = generalized_bernoulli_chi4(n)?;
        number_body(&format!("B_({n},chi4)"), "bernoulli_chi4", n, &v, cfg)
    } else {
        number_body(&format!("B_{n}"), "bernoulli_number", n, &bernoulli_number(n), cfg)
    };
    Ok(Output::ok(body))
}

pub(crate) fn verify(nmax: usize, trials: usize, cfg: &CliConfig) -> Output {
    let report = run_identity_suite(nmax, trials, cfg.seed);
    let body = match cfg.format {
        Format::Json => json_line(&report),
        Format::Csv => {
            let mut s = String::from("identity_id,instances,passed,first_failure_n,first_failure_x\n");
            for r in &report.identities {
                let (n, x) = match &r.first_failure {
                    Some(f) => (f.n.to_string(), f.x.as_ref().map(|x| x.to_string()).unwrap_or_default()),
                    None => (String::new(), String::new()),
                };
                let _ = writeln!(s, "{},{},{},{},{}", r.identity_id.as_str(), r.instances, r.passed, n, x);
            }
            s
        }
        Format::Text => {
            let mut s = format!("identity suite: nmax={} trials={} seed={}\n", nmax, trials, cfg.seed);
            for r in &report.identities {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let _ = write!(
                    s,
                    "  {:<26} {status} {:>7} instances  {}",
                    r.identity_id.as_str(),
                    r.instances,
                    r.identity_id.description()
                );
                if let Some(f) = &r.first_failure {
                    let _ = write!(s, "  [first failure n={}", f.n);
                    if let Some(x) = &f.x {
                        let _ = write!(s, " x={x}");
                    }
                    s.push(']');
                }
                s.push('\n');
            }
            let _ = writeln!(
                s,
                "{}",
                if report.all_passed() {
                    "all identities hold".to_string()
                } else {
                    format!("{} identities failed", report.failures())
                }
            );
            s
        }
    };
    Output::checked(body, report.all_passed())
}

pub(crate) fn trace(t: &PartialSumTrace, cfg: &CliConfig) -> Output {
    let body = match cfg.format {
        Format::Json => json_line(t),
        Format::Csv => t.to_csv(),
        Format::Text => {
            let mut s = format!("{} partial sums, k={}, target {:e}\n", t.family, t.k, t.target.to_f64());
            for (n, v) in &t.entries {
                let _ = writeln!(s, "{n:>10}  {:e}", v.to_f64());
            }
            s
        }
    };
    Output::ok(body)
}

pub(crate) fn aux(is_j: bool, k: u32, m: u32, cfg: &CliConfig) -> crate::Result<Output> {
    let (name, closed, spec): (&str, PiPowerValue, IntegrandSpec) = if is_j {
        ("J", aux_integral_j_closed(k, m), IntegrandSpec::AuxJ { k, m })
    } else {
        ("I", aux_integral_i_closed(k, m), IntegrandSpec::AuxI { k, m })
    };
    let numeric = aux_integral_numeric(spec, cfg.tol)?;
    let report = closed.report(cfg.digits);
    let diff = (numeric.value - closed.to_f64()).abs();
    let agrees = diff <= cfg.tol + 4.0 * f64::EPSILON * closed.to_f64().abs();
    let body = match cfg.format {
        Format::Json => json_line(&json!({
            "family": name,
            "k": k,
            "m": m,
            "closed_form": report,
            "numeric": numeric,
            "abs_difference": diff,
            "agrees": agrees,
        })),
        Format::Csv => format!(
            "family,k,m,coeff,pi_power,decimal,numeric,abs_error_estimate,n_evals,abs_difference,agrees\n\
             {name},{k},{m},{},{},{},{:e},{:e},{},{:e},{agrees}\n",
            report.coeff, report.pi_power, report.decimal, numeric.value, numeric.abs_error_estimate, numeric.n_evals,
            diff
        ),
        Format::Text => {
            let verdict = if agrees { "agrees" } else { "DISAGREES" };
            format!(
                "{name}({k},{m}) = {closed} = {}\nquadrature: {:e} (abs error estimate {:.3e}, {} evaluations)\n\
                 |difference| {:.3e} ({verdict})\n",
                report.decimal, numeric.value, numeric.abs_error_estimate, numeric.n_evals, diff
            )
        }
    };
    Ok(Output::checked(body, agrees))
}
