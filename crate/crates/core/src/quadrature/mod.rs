//! `β(2k)` from its integral representation over `[0, 1/2]`, and the
//! auxiliary integrals `I(k,m)` and `J(k,m)` in closed and numerical form.

mod adaptive;
mod removable;

pub use adaptive::{integrate, QuadratureOptions, QuadratureResult};
pub use removable::{Jet, RemovableQuotient, JET_ORDER};

use std::f64::consts::PI;

use crate::betavalues::PiPowerValue;
use crate::error::{Error, Result};
use crate::eulerpoly::euler_polynomial;
use crate::exact::{factorial, Rational, RationalPolynomial};
use crate::par::Execution;

/// Half-width of the window around `t = 1/2` where the Taylor quotient replaces
/// direct division.
pub const SINGULAR_WINDOW: f64 = 1e-3;

/// Smallest tolerance accepted for double-precision quadrature.
pub const MIN_TOL: f64 = 1e-13;

pub(crate) fn check_unit_half(name: &'static str, t: f64) -> Result<()> {
    if (0.0..=0.5).contains(&t) {
        Ok(())
    } else {
        Err(Error::Domain { name, value: t })
    }
}

/// Which integral over `[0, 1/2]` to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegrandSpec {
    /// `E_{2k−1}(t)·sec(πt)`, `k ≥ 1`.
    BetaEven { k: u32 },
    /// `E_{2k}(t)·sin((2m+1)πt)`.
    AuxI { k: u32, m: u32 },
    /// `E_{2k+1}(t)·cos((2m+1)πt)`.
    AuxJ { k: u32, m: u32 },
}

/// `E_{2k−1}(t)/cos(πt)` with the removable singularity at `t = 1/2` repaired.
#[derive(Debug, Clone)]
pub struct BetaEvenIntegrand {
    poly: Vec<f64>,
    near_half: RemovableQuotient,
    at_half: f64,
}

impl BetaEvenIntegrand {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("beta_even needs k >= 1".into()));
        }
        let n = 2 * k as usize - 1;
        let e = euler_polynomial(n);
        let half = Rational::new(1, 2);
        let near_half = RemovableQuotient::new(
            &Jet::of_polynomial(&e, &half),
            &Jet::of_cos(&Rational::one(), 1, 1),
        )?;
        // −(2k−1)·E_{2k−2}(1/2)/π
        let at_half = -(n as f64) * euler_polynomial(n - 1).eval(&half).to_f64() / PI;
        Ok(BetaEvenIntegrand { poly: e.to_f64_coeffs(), near_half, at_half })
    }

    /// Value at `t`; the caller guarantees `0 ≤ t ≤ 1/2`.
    pub fn eval(&self, t: f64) -> f64 {
        let u = t - 0.5;
        if u == 0.0 {
            self.at_half
        } else if u.abs() < SINGULAR_WINDOW {
            self.near_half.eval(u)
        } else {
            horner(&self.poly, t) / (PI * t).cos()
        }
    }

    pub fn endpoint_value(&self) -> f64 {
        self.at_half
    }
}

pub(crate) fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * x + a)
}

/// `E_{2k−1}(t)·sec(πt)` on `[0, 1/2]`, continuous at `t = 1/2`.
pub fn beta_even_integrand(k: u32, t: f64) -> Result<f64> {
    check_unit_half("t", t)?;
    Ok(BetaEvenIntegrand::new(k)?.eval(t))
}

/// Sign convention for the prefactor of the `β(2k)` integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    /// `(−1)^k`, the sign the derivation through `J(k−1, m)` produces.
    Derived,
    /// `(−1)^{k−1}`, as the formula is commonly printed.
    Printed,
}

/// `(±1)·π^{2k}/(2·(2k−1)!)`.
pub fn beta_even_prefactor(k: u32, sign: SignConvention) -> f64 {
    let s = match (sign, k.is_multiple_of(2)) {
        (SignConvention::Derived, true) | (SignConvention::Printed, false) => 1.0,
        _ => -1.0,
    };
    s * PI.powi(2 * k as i32) / (2.0 * Rational::from_integer(factorial(2 * k as u64 - 1)).to_f64())
}

/// `β(2k) = (−1)^k π^{2k}/(2(2k−1)!) · ∫₀^{1/2} E_{2k−1}(t) sec(πt) dt`.
pub fn beta_even_quadrature(k: u32, tol: f64) -> Result<QuadratureResult> {
    beta_even_quadrature_with(k, tol, SignConvention::Derived, Execution::default())
}

pub fn beta_even_quadrature_with(
    k: u32,
    tol: f64,
    sign: SignConvention,
    exec: Execution,
) -> Result<QuadratureResult> {
    if tol.is_nan() || tol < MIN_TOL {
        return Err(Error::InvalidArgument(format!("tol must be >= {MIN_TOL:e}, got {tol:e}")));
    }
    let integrand = BetaEvenIntegrand::new(k)?;
    let pre = beta_even_prefactor(k, sign);
    let opts = QuadratureOptions::new(tol / pre.abs()).with_exec(exec);
    let r = integrate(|t| integrand.eval(t), 0.0, 0.5, &opts)?;
    Ok(QuadratureResult {
        value: pre * r.value,
        abs_error_estimate: pre.abs() * r.abs_error_estimate,
        n_evals: r.n_evals,
    })
}

fn odd_power(m: u32, e: u32) -> Rational {
    Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(2 * m as u64 + 1), e as usize))
}

fn parity(k: u32) -> Rational {
    Rational::from_integer(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// `I(k,m) = (−1)^k (2k)! / ((2m+1)^{2k+1} π^{2k+1})`.
pub fn aux_integral_i_closed(k: u32, m: u32) -> PiPowerValue {
    let coeff = parity(k) * Rational::from_integer(factorial(2 * k as u64)) / odd_power(m, 2 * k + 1);
    PiPowerValue::new(coeff, -(2 * k as i64 + 1))
}

/// `J(k,m) = (−1)^{k+1} (2k+1)! / ((2m+1)^{2k+2} π^{2k+2})`.
pub fn aux_integral_j_closed(k: u32, m: u32) -> PiPowerValue {
    let coeff =
        -parity(k) * Rational::from_integer(factorial(2 * k as u64 + 1)) / odd_power(m, 2 * k + 2);
    PiPowerValue::new(coeff, -(2 * k as i64 + 2))
}

/// Panel width cap giving at most a quarter period of `sin((2m+1)πt)` per panel.
pub fn oscillation_cap(m: u32) -> f64 {
    0.25 / (2 * m + 1) as f64
}

/// Numerical value of `I(k,m)` or `J(k,m)`.
pub fn aux_integral_numeric(spec: IntegrandSpec, tol: f64) -> Result<QuadratureResult> {
    aux_integral_numeric_with(spec, tol, Execution::default())
}

pub fn aux_integral_numeric_with(spec: IntegrandSpec, tol: f64, exec: Execution) -> Result<QuadratureResult> {
    let (poly, m, use_sin): (RationalPolynomial, u32, bool) = match spec {
        IntegrandSpec::AuxI { k, m } => (euler_polynomial(2 * k as usize), m, true),
        IntegrandSpec::AuxJ { k, m } => (euler_polynomial(2 * k as usize + 1), m, false),
        IntegrandSpec::BetaEven { .. } => {
            return Err(Error::InvalidArgument(
                "aux_integral_numeric takes aux_I or aux_J; use beta_even_quadrature".into(),
            ))
        }
    };
    let c = poly.to_f64_coeffs();
    let w = (2 * m + 1) as f64 * PI;
    let opts = QuadratureOptions::new(tol)
        .with_max_panel_width(oscillation_cap(m))
        .with_exec(exec);
    if use_sin {
        integrate(|t| horner(&c, t) * (w * t).sin(), 0.0, 0.5, &opts)
    } else {
        integrate(|t| horner(&c, t) * (w * t).cos(), 0.0, 0.5, &opts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrand_examples() {
        assert_eq!(beta_even_integrand(1, 0.0).unwrap(), -0.5);
        assert!((beta_even_integrand(1, 0.5).unwrap() + 1.0 / PI).abs() < 1e-16);
        assert!((beta_even_integrand(2, 0.5).unwrap() - 3.0 / (4.0 * PI)).abs() < 1e-15);
        assert!(matches!(beta_even_integrand(1, 0.6), Err(Error::Domain { .. })));
        assert!(beta_even_integrand(1, -1e-9).is_err());
        assert!(beta_even_integrand(0, 0.1).is_err());
    }

    #[test]
    fn integrand_is_continuous_at_half() {
        for k in 1..=4 {
            let f = BetaEvenIntegrand::new(k).unwrap();
            let v = f.endpoint_value();
            for j in 3..=7 {
                let d = 10f64.powi(-j);
                // the integrand is even about 1/2, so the gap shrinks like d²
                assert!((f.eval(0.5 - d) - v).abs() <= 10.0 * d * d + 1e-13, "k={k} j={j}");
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(aux_integral_i_closed(0, 0), PiPowerValue::new(Rational::one(), -1));
        assert_eq!(aux_integral_i_closed(0, 1), PiPowerValue::new(Rational::new(1, 3), -1));
        assert_eq!(aux_integral_i_closed(1, 0), PiPowerValue::new(Rational::from_integer(-2), -3));
        assert_eq!(aux_integral_i_closed(1, 1), PiPowerValue::new(Rational::new(-2, 27), -3));
        assert_eq!(aux_integral_j_closed(0, 0), PiPowerValue::new(Rational::from_integer(-1), -2));
        assert_eq!(aux_integral_j_closed(0, 1), PiPowerValue::new(Rational::new(-1, 9), -2));
        assert_eq!(aux_integral_j_closed(1, 0), PiPowerValue::new(Rational::from_integer(6), -4));
    }

    #[test]
    fn numeric_examples() {
        let i00 = aux_integral_numeric(IntegrandSpec::AuxI { k: 0, m: 0 }, 1e-10).unwrap();
        assert!((i00.value - 1.0 / PI).abs() < 1e-10);
        let j00 = aux_integral_numeric(IntegrandSpec::AuxJ { k: 0, m: 0 }, 1e-10).unwrap();
        assert!((j00.value + 1.0 / (PI * PI)).abs() < 1e-10);
        let i11 = aux_integral_numeric(IntegrandSpec::AuxI { k: 1, m: 1 }, 1e-10).unwrap();
        assert!((i11.value + 2.0 / (27.0 * PI.powi(3))).abs() < 1e-10);
        assert!(aux_integral_numeric(IntegrandSpec::BetaEven { k: 1 }, 1e-8).is_err());
    }

    #[test]
    fn catalan_and_printed_sign() {
        let r = beta_even_quadrature(1, 1e-8).unwrap();
        assert!((r.value - 0.915_965_594_177_219).abs() < 1e-8);
        assert!(r.abs_error_estimate <= 1e-8);
        let p = beta_even_quadrature_with(1, 1e-8, SignConvention::Printed, Execution::Sequential).unwrap();
        assert_eq!(p.value, -r.value);
        assert!(beta_even_quadrature(1, 1e-14).is_err());
    }
}
