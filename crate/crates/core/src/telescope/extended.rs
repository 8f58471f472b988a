use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::eulerpoly::{euler_number, euler_polynomial};
use crate::exact::Rational;
use crate::quadrature::{check_unit_half, horner, Jet, RemovableQuotient, SINGULAR_WINDOW};

/// `E_{2k}/2^{2k}`, the amplitude subtracted in `E*_{2k}`.
pub(crate) fn star_amplitude(k: u32) -> Rational {
    euler_number(2 * k as usize) / Rational::pow2(2 * k as i64)
}

/// `E*_{2k}(t) = E_{2k}(t) − (E_{2k}/2^{2k})·sin(πt)`.
pub fn e_star(k: u32, t: f64) -> Result<f64> {
    check_unit_half("t", t)?;
    let e = euler_polynomial(2 * k as usize);
    Ok(e.eval_f64(t) - star_amplitude(k).to_f64() * (PI * t).sin())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtendedFn {
    /// `E*_{2k}(t)/sin(2πt)`, extended to both `t = 0` and `t = 1/2`.
    F,
    /// `E*_{2k}(t)/cos(πt)`, extended to `t = 1/2`.
    G,
    /// `E_{2k−1}(t)/(2cos(πt))`, extended to `t = 1/2`.
    H,
}

impl fmt::Display for ExtendedFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtendedFn::F => "f",
            ExtendedFn::G => "g",
            ExtendedFn::H => "h",
        })
    }
}

impl FromStr for ExtendedFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" => Ok(ExtendedFn::F),
            "g" => Ok(ExtendedFn::G),
            "h" => Ok(ExtendedFn::H),
            _ => Err(Error::InvalidArgument(format!("unknown extended function {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtendedFunctionSpec {
    pub name: ExtendedFn,
    pub k: u32,
}

/// A removable endpoint: where it sits and the value declared there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Endpoint {
    pub t: f64,
    pub value: f64,
}

/// One of `f`, `g`, `h` with its endpoint values precomputed from exact data.
#[derive(Debug, Clone)]
pub struct ExtendedFunction {
    spec: ExtendedFunctionSpec,
    numer: Vec<f64>,
    amplitude: f64,
    at_zero: Option<(RemovableQuotient, f64)>,
    at_half: (RemovableQuotient, f64),
}

impl ExtendedFunction {
    pub fn new(spec: ExtendedFunctionSpec) -> Result<Self> {
        let k = spec.k;
        let half = Rational::new(1, 2);
        let zero = Rational::zero();
        let one = Rational::one();
        match spec.name {
            ExtendedFn::F | ExtendedFn::G => {
                let e = euler_polynomial(2 * k as usize);
                let c = star_amplitude(k);
                let num_half = Jet::of_polynomial(&e, &half).sub(&Jet::of_sin(&c, 1, 1));
                let (den_half, at_zero) = if spec.name == ExtendedFn::F {
                    if k == 0 {
                        return Err(Error::NotRemovable(
                            "f = E*_0/sin(2πt) has a pole at t = 0 (E*_0(0) = 1)".into(),
                        ));
                    }
                    let num0 = Jet::of_polynomial(&e, &zero).sub(&Jet::of_sin(&c, 1, 0));
                    let q0 = RemovableQuotient::new(&num0, &Jet::of_sin(&one, 2, 0))?;
                    // (2k·E_{2k−1}(0) − π·E_{2k}/2^{2k}) / (2π)
                    let e_prev0 = euler_polynomial(2 * k as usize - 1).eval(&zero).to_f64();
                    let v0 = (2.0 * k as f64 * e_prev0 - PI * c.to_f64()) / (2.0 * PI);
                    (Jet::of_sin(&one, 2, 2), Some((q0, v0)))
                } else {
                    (Jet::of_cos(&one, 1, 1), None)
                };
                let qh = RemovableQuotient::new(&num_half, &den_half)?;
                Ok(ExtendedFunction {
                    spec,
                    numer: e.to_f64_coeffs(),
                    amplitude: c.to_f64(),
                    at_zero,
                    at_half: (qh, 0.0),
                })
            }
            ExtendedFn::H => {
                if k == 0 {
                    return Err(Error::InvalidArgument("h needs k >= 1".into()));
                }
                let n = 2 * k as usize - 1;
                let e = euler_polynomial(n);
                let qh = RemovableQuotient::new(
                    &Jet::of_polynomial(&e, &half),
                    &Jet::of_cos(&Rational::from_integer(2), 1, 1),
                )?;
                // (2k−1)·E_{2k−2}(1/2) / (−2π)
                let vh = n as f64 * euler_polynomial(n - 1).eval(&half).to_f64() / (-2.0 * PI);
                Ok(ExtendedFunction { spec, numer: e.to_f64_coeffs(), amplitude: 0.0, at_zero: None, at_half: (qh, vh) })
            }
        }
    }

    pub fn spec(&self) -> ExtendedFunctionSpec {
        self.spec
    }

    /// The singular endpoints with their declared values.
    pub fn endpoints(&self) -> Vec<Endpoint> {
        let mut v = Vec::new();
        if let Some((_, value)) = &self.at_zero {
            v.push(Endpoint { t: 0.0, value: *value });
        }
        v.push(Endpoint { t: 0.5, value: self.at_half.1 });
        v
    }

    fn direct(&self, t: f64) -> f64 {
        let p = horner(&self.numer, t);
        match self.spec.name {
            ExtendedFn::F => (p - self.amplitude * (PI * t).sin()) / (2.0 * PI * t).sin(),
            ExtendedFn::G => (p - self.amplitude * (PI * t).sin()) / (PI * t).cos(),
            ExtendedFn::H => p / (2.0 * (PI * t).cos()),
        }
    }

    /// Value at `t` (caller guarantees `0 ≤ t ≤ 1/2`).
    pub fn eval(&self, t: f64) -> f64 {
        if let Some((q, v)) = &self.at_zero {
            if t == 0.0 {
                return *v;
            }
            if t < SINGULAR_WINDOW {
                return q.eval(t);
            }
        }
        let u = t - 0.5;
        if u == 0.0 {
            self.at_half.1
        } else if u.abs() < SINGULAR_WINDOW {
            self.at_half.0.eval(u)
        } else {
            self.direct(t)
        }
    }
}

/// `f`, `g` or `h` at `t ∈ [0, 1/2]`, continuous at the singular endpoints.
pub fn extended_eval(spec: ExtendedFunctionSpec, t: f64) -> Result<f64> {
    check_unit_half("t", t)?;
    Ok(ExtendedFunction::new(spec)?.eval(t))
}
