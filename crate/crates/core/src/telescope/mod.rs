//! Partial sums of `Σ(−1)^m I*(k,m)` and `Σ(−1)^m J(k−1,m)`, the modified
//! integrand `E*_{2k}`, and the endpoint-extended functions `f`, `g`, `h`.

mod extended;

pub use extended::{e_star, extended_eval, Endpoint, ExtendedFn, ExtendedFunction, ExtendedFunctionSpec};

use std::f64::consts::PI;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::eulerpoly::{euler_number, euler_polynomial, generalized_bernoulli_chi4};
use crate::exact::{factorial, Rational};
use crate::hpreal::{pi_fixed, pow10, div_round_half_even, Fixed, HighPrecisionReal};
use crate::par::Execution;
use crate::quadrature::{
    horner, integrate, oscillation_cap, BetaEvenIntegrand, QuadratureOptions, QuadratureResult,
};

/// Decimal places carried by trace entries.
pub const TRACE_DIGITS: u32 = 40;

/// `E_{2k}/2^{2k+2}` for `m = 0`, zero otherwise: `I(k,m) − I*(k,m)`.
pub fn correction_term(k: u32, m: u32) -> Rational {
    if m != 0 {
        return Rational::zero();
    }
    euler_number(2 * k as usize) / Rational::pow2(2 * k as i64 + 2)
}

/// The same `m = 0` correction written as `−B_{2k+1,χ₄}/((2k+1)·2^{2k+1})`.
pub fn correction_term_via_bernoulli(k: u32) -> Rational {
    let n = 2 * k as usize + 1;
    let b = generalized_bernoulli_chi4(n).expect("n >= 1");
    -b / (Rational::from_integer(n as i64) * Rational::pow2(n as i64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    IStar,
    J,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::IStar => "I_star",
            Family::J => "J",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sampled partial sums `S_n` of one telescoping family, with the limit they approach.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSumTrace {
    pub family: Family,
    pub k: u32,
    pub entries: Vec<(u64, HighPrecisionReal)>,
    pub target: HighPrecisionReal,
}

impl PartialSumTrace {
    pub fn last(&self) -> &(u64, HighPrecisionReal) {
        self.entries.last().expect("trace has entries")
    }

    pub fn at(&self, n: u64) -> Option<&HighPrecisionReal> {
        self.entries.iter().find(|(m, _)| *m == n).map(|(_, v)| v)
    }

    /// CSV with header `family,k,N,S_N,target`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("family,k,N,S_N,target\n");
        let target = self.target.to_f64();
        for (n, v) in &self.entries {
            let _ = writeln!(s, "{},{},{},{:e},{:e}", self.family, self.k, n, v.to_f64(), target);
        }
        s
    }
}

struct Entries<'a>(&'a [(u64, HighPrecisionReal)]);

impl Serialize for Entries<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (n, v) in self.0 {
            seq.serialize_element(&(n, v.to_f64()))?;
        }
        seq.end()
    }
}

impl Serialize for PartialSumTrace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PartialSumTrace", 4)?;
        st.serialize_field("family", self.family.as_str())?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("target", &self.target.to_f64())?;
        st.serialize_field("entries", &Entries(&self.entries))?;
        st.end()
    }
}

/// `0..=9`, then powers of ten, then `n_max` itself; all capped at `n_max`.
pub fn sample_points(n_max: u64) -> Vec<u64> {
    let mut pts: Vec<u64> = (0..=9.min(n_max)).collect();
    let mut p = 10u64;
    while p <= n_max {
        pts.push(p);
        p = p.saturating_mul(10);
    }
    if pts.last() != Some(&n_max) {
        pts.push(n_max);
    }
    pts
}

/// Mantissas at `scale` of `Σ_{m≤n} (−1)^m/(2m+1)^e` for each sampled `n`.
fn alternating_odd_sums(e: u32, samples: &[u64], scale: u32) -> Vec<BigInt> {
    let one = pow10(scale);
    let mut acc = BigInt::from(0);
    let mut out = Vec::with_capacity(samples.len());
    let mut next = samples.iter().peekable();
    let last = *samples.last().expect("samples");
    for m in 0..=last {
        let t = div_round_half_even(&one, &num_traits::pow(BigInt::from(2 * m + 1), e as usize));
        if m % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
        while next.peek() == Some(&&m) {
            out.push(acc.clone());
            next.next();
        }
    }
    out
}

/// Partial sums of `Σ(−1)^m I*(k,m)` from the closed form of `I(k,m)`:
/// `S_n = Σ_{m≤n} (−1)^m I(k,m) − correction_term(k,0)`, which tends to 0.
pub fn partial_sum_i_star(k: u32, n_max: u64) -> PartialSumTrace {
    let e = 2 * k + 1;
    let work = TRACE_DIGITS + 10;
    let samples = sample_points(n_max);
    let sums = alternating_odd_sums(e, &samples, work);
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let scale = Rational::from_integer(factorial(2 * k as u64) * sign);
    let pi_pow = pi_fixed(work).powi(e);
    let corr = Fixed::from_rational(&correction_term(k, 0), work);
    let entries = samples
        .iter()
        .zip(sums)
        .map(|(&n, a)| {
            let v = Fixed::from_mantissa(a, work).mul_rational(&scale).div(&pi_pow).sub(&corr);
            (n, HighPrecisionReal::new(v, TRACE_DIGITS))
        })
        .collect();
    PartialSumTrace {
        family: Family::IStar,
        k,
        entries,
        target: HighPrecisionReal::new(Fixed::zero(TRACE_DIGITS), TRACE_DIGITS),
    }
}

/// `∫₀^{1/2} E_{2k−1}(t)·sec(πt)/2 dt` by quadrature.
pub fn j_sum_target(k: u32, tol: f64, exec: Execution) -> Result<QuadratureResult> {
    let f = BetaEvenIntegrand::new(k)?;
    let r = integrate(|t| f.eval(t), 0.0, 0.5, &QuadratureOptions::new(2.0 * tol).with_exec(exec))?;
    Ok(QuadratureResult { value: 0.5 * r.value, abs_error_estimate: 0.5 * r.abs_error_estimate, n_evals: r.n_evals })
}

/// Partial sums of `Σ(−1)^m J(k−1,m)` from the closed form, with the
/// quadrature value of `∫₀^{1/2} E_{2k−1}(t)sec(πt)/2 dt` as target.
pub fn partial_sum_j(k: u32, n_max: u64, tol: f64) -> Result<PartialSumTrace> {
    if k == 0 {
        return Err(Error::InvalidArgument("partial_sum_J needs k >= 1".into()));
    }
    let target = j_sum_target(k, tol, Execution::default())?;
    let e = 2 * k;
    let work = TRACE_DIGITS + 10;
    let samples = sample_points(n_max);
    let sums = alternating_odd_sums(e, &samples, work);
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let scale = Rational::from_integer(factorial(2 * k as u64 - 1) * sign);
    let pi_pow = pi_fixed(work).powi(e);
    let entries = samples
        .iter()
        .zip(sums)
        .map(|(&n, a)| {
            let v = Fixed::from_mantissa(a, work).mul_rational(&scale).div(&pi_pow);
            (n, HighPrecisionReal::new(v, TRACE_DIGITS))
        })
        .collect();
    let target_digits = (-target.abs_error_estimate.max(tol).log10()).floor().clamp(1.0, 15.0) as u32;
    Ok(PartialSumTrace {
        family: Family::J,
        k,
        entries,
        target: HighPrecisionReal::new(Fixed::from_f64(target.value, 20), target_digits),
    })
}

/// Numerical `I*(k,m) = ∫₀^{1/2} E*_{2k}(t)·sin((2m+1)πt) dt`.
pub fn aux_integral_i_star_numeric(k: u32, m: u32, tol: f64) -> Result<QuadratureResult> {
    let c = euler_polynomial(2 * k as usize).to_f64_coeffs();
    let amp = extended::star_amplitude(k).to_f64();
    let w = (2 * m + 1) as f64 * PI;
    let opts = QuadratureOptions::new(tol).with_max_panel_width(oscillation_cap(m));
    integrate(|t| (horner(&c, t) - amp * (PI * t).sin()) * (w * t).sin(), 0.0, 0.5, &opts)
}

/// `R·|∫₀^{1/2} g(t) sin(Rt) dt|` (for `g`) or `R·|∫₀^{1/2} h(t) cos(Rt) dt|`
/// (for `h`) with `R = (2N+2)π`. Both are bounded in `N` by integration by parts.
pub fn oscillatory_decay(name: ExtendedFn, k: u32, n: u64, tol: f64) -> Result<f64> {
    let f = ExtendedFunction::new(ExtendedFunctionSpec { name, k })?;
    let r = (2 * n + 2) as f64 * PI;
    let trig: fn(f64) -> f64 = match name {
        ExtendedFn::G => f64::sin,
        ExtendedFn::H => f64::cos,
        ExtendedFn::F => {
            return Err(Error::InvalidArgument("oscillatory decay is defined for g and h".into()))
        }
    };
    let opts = QuadratureOptions::new(tol).with_max_panel_width(0.5 * PI / r);
    let q = integrate(|t| f.eval(t) * trig(r * t), 0.0, 0.5, &opts)?;
    Ok(r * q.value.abs())
}

#[cfg(test)]
mod tests;
