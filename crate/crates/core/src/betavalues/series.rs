//! The alternating series `β(s) = Σ_{m≥0} (−1)^m / (2m+1)^s` as an oracle.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::hpreal::{div_round_half_even, pow10, Fixed, HighPrecisionReal, GUARD_DIGITS};
use crate::par::{self, Execution};

/// Default cap on the number of series terms.
pub const DEFAULT_MAX_TERMS: u64 = 20_000_000;

/// Largest digit count the plain alternating sum is used for.
pub const PLAIN_DIGITS_LIMIT: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesMethod {
    /// Partial sum cut where the first omitted term is below half the target
    /// accuracy. Error bound: the first omitted term.
    Plain,
    /// Chebyshev-weighted acceleration for alternating series whose terms are
    /// moments of a positive measure on `[0,1]`. Error bound:
    /// `2·β(s)/(3+√8)^n ≤ 2/(3+√8)^n` after `n` terms.
    Accelerated,
}

impl SeriesMethod {
    /// Plain summation for `s ≥ 2` up to [`PLAIN_DIGITS_LIMIT`] digits, acceleration otherwise.
    pub fn for_request(s: u32, digits: u32) -> Self {
        if s >= 2 && digits <= PLAIN_DIGITS_LIMIT {
            SeriesMethod::Plain
        } else {
            SeriesMethod::Accelerated
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SeriesOptions {
    pub max_terms: u64,
    pub exec: Execution,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions { max_terms: DEFAULT_MAX_TERMS, exec: Execution::default() }
    }
}

fn odd_power(m: u64, s: u32) -> BigInt {
    num_traits::pow(BigInt::from(2 * m + 1), s as usize)
}

/// Mantissa of `Σ_{m=lo}^{hi-1} (−1)^m / (2m+1)^s` at `scale`, each term rounded once.
fn signed_term_sum(lo: u64, hi: u64, s: u32, one: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for m in lo..hi {
        let t = div_round_half_even(one, &odd_power(m, s));
        if m % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// Partial sum `Σ_{m=0}^{n} (−1)^m/(2m+1)^s` at `scale` places
/// (error at most `(n+1)/2` units in the last place).
pub fn beta_partial_sum(s: u32, n: u64, scale: u32) -> Fixed {
    Fixed::from_mantissa(signed_term_sum(0, n + 1, s, &pow10(scale)), scale)
}

fn ceil_log10(x: u64) -> u32 {
    (x.max(1) as f64).log10().ceil() as u32
}

/// Smallest `N` with `(2N+3)^s ≥ 2·10^digits`, i.e. the first omitted term of
/// `Σ_{m≤N}` is at most half of `10^(−digits)`.
fn plain_cutoff(s: u32, digits: u32) -> u64 {
    let target = pow10(digits) * 2u8;
    let guess = (2.0 * 10f64.powi(digits as i32)).powf(1.0 / s as f64);
    let mut n = (((guess - 3.0) / 2.0).floor().max(0.0)) as u64;
    n = n.saturating_sub(2);
    while odd_power(n + 1, s) < target {
        n += 1;
    }
    n
}

fn plain(s: u32, digits: u32, opts: &SeriesOptions) -> Result<HighPrecisionReal> {
    let n = plain_cutoff(s, digits);
    let terms = n + 1;
    if terms > opts.max_terms {
        return Err(Error::Budget(format!(
            "plain summation of beta({s}) to {digits} digits needs {terms} terms (cap {})",
            opts.max_terms
        )));
    }
    let work = digits + GUARD_DIGITS + ceil_log10(terms);
    let one = pow10(work);
    // Integer partial sums are exact, so any chunking gives the same total.
    const CHUNK: u64 = 1 << 14;
    let chunks = terms.div_ceil(CHUNK);
    let parts = par::map_range(opts.exec, 0, chunks, |c| {
        signed_term_sum(c * CHUNK, ((c + 1) * CHUNK).min(terms), s, &one)
    });
    let total: BigInt = parts.into_iter().sum();
    Ok(HighPrecisionReal::new(Fixed::from_mantissa(total, work), digits))
}

/// Term count for the accelerated sum: `2/(3+√8)^n ≤ 10^(−digits)/4`.
pub fn accelerated_terms(digits: u32) -> u64 {
    let rate = (3.0 + 8f64.sqrt()).ln();
    ((digits as f64 * std::f64::consts::LN_10 + 8f64.ln()) / rate).ceil() as u64
}

/// Chebyshev weights `(c_0..c_{n−1}, d)` with `β ≈ Σ (−1)^k c_k a_k / d`.
///
/// `d = T_n(3) = ((3+√8)^n + (3−√8)^n)/2` is an integer and so are the `c_k`.
pub fn acceleration_weights(n: u64) -> (Vec<BigInt>, BigInt) {
    let (mut t_prev, mut t) = (BigInt::one(), BigInt::from(3));
    if n == 0 {
        t = BigInt::one();
    }
    for _ in 1..n {
        let next = &t * 6u8 - &t_prev;
        t_prev = std::mem::replace(&mut t, next);
    }
    let d = t;
    let mut b = Rational::from_integer(-1);
    let mut c = Rational::from_integer(-d.clone());
    let nn = n as i64;
    let mut weights = Vec::with_capacity(n as usize);
    for k in 0..nn {
        c = &b - &c;
        assert!(c.is_integer(), "acceleration weight c_{k} is not an integer");
        weights.push(c.numer().clone());
        b = b * Rational::new(2 * (k + nn) * (k - nn), (2 * k + 1) * (k + 1));
    }
    (weights, d)
}

fn accelerated(s: u32, digits: u32, opts: &SeriesOptions) -> Result<HighPrecisionReal> {
    let n = accelerated_terms(digits);
    if n > opts.max_terms {
        return Err(Error::Budget(format!("accelerated sum needs {n} terms (cap {})", opts.max_terms)));
    }
    let work = digits + GUARD_DIGITS + ceil_log10(n);
    let one = pow10(work);
    let (weights, d) = acceleration_weights(n);
    // Each c_k·a_k is exact given the rounded a_k; |c_k| ≤ d keeps the
    // accumulated rounding below n/2 units after the final division.
    let terms = par::map_range(opts.exec, 0, n, |k| {
        &weights[k as usize] * div_round_half_even(&one, &odd_power(k, s))
    });
    let total: BigInt = terms.into_iter().sum();
    let mant = div_round_half_even(&total, &d);
    Ok(HighPrecisionReal::new(Fixed::from_mantissa(mant, work), digits))
}

/// `β(s)` to within `10^(−digits)`.
pub fn beta_series(s: u32, digits: u32) -> Result<HighPrecisionReal> {
    beta_series_with(s, digits, SeriesMethod::for_request(s, digits), &SeriesOptions::default())
}

pub fn beta_series_with(
    s: u32,
    digits: u32,
    method: SeriesMethod,
    opts: &SeriesOptions,
) -> Result<HighPrecisionReal> {
    if s == 0 {
        return Err(Error::InvalidArgument("beta_series needs s >= 1".into()));
    }
    if digits == 0 {
        return Err(Error::InvalidArgument("beta_series needs digits >= 1".into()));
    }
    match method {
        SeriesMethod::Plain => plain(s, digits, opts),
        SeriesMethod::Accelerated => accelerated(s, digits, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cutoff_is_minimal() {
        for (s, d) in [(2, 10), (3, 10), (4, 8), (5, 12)] {
            let n = plain_cutoff(s, d);
            let target = pow10(d) * 2u8;
            assert!(odd_power(n + 1, s) >= target);
            assert!(n == 0 || odd_power(n, s) < target);
        }
    }

    #[test]
    fn catalan_plain() {
        let v = beta_series(2, 10).unwrap();
        assert_eq!(v.to_decimal_string(), "0.9159655942");
    }

    #[test]
    fn leibniz_needs_acceleration() {
        assert_eq!(SeriesMethod::for_request(1, 10), SeriesMethod::Accelerated);
        let v = beta_series(1, 10).unwrap();
        assert_eq!(v.to_decimal_string(), "0.7853981634");
        let plain = beta_series_with(1, 10, SeriesMethod::Plain, &SeriesOptions::default());
        assert!(matches!(plain, Err(Error::Budget(_))));
    }

    #[test]
    fn weights_integral() {
        let (w, d) = acceleration_weights(10);
        assert_eq!(w.len(), 10);
        // T_10(3)
        assert_eq!(d, BigInt::from(22_619_537u64));
    }

    #[test]
    fn accelerated_matches_plain() {
        let opts = SeriesOptions::default();
        for s in [2, 3, 4] {
            let a = beta_series_with(s, 9, SeriesMethod::Accelerated, &opts).unwrap();
            let p = beta_series_with(s, 9, SeriesMethod::Plain, &opts).unwrap();
            assert!(a.abs_diff(&p).to_f64() < 2e-9);
        }
    }

    #[test]
    fn modes_agree_bitwise() {
        let seq = SeriesOptions { exec: Execution::Sequential, ..Default::default() };
        let par = SeriesOptions { exec: Execution::Parallel, ..Default::default() };
        let a = beta_series_with(2, 8, SeriesMethod::Plain, &seq).unwrap();
        let b = beta_series_with(2, 8, SeriesMethod::Plain, &par).unwrap();
        assert_eq!(a.value(), b.value());
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(beta_series(0, 5).is_err());
        assert!(beta_series(2, 0).is_err());
    }
}
