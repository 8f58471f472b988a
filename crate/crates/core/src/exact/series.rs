//! Truncated formal power series with exact coefficients.
//!
//! A series is a `Vec<Rational>` of its first `len` coefficients.

use super::{factorial, Rational};

/// First `len` coefficients of `e^{a t}`.
pub fn exp(a: &Rational, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|j| a.pow(j as i32) / Rational::from_integer(factorial(j as u64)))
        .collect()
}

pub fn add(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    let n = p.len().max(q.len());
    (0..n)
        .map(|i| {
            let a = p.get(i).cloned().unwrap_or_default();
            let b = q.get(i).cloned().unwrap_or_default();
            a + b
        })
        .collect()
}

pub fn scale(p: &[Rational], c: &Rational) -> Vec<Rational> {
    p.iter().map(|a| a * c).collect()
}

/// Product truncated to `len` terms.
pub fn mul(p: &[Rational], q: &[Rational], len: usize) -> Vec<Rational> {
    (0..len)
        .map(|n| {
            (0..=n)
                .filter_map(|i| Some(p.get(i)? * q.get(n - i)?))
                .sum()
        })
        .collect()
}

/// Quotient `p / q` truncated to `len` terms. `q[0]` must be nonzero.
pub fn div(p: &[Rational], q: &[Rational], len: usize) -> Vec<Rational> {
    assert!(!q[0].is_zero(), "series division needs a unit constant term");
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = p.get(n).cloned().unwrap_or_default();
        for j in 1..=n {
            if let Some(qj) = q.get(j) {
                acc = acc - qj * &out[n - j];
            }
        }
        out.push(acc / &q[0]);
    }
    out
}

/// Drops the first `k` coefficients (division by `t^k`); they must all be zero.
pub fn shift_down(p: &[Rational], k: usize) -> Vec<Rational> {
    assert!(p.iter().take(k).all(Rational::is_zero));
    p.iter().skip(k).cloned().collect()
}
