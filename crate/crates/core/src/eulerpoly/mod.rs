//! Euler numbers and polynomials, Bernoulli numbers and polynomials, and the
//! generalized Bernoulli numbers `B_{n,χ₄}` of the character mod 4.

mod suite;
mod tables;

pub use suite::{
    run_identity_suite, run_identity_suite_with, FirstFailure, IdentityId, IdentityResult, Report,
    SuiteTables,
};
pub use tables::{bernoulli_table, euler_table, BernoulliTable, EulerTable};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{factorial, series, Rational, RationalPolynomial};
use crate::hpreal::{Fixed, HighPrecisionReal};

/// `E_n(x)`.
pub fn euler_polynomial(n: usize) -> RationalPolynomial {
    euler_table(n).polynomial(n).clone()
}

/// `E_n`; always an integer, zero for odd `n`.
pub fn euler_number(n: usize) -> Rational {
    euler_table(n).number(n).clone()
}

pub fn bernoulli_polynomial(n: usize) -> RationalPolynomial {
    bernoulli_table(n).polynomial(n).clone()
}

/// `B_n = B_n(0)` with `B_1 = −1/2`.
pub fn bernoulli_number(n: usize) -> Rational {
    bernoulli_table(n).number(n).clone()
}

/// `B_{n,χ₄} = 4^{n−1}·(B_n(1/4) − B_n(3/4))`; zero for even `n`.
pub fn generalized_bernoulli_chi4(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidArgument("B_{n,chi4} needs n >= 1".into()));
    }
    Ok(bernoulli_table(n).generalized_chi4(n))
}

/// `B_{n,χ₄}` for `n = 0..len` read off the character-twisted generating function
/// `Σ_a χ₄(a)·t·e^{at}/(e^{4t} − 1) = t(e^t − e^{3t})/(e^{4t} − 1)`.
///
/// Independent of the Bernoulli-polynomial tables; used to cross-check them.
pub fn generalized_bernoulli_chi4_series(len: usize) -> Vec<Rational> {
    let n = len + 1;
    let num = series::add(
        &series::exp(&Rational::one(), n),
        &series::scale(&series::exp(&Rational::from_integer(3), n), &-Rational::one()),
    );
    let mut den = series::exp(&Rational::from_integer(4), n + 1);
    den[0] = Rational::zero();
    let den = series::shift_down(&den, 1);
    series::div(&num, &den, len)
        .into_iter()
        .enumerate()
        .map(|(k, c)| c * Rational::from_integer(factorial(k as u64)))
        .collect()
}

/// `|E_n/n! − c_n|`, where `c_n` is the `t^n` coefficient of `2e^t/(e^{2t}+1)`
/// obtained by fixed-point division of truncated exponential series at
/// `digits` decimal places.
pub fn gf_coefficient_check(n: usize, digits: u32) -> Result<HighPrecisionReal> {
    if digits < 10 {
        return Err(Error::InvalidArgument(format!("digits must be >= 10, got {digits}")));
    }
    let len = n + 1;
    let inv_fact: Vec<Fixed> = (0..len)
        .map(|j| Fixed::one(digits).div_int(&factorial(j as u64)))
        .collect();
    let numer: Vec<Fixed> = inv_fact.iter().map(|c| c.mul_int(&BigInt::from(2))).collect();
    let denom: Vec<Fixed> = inv_fact
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let v = c.mul_int(&(BigInt::from(1) << j));
            if j == 0 {
                v.add(&Fixed::one(digits))
            } else {
                v
            }
        })
        .collect();
    let mut coeffs: Vec<Fixed> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = numer[k].clone();
        for j in 1..=k {
            acc = acc.sub(&denom[j].mul(&coeffs[k - j]));
        }
        coeffs.push(acc.div(&denom[0]));
    }
    let exact = euler_number(n) / Rational::from_integer(factorial(n as u64));
    let diff = coeffs[n].sub(&Fixed::from_rational(&exact, digits)).abs();
    Ok(HighPrecisionReal::new(diff, digits))
}
