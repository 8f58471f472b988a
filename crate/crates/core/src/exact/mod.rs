//! Exact rational and polynomial arithmetic.

mod poly;
mod rational;
pub mod series;

pub use poly::RationalPolynomial;
pub use rational::Rational;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Exact `C(n, k)` by the multiplicative formula; every partial product is an integer.
pub fn binomial(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::BinomialRange { n, k });
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Ok(acc)
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Exact value of `p` at `x`.
pub fn poly_eval(p: &RationalPolynomial, x: &Rational) -> Rational {
    p.eval(x)
}

pub fn poly_derivative(p: &RationalPolynomial) -> RationalPolynomial {
    p.derivative()
}

pub fn poly_compose_affine(p: &RationalPolynomial, a: &Rational, b: &Rational) -> RationalPolynomial {
    p.compose_affine(a, b)
}
