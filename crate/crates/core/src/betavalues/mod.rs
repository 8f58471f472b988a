//! Exact `β(2k+1)`, the series oracle for `β(s)`, and rendering of `c·π^p`.

mod pipower;
mod series;

pub use pipower::{render_decimal, PiPowerReport, PiPowerValue};
pub use series::{
    accelerated_terms, acceleration_weights, beta_partial_sum, beta_series, beta_series_with,
    SeriesMethod, SeriesOptions, DEFAULT_MAX_TERMS, PLAIN_DIGITS_LIMIT,
};

pub use crate::hpreal::HighPrecisionReal;

use crate::eulerpoly::{bernoulli_table, euler_number};
use crate::exact::{factorial, Rational};

fn sign(even: bool) -> Rational {
    if even {
        Rational::one()
    } else {
        Rational::from_integer(-1)
    }
}

/// `β(2k+1) = (−1)^{k+1} (π/2)^{2k+1} B_{2k+1,χ₄} / (2k+1)!`.
pub fn beta_odd_exact(k: u32) -> PiPowerValue {
    let n = 2 * k as usize + 1;
    let b = bernoulli_table(n).generalized_chi4(n);
    let coeff = sign(k % 2 == 1) * b
        / (Rational::from_integer(factorial(n as u64)) * Rational::pow2(n as i64));
    PiPowerValue::new(coeff, n as i64)
}

/// `β(2k+1) = (−1)^k E_{2k} π^{2k+1} / (4^{k+1} (2k)!)`, through the Euler numbers.
pub fn beta_odd_exact_via_euler(k: u32) -> PiPowerValue {
    let n = 2 * k as usize;
    let coeff = sign(k.is_multiple_of(2)) * euler_number(n)
        / (Rational::pow2(2 * (k as i64 + 1)) * Rational::from_integer(factorial(n as u64)));
    PiPowerValue::new(coeff, n as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        let expect = [(1, 4, 1), (1, 32, 3), (5, 1536, 5), (61, 184320, 7)];
        for (k, &(p, q, pow)) in expect.iter().enumerate() {
            let v = beta_odd_exact(k as u32);
            assert_eq!(v, PiPowerValue::new(Rational::new(p, q), pow), "k={k}");
            assert_eq!(beta_odd_exact_via_euler(k as u32), v);
        }
    }

    #[test]
    fn positive_coefficients() {
        for k in 0..25 {
            assert!(beta_odd_exact(k).coeff().is_positive());
        }
    }
}
