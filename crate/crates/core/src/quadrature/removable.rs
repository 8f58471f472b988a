//! Evaluation near removable singularities of `p(t)/q(t)` where both vanish.
//!
//! Numerator and denominator are expanded to order four about the singular
//! point `t0`; after cancelling the common factor `u = t − t0` the quotient of
//! the truncated expansions is evaluated. The constant terms are kept exact so
//! that "vanishes at `t0`" is checked, not assumed.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exact::{Rational, RationalPolynomial};

pub const JET_ORDER: usize = 4;

/// Taylor data about a point: exact constant term, `higher[j-1]` is the `u^j` coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    pub constant: Rational,
    pub higher: [f64; JET_ORDER],
}

/// `sin(qπ/2)` for integer `q`.
fn sin_quarter(q: i64) -> i64 {
    [0, 1, 0, -1][q.rem_euclid(4) as usize]
}

fn factorial_f64(j: usize) -> f64 {
    (1..=j).map(|i| i as f64).product()
}

impl Jet {
    /// Expansion of `p(t0 + u)`.
    pub fn of_polynomial(p: &RationalPolynomial, t0: &Rational) -> Jet {
        let shifted = p.compose_affine(&Rational::one(), t0);
        let mut higher = [0.0; JET_ORDER];
        for (j, h) in higher.iter_mut().enumerate() {
            *h = shifted.coeff(j + 1).to_f64();
        }
        Jet { constant: shifted.coeff(0), higher }
    }

    /// Expansion of `amp · sin(ω(t0 + u))` where `ω = freq·π` and `ω·t0 = quarter_turns·π/2`.
    pub fn of_sin(amp: &Rational, freq: i64, quarter_turns: i64) -> Jet {
        let w = freq as f64 * PI;
        let a = amp.to_f64();
        let mut higher = [0.0; JET_ORDER];
        for (i, h) in higher.iter_mut().enumerate() {
            let j = i + 1;
            *h = a * w.powi(j as i32) / factorial_f64(j) * sin_quarter(quarter_turns + j as i64) as f64;
        }
        Jet { constant: amp * Rational::from_integer(sin_quarter(quarter_turns)), higher }
    }

    /// Expansion of `amp · cos(ω(t0 + u))`, same conventions as [`Jet::of_sin`].
    pub fn of_cos(amp: &Rational, freq: i64, quarter_turns: i64) -> Jet {
        Jet::of_sin(amp, freq, quarter_turns + 1)
    }

    pub fn sub(&self, other: &Jet) -> Jet {
        let mut higher = self.higher;
        for (h, o) in higher.iter_mut().zip(other.higher) {
            *h -= o;
        }
        Jet { constant: &self.constant - &other.constant, higher }
    }
}

/// Quotient of two jets with simple zeros at the expansion point.
#[derive(Debug, Clone, PartialEq)]
pub struct RemovableQuotient {
    num: [f64; JET_ORDER],
    den: [f64; JET_ORDER],
}

impl RemovableQuotient {
    pub fn new(num: &Jet, den: &Jet) -> Result<Self> {
        if !num.constant.is_zero() || !den.constant.is_zero() {
            return Err(Error::NotRemovable(format!(
                "numerator {} and denominator {} must both vanish",
                num.constant, den.constant
            )));
        }
        if den.higher[0] == 0.0 {
            return Err(Error::NotRemovable("denominator has a zero of order > 1".into()));
        }
        Ok(RemovableQuotient { num: num.higher, den: den.higher })
    }

    /// Value at offset `u` from the expansion point.
    pub fn eval(&self, u: f64) -> f64 {
        let horner = |c: &[f64; JET_ORDER]| c.iter().rev().fold(0.0, |acc, &x| acc * u + x);
        horner(&self.num) / horner(&self.den)
    }

    /// Limit at the expansion point.
    pub fn limit(&self) -> f64 {
        self.num[0] / self.den[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trig_jets() {
        // sin(π(1/2 + u)) = cos(πu) = 1 − π²u²/2 + π⁴u⁴/24
        let j = Jet::of_sin(&Rational::one(), 1, 1);
        assert_eq!(j.constant, Rational::one());
        assert_eq!(j.higher[0], 0.0);
        assert!((j.higher[1] + PI * PI / 2.0).abs() < 1e-15);
        assert!((j.higher[3] - PI.powi(4) / 24.0).abs() < 1e-13);
        // cos(π(1/2 + u)) = −sin(πu)
        let c = Jet::of_cos(&Rational::one(), 1, 1);
        assert!(c.constant.is_zero());
        assert!((c.higher[0] + PI).abs() < 1e-15);
    }

    #[test]
    fn sinc_like_limit() {
        // (t − 1/2)/cos(πt) → −1/π
        let p = RationalPolynomial::from_ratios(&[(-1, 2), (1, 1)]);
        let half = Rational::new(1, 2);
        let q = RemovableQuotient::new(&Jet::of_polynomial(&p, &half), &Jet::of_cos(&Rational::one(), 1, 1)).unwrap();
        assert!((q.limit() + 1.0 / PI).abs() < 1e-16);
        let u: f64 = 1e-4;
        let direct = u / (PI * (0.5 + u)).cos();
        assert!((q.eval(u) - direct).abs() < 1e-12);
    }

    #[test]
    fn non_vanishing_rejected() {
        let one = RationalPolynomial::constant(Rational::one());
        let r = RemovableQuotient::new(
            &Jet::of_polynomial(&one, &Rational::zero()),
            &Jet::of_sin(&Rational::one(), 2, 0),
        );
        assert!(matches!(r, Err(Error::NotRemovable(_))));
    }
}
