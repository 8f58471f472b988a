use std::fmt;

use serde::Serialize;

use crate::exact::Rational;
use crate::hpreal::{pi_fixed, Fixed, HighPrecisionReal, GUARD_DIGITS};

/// `coeff · π^power`, exactly. A zero coefficient always carries power 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PiPowerValue {
    coeff: Rational,
    power: i64,
}

impl PiPowerValue {
    pub fn new(coeff: Rational, power: i64) -> Self {
        let power = if coeff.is_zero() { 0 } else { power };
        PiPowerValue { coeff, power }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64() * std::f64::consts::PI.powi(self.power as i32)
    }

    /// Serializable view with the decimal expansion at `digits` places.
    pub fn report(&self, digits: u32) -> PiPowerReport {
        PiPowerReport {
            coeff: self.coeff.clone(),
            pi_power: self.power,
            decimal: render_decimal(self, digits).to_decimal_string(),
            digits,
        }
    }
}

impl fmt::Display for PiPowerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}*pi", self.coeff),
            p => write!(f, "{}*pi^{}", self.coeff, p),
        }
    }
}

/// JSON shape `{ coeff, pi_power, decimal, digits }`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PiPowerReport {
    pub coeff: Rational,
    pub pi_power: i64,
    pub decimal: String,
    pub digits: u32,
}

/// Rough `log10 |r|`, good to about one unit.
fn log10_abs(r: &Rational) -> f64 {
    (r.numer().bits() as f64 - r.denom().bits() as f64) * std::f64::consts::LOG10_2
}

/// `coeff · π^power` to `digits` decimal places.
///
/// π is carried with [`GUARD_DIGITS`] extra places plus enough headroom for the
/// magnitude of the result and for the relative error growth of the power.
pub fn render_decimal(v: &PiPowerValue, digits: u32) -> HighPrecisionReal {
    if v.coeff.is_zero() {
        return HighPrecisionReal::new(Fixed::zero(digits), digits);
    }
    let p = v.power.unsigned_abs() as u32;
    let magnitude = log10_abs(&v.coeff) + v.power as f64 * std::f64::consts::PI.log10();
    let headroom = magnitude.max(0.0).ceil() as u32 + 1 + ((2 * p + 1) as f64).log10().ceil() as u32;
    let work = digits + GUARD_DIGITS + headroom;
    let c = Fixed::from_rational(&v.coeff, work);
    let value = if p == 0 {
        c
    } else {
        let pp = pi_fixed(work).powi(p);
        if v.power > 0 {
            // Multiply before rounding: coeff·π^p can exceed 10^work.
            Fixed::from_rational(&(&v.coeff * pp.to_rational()), work)
        } else {
            c.div(&pp)
        }
    };
    HighPrecisionReal::new(value, digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let z = PiPowerValue::new(Rational::zero(), 7);
        assert_eq!(z.power(), 0);
        assert_eq!(z, PiPowerValue::new(Rational::zero(), 0));
    }

    #[test]
    fn render_examples() {
        let quarter = PiPowerValue::new(Rational::new(1, 4), 1);
        assert_eq!(render_decimal(&quarter, 15).to_decimal_string(), "0.785398163397448");
        assert_eq!(
            render_decimal(&PiPowerValue::new(Rational::zero(), 0), 6).to_decimal_string(),
            "0.000000"
        );
        assert_eq!(
            render_decimal(&PiPowerValue::new(Rational::one(), 0), 4).to_decimal_string(),
            "1.0000"
        );
        let inv_pi = PiPowerValue::new(Rational::one(), -1);
        assert_eq!(render_decimal(&inv_pi, 10).to_decimal_string(), "0.3183098862");
        let neg = PiPowerValue::new(Rational::from_integer(-1), -2);
        assert_eq!(render_decimal(&neg, 10).to_decimal_string(), "-0.1013211836");
    }

    #[test]
    fn render_large_coefficient() {
        // 10^20 · π = 314159265358979323846.2643...
        let v = PiPowerValue::new(Rational::from_integer(num_bigint::BigInt::from(10u8).pow(20)), 1);
        assert_eq!(render_decimal(&v, 3).to_decimal_string(), "314159265358979323846.264");
    }

    #[test]
    fn report_json() {
        let v = PiPowerValue::new(Rational::new(1, 32), 3);
        let j = serde_json::to_string(&v.report(12)).unwrap();
        assert_eq!(j, r#"{"coeff":"1/32","pi_power":3,"decimal":"0.968946146259","digits":12}"#);
    }
}
