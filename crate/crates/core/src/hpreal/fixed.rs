use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exact::Rational;

/// `10^n` as a big integer.
pub fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u8), n as usize)
}

/// `n / d` rounded to nearest, ties to even. `d` must be positive.
pub fn div_round_half_even(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let (q, r) = n.div_mod_floor(d);
    let twice = &r * 2u8;
    match twice.cmp(d) {
        Ordering::Less => q,
        Ordering::Greater => q + 1u8,
        Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1u8
            }
        }
    }
}

/// Decimal fixed-point number `mantissa · 10^(-scale)`.
///
/// Every arithmetic result is rounded to nearest at the left operand's scale,
/// so each operation contributes at most half a unit in the last place.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fixed {
    mant: BigInt,
    scale: u32,
}

impl Fixed {
    pub fn from_mantissa(mant: BigInt, scale: u32) -> Self {
        Fixed { mant, scale }
    }

    pub fn zero(scale: u32) -> Self {
        Fixed { mant: BigInt::zero(), scale }
    }

    pub fn from_integer(n: impl Into<BigInt>, scale: u32) -> Self {
        Fixed { mant: n.into() * pow10(scale), scale }
    }

    pub fn from_rational(r: &Rational, scale: u32) -> Self {
        let n = r.numer() * pow10(scale);
        Fixed { mant: div_round_half_even(&n, r.denom()), scale }
    }

    /// Exact binary expansion of `x` rounded to `scale` digits.
    pub fn from_f64(x: f64, scale: u32) -> Self {
        assert!(x.is_finite());
        let r: Rational = num_rational::BigRational::from_float(x)
            .expect("finite float")
            .into();
        Self::from_rational(&r, scale)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Fixed { mant: self.mant.abs(), scale: self.scale }
    }

    pub fn neg(&self) -> Self {
        Fixed { mant: -&self.mant, scale: self.scale }
    }

    /// Re-expresses at `scale`, rounding if digits are dropped.
    pub fn rescale(&self, scale: u32) -> Self {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Fixed { mant: &self.mant * pow10(scale - self.scale), scale },
            Ordering::Less => Fixed {
                mant: div_round_half_even(&self.mant, &pow10(self.scale - scale)),
                scale,
            },
        }
    }

    fn aligned(&self, other: &Fixed) -> BigInt {
        if other.scale == self.scale {
            other.mant.clone()
        } else {
            other.rescale(self.scale).mant
        }
    }

    pub fn add(&self, other: &Fixed) -> Fixed {
        Fixed { mant: &self.mant + self.aligned(other), scale: self.scale }
    }

    pub fn sub(&self, other: &Fixed) -> Fixed {
        Fixed { mant: &self.mant - self.aligned(other), scale: self.scale }
    }

    pub fn mul(&self, other: &Fixed) -> Fixed {
        let prod = &self.mant * &other.mant;
        Fixed { mant: div_round_half_even(&prod, &pow10(other.scale)), scale: self.scale }
    }

    pub fn div(&self, other: &Fixed) -> Fixed {
        assert!(!other.is_zero(), "fixed-point division by zero");
        let mut n = &self.mant * pow10(other.scale);
        let mut d = other.mant.clone();
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Fixed { mant: div_round_half_even(&n, &d), scale: self.scale }
    }

    pub fn mul_int(&self, k: &BigInt) -> Fixed {
        Fixed { mant: &self.mant * k, scale: self.scale }
    }

    pub fn div_int(&self, k: &BigInt) -> Fixed {
        assert!(!k.is_zero(), "fixed-point division by zero");
        let (n, d) = if k.is_negative() { (-&self.mant, -k) } else { (self.mant.clone(), k.clone()) };
        Fixed { mant: div_round_half_even(&n, &d), scale: self.scale }
    }

    pub fn mul_rational(&self, r: &Rational) -> Fixed {
        Fixed { mant: div_round_half_even(&(&self.mant * r.numer()), r.denom()), scale: self.scale }
    }

    /// Integer power by repeated squaring; `exp = 0` gives 1.
    pub fn powi(&self, exp: u32) -> Fixed {
        let mut result = Fixed::from_integer(1, self.scale);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact rational value of this fixed-point number.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), pow10(self.scale))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64()
    }

    /// Decimal string with exactly `digits` fractional digits, rounded half-even.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let m = self.rescale(digits).mant;
        let neg = m.sign() == Sign::Minus;
        let s = m.abs().to_string();
        let body = if digits == 0 {
            s
        } else {
            let d = digits as usize;
            let padded = if s.len() <= d { format!("{}{}", "0".repeat(d + 1 - s.len()), s) } else { s };
            let (int, frac) = padded.split_at(padded.len() - d);
            format!("{int}.{frac}")
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Number of decimal digits in the integer part's magnitude (0 for |x| < 1).
    pub fn integer_digits(&self) -> u32 {
        let ip = self.mant.abs() / pow10(self.scale);
        if ip.is_zero() {
            0
        } else {
            ip.to_string().len() as u32
        }
    }

    pub fn cmp_value(&self, other: &Fixed) -> Ordering {
        let s = self.scale.max(other.scale);
        self.rescale(s).mant.cmp(&other.rescale(s).mant)
    }

    pub fn one(scale: u32) -> Fixed {
        Fixed { mant: pow10(scale), scale }
    }
}

impl fmt::Debug for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fixed({})", self.to_decimal_string(self.scale))
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string(self.scale))
    }
}

impl Default for Fixed {
    fn default() -> Self {
        Fixed::zero(0)
    }
}
