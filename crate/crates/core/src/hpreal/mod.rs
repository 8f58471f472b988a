//! Arbitrary-precision decimal reals with an attached accuracy guarantee.

mod fixed;
mod pi;

use std::fmt;

use serde::{Serialize, Serializer};

pub use fixed::{div_round_half_even, pow10, Fixed};
pub use pi::{pi_fixed, GUARD_DIGITS};

/// A real number known to within `10^(-guaranteed_digits)` of its target.
///
/// The stored value usually carries guard digits past the guarantee; display
/// and serialization round half-even to exactly `guaranteed_digits` places.
#[derive(Clone, PartialEq, Eq)]
pub struct HighPrecisionReal {
    value: Fixed,
    guaranteed_digits: u32,
}

impl HighPrecisionReal {
    pub fn new(value: Fixed, guaranteed_digits: u32) -> Self {
        HighPrecisionReal { value, guaranteed_digits }
    }

    pub fn value(&self) -> &Fixed {
        &self.value
    }

    pub fn guaranteed_digits(&self) -> u32 {
        self.guaranteed_digits
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// `|self − other|` at the finer of the two internal scales.
    pub fn abs_diff(&self, other: &HighPrecisionReal) -> Fixed {
        let s = self.value.scale().max(other.value.scale());
        self.value.rescale(s).sub(&other.value.rescale(s)).abs()
    }

    /// Rounded decimal string with `guaranteed_digits` fractional digits.
    pub fn to_decimal_string(&self) -> String {
        self.value.to_decimal_string(self.guaranteed_digits)
    }
}

impl fmt::Display for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl fmt::Debug for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (±1e-{})", self.value, self.guaranteed_digits)
    }
}

impl Serialize for HighPrecisionReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
