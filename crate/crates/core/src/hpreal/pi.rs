//! π by Machin's formula, `π = 16·atan(1/5) − 4·atan(1/239)`, in fixed point.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::fixed::{div_round_half_even, pow10, Fixed};

/// Extra decimal digits carried internally beyond the requested scale.
pub const GUARD_DIGITS: u32 = 10;

/// `atan(1/x) · 10^work` truncated termwise, plus the number of series terms used.
///
/// Each term is truncated once when formed and once when divided by `2j+1`,
/// and the series is cut when the running power of `1/x` truncates to zero,
/// so the total error is below `2·terms + 1` units at `work`.
fn atan_inv(x: u64, work: u32) -> (BigInt, u64) {
    let x2 = BigInt::from(x * x);
    let mut power = pow10(work) / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        j += 1;
    }
    (sum, j)
}

fn compute(scale: u32) -> BigInt {
    // Term counts grow like scale/1.4, so log10 of the bound 16·(2n+1)+4·(2n+1)
    // stays far below GUARD_DIGITS for any scale this crate accepts.
    let work = scale + GUARD_DIGITS + (scale.max(1) as f64).log10().ceil() as u32;
    let (a, na) = atan_inv(5, work);
    let (b, nb) = atan_inv(239, work);
    let err_units = 16 * (2 * na + 1) + 4 * (2 * nb + 1);
    debug_assert!((err_units as f64) < 10f64.powi((work - scale) as i32) / 2.0);
    let pi_work = a * 16u8 - b * 4u8;
    div_round_half_even(&pi_work, &pow10(work - scale))
}

fn cache() -> &'static Mutex<HashMap<u32, BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// π rounded to `scale` decimal places (error below one unit in the last place).
///
/// Results are memoized per scale, so repeated calls are cheap and every call
/// with the same scale returns the same digits.
pub fn pi_fixed(scale: u32) -> Fixed {
    if let Some(m) = cache().lock().expect("pi cache poisoned").get(&scale) {
        return Fixed::from_mantissa(m.clone(), scale);
    }
    let m = compute(scale);
    cache()
        .lock()
        .expect("pi cache poisoned")
        .insert(scale, m.clone());
    Fixed::from_mantissa(m, scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    // rounded, not truncated: ...0974944 59...
    const PI_60: &str = "3.141592653589793238462643383279502884197169399375105820974945";

    #[test]
    fn known_digits() {
        assert_eq!(pi_fixed(60).to_decimal_string(60), PI_60);
        assert_eq!(pi_fixed(15).to_decimal_string(15), "3.141592653589793");
        assert_eq!(pi_fixed(2).to_decimal_string(2), "3.14");
    }

    #[test]
    fn consistent_across_scales() {
        let hi = pi_fixed(300);
        for s in [5, 17, 50, 120] {
            let lo = pi_fixed(s);
            let diff = hi.rescale(s).sub(&lo);
            assert!(diff.mantissa().magnitude() <= &num_bigint::BigUint::from(1u8));
        }
    }
}
