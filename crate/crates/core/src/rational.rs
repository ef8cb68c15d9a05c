//! Exact rational values. Every probability in the engine is a reduced
//! fraction with a positive denominator; binary floating point never enters.

use num::bigint::BigInt;
use num::{One, Signed};

pub type Rational = num::BigRational;

/// Shorthand for building a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn is_probability(x: &Rational) -> bool {
    !x.is_negative() && *x <= Rational::one()
}

/// Renders a reduced fraction, collapsing integral values to plain integers
/// ("7/10", "0", "1").
pub fn fraction_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Fixed-point decimal rendering with `places` digits, rounding half away
/// from zero. Used only for display; the exact value stays rational.
pub fn decimal_string(x: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = x * Rational::from_integer(scale.clone());
    let doubled = scaled.numer() * BigInt::from(2);
    let denom = scaled.denom().clone();
    let rounded: BigInt = if doubled.is_negative() {
        (doubled - &denom) / (&denom * BigInt::from(2))
    } else {
        (doubled + &denom) / (&denom * BigInt::from(2))
    };
    let negative = rounded.is_negative();
    let magnitude = rounded.abs();
    let int_part = &magnitude / &scale;
    let frac_part = &magnitude % &scale;
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if places > 0 {
        out.push('.');
        let digits = frac_part.to_string();
        for _ in digits.len()..places as usize {
            out.push('0');
        }
        out.push_str(&digits);
    }
    out
}
