//! Arbitrary-precision rationals.
//!
//! `BigRational` already keeps its value reduced with a positive
//! denominator, so it is used directly as the coefficient field.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ExactRational = BigRational;

pub fn int(v: impl Into<BigInt>) -> ExactRational {
    BigRational::from_integer(v.into())
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRational {
    BigRational::new(num.into(), den.into())
}

pub fn is_integer(q: &ExactRational) -> bool {
    q.denom().is_one()
}

/// Parses `p`, `p/q` or a finite decimal such as `-2.125` or `1e-9`.
pub fn parse_rational(text: &str) -> Result<ExactRational> {
    let s = text.trim();
    let bad = || Error::invalid(format!("not a rational number: {text:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::invalid(format!("zero denominator in {text:?}")));
        }
        return Ok(BigRational::new(p, q));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{whole}{frac}");
    let mut value = int(BigInt::from_str(if all_digits.is_empty() { "0" } else { &all_digits })
        .map_err(|_| bad())?);
    let shift = exponent - frac.len() as i32;
    let ten = BigInt::from(10u32);
    if shift >= 0 {
        value *= int(num_traits::pow(ten, shift as usize));
    } else {
        value /= int(num_traits::pow(ten, (-shift) as usize));
    }
    Ok(if negative { -value } else { value })
}

/// `p/q` or `p` when the denominator is 1.
pub fn format_rational(q: &ExactRational) -> String {
    if is_integer(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Nearest `f64`, computed from a scaled integer quotient so that huge
/// numerators and denominators do not overflow to infinity.
pub fn to_f64(q: &ExactRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let shift = q.numer().bits() as i64 - q.denom().bits() as i64;
    let scale = 60 - shift;
    let scaled = if scale >= 0 {
        (q.numer() << scale as usize).div_floor(q.denom())
    } else {
        q.numer().div_floor(&(q.denom() << (-scale) as usize))
    };
    let mantissa = scaled.to_f64().unwrap_or(f64::NAN);
    mantissa * 2f64.powi(-(scale as i32))
}
