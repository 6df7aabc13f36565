//! Exact rational helpers on top of `num`'s big rationals.

use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num::BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"3/2"`, `"2"`, `"0.75"` or `"-1.5"` exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Argument(format!("cannot parse {text:?} as a fraction"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Argument(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty()
        || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let denom = num::pow(BigInt::from(10), frac.len());
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

/// `floor(q * n)` for nonnegative `q`.
pub fn floor_times(q: &Rational, n: usize) -> usize {
    (q * int(n)).floor().to_integer().to_usize().unwrap_or(usize::MAX)
}

/// `ceil(q * n)` for nonnegative `q`.
pub fn ceil_times(q: &Rational, n: usize) -> usize {
    (q * int(n)).ceil().to_integer().to_usize().unwrap_or(usize::MAX)
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Numerator and denominator as machine integers, for hot integer-only
/// comparisons. Fails for negative values or parts wider than 64 bits.
pub fn small_parts(q: &Rational) -> Result<(u64, u64)> {
    let too_big = || Error::Argument(format!("ratio {q} does not fit in 64-bit parts"));
    if q.is_negative() {
        return Err(Error::Argument(format!("ratio {q} is negative")));
    }
    let n = q.numer().to_u64().ok_or_else(too_big)?;
    let d = q.denom().to_u64().ok_or_else(too_big)?;
    Ok((n, d))
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}
