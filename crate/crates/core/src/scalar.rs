//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Ground-field element. `BigRational` keeps itself in lowest terms with a
/// positive denominator, so equality is structural.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p/q"` or an integer string. Decimal and exponent notation are
/// rejected so that every accepted value is exact.
pub fn parse(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::Parse(format!("invalid scalar {text:?}: expected an integer or \"p/q\""));
    let int_part = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match t.split_once('/') {
        None => Ok(BigRational::from_integer(int_part(t)?)),
        Some((p, q)) => {
            let p = int_part(p.trim())?;
            let q = int_part(q.trim())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("invalid scalar {text:?}: zero denominator")));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Canonical text form: `"n"` for integers, `"p/q"` otherwise.
pub fn format(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Formats a coordinate vector as a linear combination of `labels`, e.g.
/// `-2x+2y`. The zero vector prints as `0`.
pub fn format_combination(coords: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in coords.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !magnitude.is_one() {
            if magnitude.is_integer() {
                out.push_str(&magnitude.numer().to_string());
            } else {
                out.push_str(&format!("({})", format(&magnitude)));
            }
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
