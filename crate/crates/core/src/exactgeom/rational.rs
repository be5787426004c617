//! Exact rational scalars and their textual forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// The scalar type used for every coordinate in the crate.
pub type Rational = BigRational;

/// Largest decimal exponent accepted by [`parse_rational`]. Anything larger
/// would allocate absurd integers for no geometric benefit.
const MAX_EXPONENT: i64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty number")]
    Empty,
    #[error("invalid character {0:?} in number")]
    InvalidChar(char),
    #[error("malformed number {0:?}")]
    Malformed(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("exponent out of range")]
    ExponentRange,
}

/// Parses an integer, a decimal (`-0.125`, `1.5e-3`) or a fraction (`3/7`)
/// into an exact rational. No floating point is involved at any stage.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((num, den)) = text.split_once('/') {
        let num = parse_decimal(num.trim())?;
        let den = parse_decimal(den.trim())?;
        if den.is_zero() {
            return Err(ParseRationalError::ZeroDenominator);
        }
        return Ok(num / den);
    }
    parse_decimal(text)
}

fn parse_decimal(text: &str) -> Result<Rational, ParseRationalError> {
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (negative, rest) = match text.as_bytes()[0] {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (mantissa, exponent) = match rest.find(['e', 'E']) {
        Some(pos) => (&rest[..pos], Some(&rest[pos + 1..])),
        None => (rest, None),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(ParseRationalError::Malformed(text.to_string()));
    }
    for c in int_part.chars().chain(frac_part.chars()) {
        if !c.is_ascii_digit() {
            return Err(ParseRationalError::InvalidChar(c));
        }
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(
        digits
            .parse::<BigInt>()
            .map_err(|_| ParseRationalError::Malformed(text.to_string()))?,
    );
    let mut scale = -(frac_part.len() as i64);
    if let Some(exp) = exponent {
        let exp: i64 = exp
            .parse()
            .map_err(|_| ParseRationalError::Malformed(text.to_string()))?;
        if exp.abs() > MAX_EXPONENT {
            return Err(ParseRationalError::ExponentRange);
        }
        scale += exp;
    }
    if scale.abs() > MAX_EXPONENT + 1024 {
        return Err(ParseRationalError::ExponentRange);
    }
    let ten_pow = Rational::from_integer(num_traits::pow(BigInt::from(10), scale.unsigned_abs() as usize));
    if scale >= 0 {
        value *= ten_pow;
    } else {
        value /= ten_pow;
    }
    Ok(if negative { -value } else { value })
}

/// Canonical text for a rational: `p` for integers and `p/q` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Lossy conversion used only for drawing.
pub fn to_f64(value: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or_else(|| {
        if value.is_negative() {
            f64::MIN
        } else {
            f64::MAX
        }
    })
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

/// Wrapper that prints a rational in canonical form.
pub struct Display<'a>(pub &'a Rational);

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_rational("0.5").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-0.125").unwrap(), frac(-1, 8));
        assert_eq!(parse_rational("0.1").unwrap(), frac(1, 10));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert_eq!(parse_rational("1.5e2").unwrap(), int(150));
        assert_eq!(parse_rational("25E-2").unwrap(), frac(1, 4));
        assert_eq!(parse_rational(".5").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("+3.").unwrap(), int(3));
    }

    #[test]
    fn fractions() {
        assert_eq!(parse_rational("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-1/3").unwrap(), frac(-1, 3));
        assert_eq!(parse_rational("1/0"), Err(ParseRationalError::ZeroDenominator));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("-").is_err());
        assert!(parse_rational(".").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("0x10").is_err());
        assert!(parse_rational("nan").is_err());
        assert!(parse_rational("1e99999").is_err());
        assert!(parse_rational("1e").is_err());
    }

    #[test]
    fn canonical_text() {
        assert_eq!(format_rational(&frac(6, 4)), "3/2");
        assert_eq!(format_rational(&int(-7)), "-7");
    }
}
