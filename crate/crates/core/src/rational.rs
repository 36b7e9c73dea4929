//! Exact rational values and their `n` / `n/d` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad rational `{token}`: {reason}")]
pub struct ParseRationalError {
    pub token: String,
    pub reason: &'static str,
}

fn err(token: &str, reason: &'static str) -> ParseRationalError {
    ParseRationalError { token: token.to_owned(), reason }
}

fn parse_digits(token: &str, digits: &str) -> Result<BigInt, ParseRationalError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(token, "expected ASCII digits"));
    }
    digits.parse().map_err(|_| err(token, "expected ASCII digits"))
}

/// Parses `n` or `n/d` with unsigned decimal digits only. No signs, no
/// decimal points, no zero denominator.
pub fn parse_nonnegative(token: &str) -> Result<Rational, ParseRationalError> {
    let (numer, denom) = match token.split_once('/') {
        Some((n, d)) => (parse_digits(token, n)?, parse_digits(token, d)?),
        None => (parse_digits(token, token)?, BigInt::one()),
    };
    if denom.is_zero() {
        return Err(err(token, "zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Like [`parse_nonnegative`] but rejects zero.
pub fn parse_positive(token: &str) -> Result<Rational, ParseRationalError> {
    let value = parse_nonnegative(token)?;
    if value.is_zero() {
        return Err(err(token, "must be positive"));
    }
    Ok(value)
}

/// Lowest terms; integers print without a denominator.
pub fn format(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn is_positive(value: &Rational) -> bool {
    value.is_positive()
}

pub fn from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Serde adapter storing a rational as its text form.
pub mod serde_text {
    use super::{format, parse_nonnegative, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_nonnegative(&text).map_err(serde::de::Error::custom)
    }
}
