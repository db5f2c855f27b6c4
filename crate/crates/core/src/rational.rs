//! Exact rational scalars.
//!
//! Every quantity in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in canonical form (reduced, positive denominator) by
//! `num-rational`. Signs, comparisons and arithmetic are always exact;
//! nothing in the library ever rounds.

pub use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// The universal scalar type.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `10^k` for any integer `k` (negative exponents give fractions).
pub fn pow10(k: i64) -> Rational {
    let base = Rational::from_integer(BigInt::from(10));
    base.pow(k as i32)
}

/// Exact sign: -1, 0 or +1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty numeric string")]
    Empty,
    #[error("malformed numeric string `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses a numeric string exactly into a [`Rational`].
///
/// Accepted forms: integers (`-3`), fractions (`-19/10`), decimals
/// (`-1.99` becomes `-199/100`) and scientific notation (`1e-9`,
/// `2.5e3`). A Unicode minus sign is treated like `-`.
pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let s = input.trim().replace('\u{2212}', "-");
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let malformed = || ParseRationalError::Malformed(input.to_string());

    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| malformed())?;
        let d: BigInt = den.trim().parse().map_err(|_| malformed())?;
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(input.to_string()));
        }
        return Ok(Rational::new(n, d));
    }

    // mantissa [eE exponent]
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e.parse().map_err(|_| malformed())?;
            (m, exp)
        }
        None => (s.as_str(), 0),
    };
    if mantissa.is_empty() {
        return Err(malformed());
    }

    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let negative = int_part.starts_with('-');
    let int_digits = int_part.trim_start_matches(['-', '+']);
    if !int_digits.chars().all(|ch| ch.is_ascii_digit())
        || !frac_part.chars().all(|ch| ch.is_ascii_digit())
        || (int_digits.is_empty() && frac_part.is_empty())
    {
        return Err(malformed());
    }

    let digits = format!("{int_digits}{frac_part}");
    let mut value = Rational::from_integer(digits.parse::<BigInt>().map_err(|_| malformed())?);
    if negative {
        value = -value;
    }
    Ok(value * pow10(exp - frac_part.len() as i64))
}

/// Renders a rational as `p/q` (or just `p` for integers).
pub fn exact_str(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
