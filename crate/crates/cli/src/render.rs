//! Correctly rounded decimal rendering of exact rationals.
//!
//! Every digit printed anywhere in the CLI comes from one of these
//! functions: the rational is scaled by an exact power of ten, rounded
//! half-to-even as an integer, and formatted. No floating point is
//! involved at any step.

use num_traits::{One, Signed, Zero};
use qmeixner::rational::{pow10, BigInt};
use qmeixner::Rational;

/// Round to the nearest integer, ties to even.
fn round_half_even(q: &Rational) -> BigInt {
    let floor = q.floor().to_integer();
    let frac = q - Rational::from_integer(floor.clone());
    let half = Rational::new(1.into(), 2.into());
    if frac > half || (frac == half && &floor % 2 != BigInt::zero()) {
        floor + 1
    } else {
        floor
    }
}

/// The unique `e` with `10^e <= |r| < 10^(e+1)` for nonzero `r`.
fn floor_log10(r: &Rational) -> i64 {
    let mag = r.abs();
    debug_assert!(!mag.is_zero());
    let digits = |n: &BigInt| n.to_string().trim_start_matches('-').len() as i64;
    let mut e = digits(mag.numer()) - digits(mag.denom());
    while pow10(e) > mag {
        e -= 1;
    }
    while pow10(e + 1) <= mag {
        e += 1;
    }
    e
}

/// `sig` significant digits of `|r|` plus the resulting decimal exponent.
fn significant_digits(r: &Rational, sig: usize) -> (String, i64) {
    debug_assert!(sig >= 1);
    let mut e = floor_log10(r);
    let scaled = r.abs() * pow10(sig as i64 - 1 - e);
    let mut m = round_half_even(&scaled);
    let limit = pow10(sig as i64).to_integer();
    if m == limit {
        // rounding carried into one more digit
        m = pow10(sig as i64 - 1).to_integer();
        e += 1;
    }
    (m.to_string(), e)
}

/// Fixed-point rendering with `sig` significant digits, e.g. `0.0405146`
/// or `2.0000000038`.
pub fn decimal_sig(r: &Rational, sig: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let (digits, e) = significant_digits(r, sig);
    let sign = if r.is_negative() { "-" } else { "" };
    let body = if e >= 0 {
        let int_len = (e + 1) as usize;
        if int_len >= digits.len() {
            format!("{}{}", digits, "0".repeat(int_len - digits.len()))
        } else {
            format!("{}.{}", &digits[..int_len], &digits[int_len..])
        }
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    };
    format!("{sign}{body}")
}

/// Scientific rendering with `sig` significant digits, e.g. `3.549e-14`.
pub fn decimal_sci(r: &Rational, sig: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let (digits, e) = significant_digits(r, sig);
    let sign = if r.is_negative() { "-" } else { "" };
    if digits.len() == 1 {
        format!("{sign}{digits}e{e}")
    } else {
        format!("{sign}{}.{}e{e}", &digits[..1], &digits[1..])
    }
}

/// Fixed or scientific, whichever reads better for the magnitude.
pub fn decimal_auto(r: &Rational, sig: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let e = floor_log10(r);
    if (-4..=9).contains(&e) {
        decimal_sig(r, sig)
    } else {
        decimal_sci(r, sig)
    }
}

/// `places` digits after the decimal point.
pub fn decimal_places(r: &Rational, places: usize) -> String {
    let scaled = round_half_even(&(r.abs() * pow10(places as i64)));
    let s = scaled.to_string();
    let sign = if r.is_negative() && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{s}");
    }
    let padded = format!("{s:0>width$}", width = places + 1);
    let cut = padded.len() - places;
    format!("{sign}{}.{}", &padded[..cut], &padded[cut..])
}

/// Enough digits after the point to tell apart values separated by
/// `width`: one digit past the scale of `width`.
pub fn decimal_for_width(r: &Rational, width: &Rational) -> String {
    let mut places = 1usize;
    let mut scale = Rational::new(1.into(), 10.into());
    while &scale > width && places < 60 {
        scale /= pow10(1);
        places += 1;
    }
    decimal_places(r, places + 1)
}

/// Exact terminating decimal (minimal digits), if one exists.
pub fn minimal_decimal(r: &Rational) -> Option<String> {
    let mut den = r.denom().clone();
    let mut k2 = 0i64;
    let mut k5 = 0i64;
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while (&den % &two).is_zero() {
        den /= &two;
        k2 += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        k5 += 1;
    }
    if !den.is_one() {
        return None;
    }
    let k = k2.max(k5);
    let scaled = (r.abs() * pow10(k)).to_integer();
    let sign = if r.is_negative() { "-" } else { "" };
    let mut s = if k == 0 {
        scaled.to_string()
    } else {
        let padded = format!("{scaled:0>width$}", width = k as usize + 1);
        let cut = padded.len() - k as usize;
        format!("{}.{}", &padded[..cut], &padded[cut..])
    };
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    Some(format!("{sign}{s}"))
}

/// Number of significant digits in a rendered decimal string.
pub fn significand_len(s: &str) -> usize {
    s.chars()
        .skip_while(|&ch| !ch.is_ascii_digit() || ch == '0')
        .filter(|ch| ch.is_ascii_digit())
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qmeixner::{parse_rational, rat, rat_int};

    #[test]
    fn significant_digit_rendering() {
        assert_eq!(decimal_sig(&rat(9982, 10000), 4), "0.9982");
        assert_eq!(
            decimal_sig(&parse_rational("2.93764501078").unwrap(), 6),
            "2.93765"
        );
        assert_eq!(
            decimal_sig(&parse_rational("0.0405145567468").unwrap(), 6),
            "0.0405146"
        );
        assert_eq!(
            decimal_sig(&parse_rational("2.0474178654").unwrap(), 5),
            "2.0474"
        );
        assert_eq!(decimal_sig(&rat_int(3), 1), "3");
        assert_eq!(decimal_sig(&rat_int(-250), 2), "-250");
    }

    #[test]
    fn scientific_rendering_keeps_trailing_zeros() {
        assert_eq!(
            decimal_sci(&parse_rational("1.2300014757e-13").unwrap(), 4),
            "1.230e-13"
        );
        assert_eq!(
            decimal_sci(&parse_rational("3.54889961413e-14").unwrap(), 4),
            "3.549e-14"
        );
        assert_eq!(decimal_sci(&rat_int(12345), 3), "1.23e4");
    }

    #[test]
    fn rounding_is_half_even_and_carries() {
        assert_eq!(decimal_sig(&rat(25, 100), 1), "0.2");
        assert_eq!(decimal_sig(&rat(35, 100), 1), "0.4");
        assert_eq!(decimal_sig(&rat(999, 1000), 2), "1.0");
        assert_eq!(decimal_sci(&rat(999, 1000), 2), "1.0e0");
    }

    #[test]
    fn fixed_places() {
        assert_eq!(decimal_places(&rat(3, 2), 3), "1.500");
        assert_eq!(decimal_places(&rat(-1, 3), 4), "-0.3333");
        assert_eq!(decimal_places(&rat_int(0), 2), "0.00");
    }

    #[test]
    fn width_driven_digits() {
        let r = rat(12345, 100000);
        assert_eq!(decimal_for_width(&r, &rat(1, 100)), "0.123");
    }

    #[test]
    fn minimal_decimals() {
        assert_eq!(minimal_decimal(&rat(199, 20)).unwrap(), "9.95");
        assert_eq!(minimal_decimal(&rat_int(3)).unwrap(), "3");
        assert_eq!(minimal_decimal(&rat(15, 2)).unwrap(), "7.5");
        assert_eq!(minimal_decimal(&rat(-199, 50)).unwrap(), "-3.98");
        assert_eq!(minimal_decimal(&rat(1, 3)), None);
        assert_eq!(significand_len("9.95"), 3);
        assert_eq!(significand_len("0.0405146"), 6);
    }
}
