use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::NumericError;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for `num / den` as a reduced [`Rational`].
///
/// Panics if `den` is zero.
pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses an exact rational from `"p/q"`, an integer, or a decimal literal
/// such as `"2.8"` (which becomes `14/5`).
pub fn parse_rational(text: &str) -> Result<Rational, NumericError> {
    let bad = || NumericError::BadRational(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    let (negative, body) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let mut den = BigInt::one();
    for _ in 0..frac_part.len() {
        den *= 10;
    }
    let value = BigRational::new(num, den);
    Ok(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_literals_are_exact() {
        assert_eq!(parse_rational("2.8").unwrap(), rational(14, 5));
        assert_eq!(parse_rational("-0.25").unwrap(), rational(-1, 4));
        assert_eq!(parse_rational("4").unwrap(), rational(4, 1));
        assert_eq!(parse_rational(".5").unwrap(), rational(1, 2));
        assert_eq!(parse_rational("3.").unwrap(), rational(3, 1));
    }

    #[test]
    fn fractions_are_reduced() {
        let r = parse_rational("10/4").unwrap();
        assert_eq!(r, rational(5, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), rational(-1, 2));
    }

    #[test]
    fn garbage_is_rejected() {
        for s in ["", "abc", "1/0", "1.2.3", "-", ".", "1e5", "2,8"] {
            assert!(parse_rational(s).is_err(), "{s:?} should not parse");
        }
    }
}
