//! Exact rational helpers.
//!
//! [`Rational`] is `num`'s arbitrary-precision rational; values are always
//! kept in lowest terms with a positive denominator.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` reduced. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative number {n}");
    (2..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// Binomial coefficient, zero outside `0 <= m <= n`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if m < 0 || n < 0 || m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for j in 0..m {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Product of the integers in `lo..=hi`; 1 when the range is empty.
pub fn range_product(lo: i64, hi: i64) -> BigInt {
    (lo..=hi).fold(BigInt::one(), |acc, j| acc * j)
}

/// Renders `a` for integers and `a/b` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `a` or `a/b` with optional sign; rejects decimals and zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("not an integer: {t:?}")));
        }
        t.parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

pub fn is_nonnegative_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_negative()
}
