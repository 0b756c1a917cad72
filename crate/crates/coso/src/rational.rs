//! Exact rational scalars. Everything on the solver path is a
//! `num_rational::BigRational`; floating point never enters.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d == 0` (test/fixture helper).
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Smallest integer `>= x`, as a rational.
pub fn ceil(x: &Rational) -> Rational {
    Rational::from_integer(x.ceil().to_integer())
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Parses `"p/q"`, `"p"`, or a plain decimal such as `"6.5"` (converted
/// exactly). Whitespace around tokens is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Domain(format!("cannot parse rational from {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Domain(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int_part: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u8).pow(frac.len() as u32);
        let frac_part = Rational::new(digits, scale);
        let whole = Rational::from_integer(int_part);
        return Ok(if s.starts_with('-') {
            whole - frac_part
        } else {
            whole + frac_part
        });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Canonical text form: reduced `p/q`, or just `p` for integers.
pub fn format_rational(x: &Rational) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal rendering for human output; falls back to `p/q` when the
/// denominator is not of the form `2^a 5^b`.
pub fn approx_decimal(x: &Rational) -> String {
    let mut d = x.denom().abs();
    for p in [BigInt::from(2u8), BigInt::from(5u8)] {
        while (&d % &p).is_zero() {
            d /= &p;
        }
    }
    if d.is_one() {
        if let Some(f) = x.to_f64() {
            return format!("{f}");
        }
    }
    format_rational(x)
}

/// Least common multiple of the denominators.
pub fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    let mut acc = BigInt::one();
    for x in xs {
        acc = acc.lcm(x.denom());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_rational("13/2").unwrap(), ratio(13, 2));
        assert_eq!(parse_rational(" -3 / 4 ").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("6.5").unwrap(), ratio(13, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.2e3").is_err());
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format_rational(&ratio(26, 4)), "13/2");
        assert_eq!(format_rational(&ratio(8, 4)), "2");
        assert_eq!(approx_decimal(&ratio(13, 2)), "6.5");
        assert_eq!(approx_decimal(&ratio(1, 3)), "1/3");
    }

    #[test]
    fn denominator_lcm() {
        let xs = [ratio(1, 2), ratio(2, 3), rat(4)];
        assert_eq!(lcm_of_denominators(xs.iter()), BigInt::from(6));
    }
}
