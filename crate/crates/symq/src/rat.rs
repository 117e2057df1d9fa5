//! Exact rational scalars and parsing/formatting helpers.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number with arbitrary-precision numerator and denominator.
/// `Ratio` keeps the fraction reduced and the denominator positive.
pub type Rat = Ratio<BigInt>;

/// Shorthand for `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// n! as an exact rational.
pub fn factorial(n: u32) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    Rat::from_integer(acc)
}

/// Binomial coefficient C(n, k) as an exact rational.
pub fn binomial(n: u32, k: u32) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k as u64 {
        acc = acc * (n as u64 - j) / (j + 1);
    }
    Rat::from_integer(acc)
}

/// a^k for integer k (negative k inverts; errors on 0^negative).
pub fn pow_i(a: &Rat, k: i64) -> Result<Rat> {
    if k >= 0 {
        Ok(a.pow(k as i32))
    } else if a.is_zero() {
        Err(Error::Domain("0 raised to a negative power".into()))
    } else {
        Ok(a.pow(-k as i32).recip())
    }
}

/// Parses "num/den", "num", or a leading-sign variant thereof.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Usage(format!("invalid integer `{t}` in rational")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Usage(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(num, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Formats a rational as "num" or "num/den" (reduced, denominator > 1 only).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rational to nearest f64 (numerator/denominator division).
pub fn rat_to_f64(r: &Rat) -> f64 {
    // Good enough for the magnitudes used here; exact paths never round-trip
    // through this.
    let n = r.numer();
    let d = r.denom();
    match (n.to_string().parse::<f64>(), d.to_string().parse::<f64>()) {
        (Ok(nf), Ok(df)) => nf / df,
        _ => f64::NAN,
    }
}

/// True if |r| < 1.
pub fn abs_lt_one(r: &Rat) -> bool {
    r.abs() < Rat::one()
}
