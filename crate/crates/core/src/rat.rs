//! Exact rational scalars.
//!
//! Every probability, inner product and average in the crate is a [`Rat`].
//! The textual forms used on the wire are `num/den` (always carrying the
//! denominator) and the compact form, which drops a unit denominator.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_biguint(n: &BigUint) -> Rat {
    Rat::from_integer(BigInt::from(n.clone()))
}

/// Integer power with a signed exponent; `x^0 = 1` including `x = 0`.
pub fn pow(x: &Rat, e: i32) -> Rat {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Parses an exact rational from `p/q` or an integer. Floats are rejected.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = |reason: &str| Error::parse(t, reason);
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("expected an integer or p/q"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| bad("expected an integer denominator"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rat::new(num, den))
}

pub fn parse_theta(s: &str) -> Result<Rat> {
    let theta = parse_rat(s)?;
    if !theta.is_positive() {
        return Err(Error::InvalidTheta(s.to_string()));
    }
    Ok(theta)
}

/// `num/den` in lowest terms, denominator always present.
pub fn to_fraction_string(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// `num/den`, or just `num` when the denominator is one.
pub fn to_compact_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        to_fraction_string(x)
    }
}

/// Binomial coefficient C(n, k) as a rational; zero when k > n.
pub fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

/// Falling factorial n(n-1)...(n-m+1).
pub fn falling_factorial(n: usize, m: usize) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    (0..m).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}
