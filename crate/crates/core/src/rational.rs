//! Exact rational scalars: parsing, canonical `p/q` rendering, powers, and
//! float shadows used purely for display.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `p/q` from machine integers; panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Accepts `p/q` or a bare integer `p`, with optional sign, any size.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in rational {s:?}")))?;
    let q: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in rational {s:?}")))?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in rational {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// Canonical rendering with an explicit denominator, e.g. `3/2`, `-1/8`, `2/1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `r^e` by exponentiating numerator and denominator separately.
pub fn pow_u64(r: &Rational, e: u64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let mut base = r.clone();
    let mut acc = Rational::one();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Exact square root when both numerator and denominator are perfect squares.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// Nearest-f64 shadow; display only, never used in comparisons.
pub fn to_f64_lossy(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn log2_bigint(x: &BigInt) -> f64 {
    debug_assert!(x.is_positive());
    let bits = x.bits();
    if bits <= 53 {
        x.to_f64().expect("small BigInt converts").log2()
    } else {
        let shift = bits - 53;
        let top: BigInt = x >> shift;
        top.to_f64().expect("53-bit BigInt converts").log2() + shift as f64
    }
}

/// Base-2 logarithm of a positive rational. Absolute error stays below 2^-40
/// as long as |log2 r| <= 2^12 (it scales like |log2 r| * 2^-52).
pub fn log2_approx(r: &Rational) -> f64 {
    assert!(r.is_positive(), "log2 of a non-positive rational");
    log2_bigint(r.numer()) - log2_bigint(r.denom())
}

/// Serialize/deserialize a rational as its canonical `p/q` string.
pub mod serde_pq {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(de::Error::custom)
    }
}
