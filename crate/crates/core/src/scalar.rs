//! The coefficient field: exact rationals.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so it is used directly. Another exact field could be
//! substituted by swapping this alias and the few constructors below.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Scalar = num_rational::BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den`; panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_unit_magnitude(c: &Scalar) -> bool {
    c.abs().is_one()
}

/// Parses `-?digits(/digits)?` with nothing else around it.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

/// `1 + a + ... + a^(k-1)` for `k >= 0`.
pub fn geometric_sum(a: &Scalar, k: u32) -> Scalar {
    let mut sum = Scalar::zero();
    let mut pow = Scalar::one();
    for _ in 0..k {
        sum += &pow;
        pow *= a;
    }
    sum
}
