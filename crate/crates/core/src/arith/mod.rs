//! Exact rational arithmetic and small algebraic number fields `Q[t]/(m(t))`.
//!
//! Rationals are `num_rational::BigRational`; every value in the crate is
//! exact. Number fields are stored behind an `Arc` and shared by all of their
//! elements.

mod field;
pub(crate) mod padic;
pub(crate) mod upoly;

pub use field::{nf_arith, NFElem, NfOp, NumberField};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `a` or `a/b`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

/// Canonical text form: `n` or `n/d`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root of a rational, if it is a perfect square.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Least common multiple of the denominators.
pub(crate) fn common_denom<'a>(it: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Bit length of the largest numerator/denominator.
pub fn rat_bits(r: &Rat) -> u64 {
    r.numer().bits().max(r.denom().bits())
}
