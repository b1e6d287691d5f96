//! Small helpers around arbitrary-precision rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number used for coefficients, valuations and log-radii.
pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// p-adic valuation of a nonzero integer.
pub fn vp_int(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut m = n.abs();
    let mut v = 0;
    loop {
        let (quo, rem) = m.div_rem(&p);
        if !rem.is_zero() {
            return v;
        }
        m = quo;
        v += 1;
    }
}

/// p-adic valuation of a rational, `None` for zero.
pub fn vp_rat(x: &Q, p: u64) -> Option<i64> {
    if x.is_zero() {
        None
    } else {
        Some(vp_int(x.numer(), p) - vp_int(x.denom(), p))
    }
}

/// Reduction of a p-integral rational into `0..p`.
pub fn mod_p(x: &Q, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = x.denom().mod_floor(&pb);
    if den.is_zero() {
        return None;
    }
    let num = x.numer().mod_floor(&pb);
    // p is prime, so den^(p-2) is the inverse of den
    let inv = den.modpow(&BigInt::from(p - 2), &pb);
    (num * inv).mod_floor(&pb).to_u64()
}

pub fn pow_q(x: &Q, e: i64) -> Q {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

pub fn min_q<'a>(a: &'a Q, b: &'a Q) -> &'a Q {
    if a <= b {
        a
    } else {
        b
    }
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

pub fn to_f64(x: &Q) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

/// Exact text form: "a/b", or "a" for integers.
pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

pub fn midpoint(a: &Q, b: &Q) -> Q {
    (a + b) / qi(2)
}
