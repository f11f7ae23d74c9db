//! Scalar abstraction for the generic polynomial and matrix cores, plus a
//! few exact-number helpers used throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

/// Coefficient ring for the generic cores.
///
/// `BigInt`, `BigRational`, and `f64` all satisfy this; exact-only
/// algorithms are implemented on the concrete aliases instead.
pub trait Coeff: Clone + Num + Signed {}

impl<T: Clone + Num + Signed> Coeff for T {}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// 1/10^k, the usual way tolerances are written here.
pub fn rat_pow10_inv(k: u32) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(10u32).pow(k))
}

/// Default bracket tolerance for λ and τ refinements.
pub fn default_tol() -> BigRational {
    rat_pow10_inv(12)
}

/// Exact nonnegative square root, if `n` is a perfect square.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Correctly rounded-to-nearby `f64` for an exact rational.
///
/// Scales the numerator so the integer quotient carries ~63 bits before
/// converting, so the result is accurate to about one ulp regardless of
/// how large the exact numerator and denominator have grown.
pub fn rat_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let neg = x.is_negative();
    let mut n = x.numer().abs();
    let mut d = x.denom().clone();
    let shift = n.bits() as i64 - d.bits() as i64;
    let k = 63 - shift;
    if k >= 0 {
        n <<= k as usize;
    } else {
        d <<= (-k) as usize;
    }
    let q = &n / &d;
    let v = q.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(-k as i32);
    if neg {
        -v
    } else {
        v
    }
}
