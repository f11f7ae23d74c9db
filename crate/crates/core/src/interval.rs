//! Exact rational brackets and certified bisection refinement.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::scalar::rat_to_f64;
use crate::{Error, IntPoly, Result};

/// A closed interval with exact rational endpoints, `lo ≤ hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument("interval endpoints out of order".into()));
        }
        Ok(RatInterval { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn midpoint_f64(&self) -> f64 {
        rat_to_f64(&self.midpoint())
    }
}

/// Bisect a sign-changing bracket down to width ≤ `tol`.
///
/// The returned interval still brackets the root: either its endpoints
/// evaluate with opposite signs or an endpoint hits the root exactly.
pub fn refine_root(p: &IntPoly, bracket: &RatInterval, tol: &BigRational) -> Result<RatInterval> {
    let mut lo = bracket.lo().clone();
    let mut hi = bracket.hi().clone();
    let mut slo = p.eval_rat(&lo);
    let shi = p.eval_rat(&hi);
    if slo.is_zero() {
        return Ok(RatInterval::point(lo));
    }
    if shi.is_zero() {
        return Ok(RatInterval::point(hi));
    }
    if slo.is_positive() == shi.is_positive() {
        return Err(Error::NoSignChange);
    }
    let two = BigRational::from_integer(2.into());
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        let smid = p.eval_rat(&mid);
        if smid.is_zero() {
            return Ok(RatInterval::point(mid));
        }
        if smid.is_positive() == slo.is_positive() {
            lo = mid;
            slo = smid;
        } else {
            hi = mid;
        }
    }
    RatInterval::new(lo, hi)
}

/// Rational `s` with `s² ≤ x` and `(s + eps)² > x`; requires `x ≥ 0`.
pub fn sqrt_lower(x: &BigRational, eps: &BigRational) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let one = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    let mut a = BigRational::zero();
    let mut b = if *x > one { x.clone() } else { one };
    while &b - &a > *eps {
        let m = (&a + &b) / &two;
        if &m * &m <= *x {
            a = m;
        } else {
            b = m;
        }
    }
    a
}

/// Rational `s` with `s² ≥ x` and `(s − eps)² < x`; requires `x ≥ 0`.
pub fn sqrt_upper(x: &BigRational, eps: &BigRational) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let one = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    let mut a = BigRational::zero();
    let mut b = if *x > one { x.clone() } else { one };
    while &b - &a > *eps {
        let m = (&a + &b) / &two;
        if &m * &m >= *x {
            b = m;
        } else {
            a = m;
        }
    }
    b
}

/// Enclosure of `√[lo, hi]`, outward rounded to within `eps` per side.
pub fn sqrt_enclosure(lo: &BigRational, hi: &BigRational, eps: &BigRational) -> Result<RatInterval> {
    if lo.is_negative() {
        return Err(Error::InvalidArgument("sqrt of a negative bound".into()));
    }
    RatInterval::new(sqrt_lower(lo, eps), sqrt_upper(hi, eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::scalar::{rat, rat_int, rat_pow10_inv};

    fn ip(desc: &[i64]) -> IntPoly {
        IntPoly::from_descending_i64(desc)
    }

    #[test]
    fn refine_linear() {
        let p = ip(&[1, -3]);
        let b = RatInterval::new(rat_int(2), rat_int(4)).unwrap();
        let r = refine_root(&p, &b, &rat(1, 100)).unwrap();
        assert!(r.contains(&rat_int(3)));
        assert!(r.width() <= rat(1, 100));
    }

    #[test]
    fn refine_quadratic_root() {
        // (1+√13)/2 ≈ 2.302775637731995
        let p = ip(&[1, -1, -3]);
        let b = RatInterval::new(rat_int(2), rat_int(3)).unwrap();
        let tol = rat_pow10_inv(12);
        let r = refine_root(&p, &b, &tol).unwrap();
        assert!(r.width() <= tol);
        assert!((r.midpoint_f64() - 2.302775637731995).abs() < 1e-9);
        // bracket still straddles the root
        let sl = p.eval_rat(r.lo());
        let sh = p.eval_rat(r.hi());
        assert!(sl.is_negative() && sh.is_positive());
    }

    #[test]
    fn refine_salem_quadratic() {
        // (3+√5)/2 ≈ 2.618033988749895
        let p = ip(&[1, -3, 1]);
        let b = RatInterval::new(rat_int(2), rat_int(3)).unwrap();
        let r = refine_root(&p, &b, &rat_pow10_inv(12)).unwrap();
        assert!((r.midpoint_f64() - 2.618033988749895).abs() < 1e-12);
    }

    #[test]
    fn refine_requires_sign_change() {
        let p = ip(&[1, 0, 1]);
        let b = RatInterval::new(rat_int(0), rat_int(1)).unwrap();
        assert!(matches!(
            refine_root(&p, &b, &rat(1, 10)),
            Err(Error::NoSignChange)
        ));
    }

    #[test]
    fn refine_hits_exact_root() {
        let p: IntPoly = Poly::new(vec![(-2i64).into(), 1i64.into()]);
        let b = RatInterval::new(rat_int(0), rat_int(4)).unwrap();
        let r = refine_root(&p, &b, &rat(1, 1000)).unwrap();
        assert_eq!(r, RatInterval::point(rat_int(2)));
    }

    #[test]
    fn sqrt_bounds_enclose() {
        let eps = rat_pow10_inv(10);
        let lo = sqrt_lower(&rat_int(2), &eps);
        let hi = sqrt_upper(&rat_int(2), &eps);
        assert!(&lo * &lo <= rat_int(2));
        assert!(&hi * &hi >= rat_int(2));
        assert!(&hi - &lo <= rat(2, 10_000_000_000i64));
    }
}
