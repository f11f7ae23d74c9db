//! Dense univariate polynomials over a generic coefficient ring, with the
//! exact integer operations this crate is built on: reciprocal structure,
//! cyclotomic screening, the trace-polynomial transform, contents and
//! primitive parts, gcds, and squarefree parts.
//!
//! Coefficients are stored in ascending order of exponent, so `coeffs[i]`
//! multiplies `t^i`; the vector carries no trailing zeros and the zero
//! polynomial is the empty vector.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::scalar::Coeff;
use crate::{Error, IntPoly, RatPoly, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c · t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// The variable `t`.
    pub fn var() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as degree 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Palindromic coefficient test: `coeffs[i] == coeffs[d-i]` for all `i`.
    pub fn is_palindrome(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Monic-and-reciprocal test; the zero polynomial is rejected.
    pub fn is_monic_reciprocal(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.is_monic() && self.is_palindrome())
    }

    /// Coefficient reversal `t^d · p(1/t)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Poly::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Poly::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| T::zero() - c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let mut k = T::zero();
                for _ in 0..i {
                    k = k + T::one();
                }
                k * c.clone()
            })
            .collect();
        Poly::new(coeffs)
    }
}

impl<T: Coeff + FromPrimitive> Poly<T> {
    /// Build from ascending `i64` coefficients.
    pub fn from_ascending_i64(coeffs: &[i64]) -> Self {
        Poly::new(
            coeffs
                .iter()
                .map(|&c| T::from_i64(c).expect("i64 fits any Coeff used here"))
                .collect(),
        )
    }

    /// Build from descending `i64` coefficients (the human order).
    pub fn from_descending_i64(coeffs: &[i64]) -> Self {
        let mut v: Vec<i64> = coeffs.to_vec();
        v.reverse();
        Poly::from_ascending_i64(&v)
    }
}

impl<'a, T: Coeff> std::ops::Add for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        Poly::add(self, rhs)
    }
}

impl<'a, T: Coeff> std::ops::Sub for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        Poly::sub(self, rhs)
    }
}

impl<'a, T: Coeff> std::ops::Mul for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        Poly::mul(self, rhs)
    }
}

impl IntPoly {
    pub fn to_rat(&self) -> RatPoly {
        Poly::new(
            self.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs().iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Approximate evaluation, for seeding numeric routines only.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs().iter().rev() {
            acc = acc * x + crate::scalar::rat_to_f64(&BigRational::from_integer(c.clone()));
        }
        acc
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs()
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide out the positive content, keeping the sign of every
    /// coefficient (so sign sequences, e.g. in Sturm chains, survive).
    pub fn primitive(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Poly::new(self.coeffs().iter().map(|a| a / &c).collect())
    }

    /// Long division by a monic divisor, entirely over ℤ.
    pub fn divrem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        debug_assert!(divisor.is_monic());
        let dd = divisor.deg0();
        let mut rem = self.coeffs().to_vec();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs().iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quo[k] = c;
        }
        (Poly::new(quo), Poly::new(rem))
    }

    /// Exact division; errors unless the divisor divides exactly over ℤ.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if divisor.is_monic() {
            let (q, r) = self.divrem_monic(divisor);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            return Ok(q);
        }
        let (q, r) = self.to_rat().divrem(&divisor.to_rat());
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        q.to_int().ok_or(Error::InexactDivision)
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        other.exact_div(self).is_ok()
    }

    /// Primitive gcd with positive leading coefficient (contents ignored).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut f = self.primitive();
        let mut g = other.primitive();
        while !g.is_zero() {
            let (_, r) = f.to_rat().divrem(&g.to_rat());
            f = g;
            g = int_primitive_from_rat(&r);
        }
        if f.leading().is_some_and(|c| c.is_negative()) {
            f = f.neg();
        }
        f
    }

    /// The product of the distinct irreducible factors, primitive.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        let p = self.primitive();
        if p.deg0() == 0 {
            return Ok(p);
        }
        let g = p.gcd(&p.derivative());
        if g.deg0() == 0 {
            return Ok(p);
        }
        p.exact_div(&g).map(|q| q.primitive())
    }

    /// Multiplicity of the rational root `a` (0 when `p(a) ≠ 0`).
    pub fn multiplicity_at(&self, a: &BigRational) -> usize {
        // (den·t − num) is the primitive linear factor for a rational root
        let lin = Poly::new(vec![-a.numer().clone(), a.denom().clone()]);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.eval_rat(a).is_zero() {
            p = p.exact_div(&lin).expect("rational root divides exactly");
            m += 1;
        }
        m
    }
}

impl RatPoly {
    /// Long division over the rationals.
    pub fn divrem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.deg0();
        let dl = divisor.leading().unwrap().clone();
        let mut r = self.clone();
        let mut q = RatPoly::zero();
        while !r.is_zero() && r.deg0() >= dd {
            let k = r.deg0() - dd;
            let c = r.leading().unwrap() / &dl;
            q = q.add(&Poly::monomial(c.clone(), k));
            r = r.sub(&divisor.scale(&c).shift_up(k));
        }
        (q, r)
    }

    /// Back to integer coefficients, if every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs().len());
        for c in self.coeffs() {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(Poly::new(out))
    }
}

/// Clear denominators and divide by the content, preserving signs.
pub fn int_primitive_from_rat(p: &RatPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    Poly::new(ints).primitive()
}

/// Euler's totient by trial factorization; `n ≥ 1`.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

static CYCLOTOMIC_CACHE: OnceLock<Mutex<HashMap<u64, IntPoly>>> = OnceLock::new();

/// The n-th cyclotomic polynomial, by exact division of `t^n − 1` by all
/// lower-index cyclotomics of divisor index.
pub fn cyclotomic(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclotomic index must be ≥ 1".into()));
    }
    let cache = CYCLOTOMIC_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Ok(p.clone());
    }
    // t^n − 1
    let mut num = Poly::monomial(BigInt::one(), n as usize);
    num = num.sub(&Poly::one());
    let mut d = 1;
    while d < n {
        if n % d == 0 {
            let phi_d = cyclotomic(d)?;
            num = num.exact_div(&phi_d)?;
        }
        d += 1;
    }
    cache.lock().unwrap().insert(n, num.clone());
    Ok(num)
}

/// All `n` with `φ(n) ≤ deg`, the complete set of cyclotomic indices whose
/// polynomial could divide a polynomial of that degree. The scan bound
/// `2·deg² + 1` is a safe overestimate since `φ(n) ≥ √(n/2)`.
pub fn cyclotomic_candidates(deg: usize) -> Vec<u64> {
    let deg = deg as u64;
    (1..=2 * deg * deg + 1)
        .filter(|&n| euler_phi(n) <= deg)
        .collect()
}

/// Divide out every cyclotomic factor with multiplicity.
///
/// Returns the cyclotomic-free core and the list of `(n, multiplicity)`
/// pairs, with `core · Π Φ_n^mult` equal to the input exactly.
pub fn strip_cyclotomic_factors(p: &IntPoly) -> Result<(IntPoly, Vec<(u64, u32)>)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut core = p.clone();
    let mut factors = Vec::new();
    for n in cyclotomic_candidates(p.deg0()) {
        let phi = cyclotomic(n)?;
        let mut mult = 0u32;
        while let Ok(q) = core.exact_div(&phi) {
            core = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((n, mult));
        }
    }
    Ok((core, factors))
}

/// The trace polynomial `R` of a monic reciprocal polynomial of even
/// degree `d = 2e`, satisfying `t^e · R(t + 1/t) = S(t)` exactly.
///
/// Uses the basis `G_k(y) = t^k + t^{-k}` with `G_0 = 2`, `G_1 = y`,
/// `G_{k+1} = y·G_k − G_{k−1}`; the defining identity is re-expanded and
/// checked before returning.
pub fn trace_poly(s: &IntPoly) -> Result<IntPoly> {
    if s.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !s.is_monic() {
        return Err(Error::NotMonic);
    }
    if !s.is_palindrome() {
        return Err(Error::NotReciprocal);
    }
    let d = s.deg0();
    if d % 2 != 0 {
        return Err(Error::OddDegree(d));
    }
    let e = d / 2;
    let mut r = Poly::constant(s.coeff(e));
    let mut g_prev: IntPoly = Poly::constant(BigInt::from(2));
    let mut g_cur: IntPoly = Poly::var();
    for k in 1..=e {
        r = r.add(&g_cur.scale(&s.coeff(e - k)));
        let next = Poly::var().mul(&g_cur).sub(&g_prev);
        g_prev = g_cur;
        g_cur = next;
    }
    if expand_trace(&r, e) != *s {
        return Err(Error::Internal("trace polynomial expansion mismatch".into()));
    }
    Ok(r)
}

/// `t^e · R(t + 1/t)` expanded as a polynomial: `Σ r_k · t^{e−k} (t²+1)^k`.
pub fn expand_trace(r: &IntPoly, e: usize) -> IntPoly {
    let base: IntPoly = Poly::new(vec![BigInt::one(), BigInt::zero(), BigInt::one()]);
    let mut acc = IntPoly::zero();
    let mut base_pow = IntPoly::one();
    for k in 0..=e.min(r.deg0()) {
        let term = base_pow.scale(&r.coeff(k)).shift_up(e - k);
        acc = acc.add(&term);
        base_pow = base_pow.mul(&base);
    }
    acc
}

/// Canonical display in descending powers of `var`.
pub fn format_poly(p: &IntPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let d = p.deg0();
    for i in (0..=d).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let show_coeff = !mag.is_one() || i == 0;
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        if i >= 1 {
            if show_coeff {
                out.push('*');
            }
            out.push_str(var);
            if i >= 2 {
                out.push_str(&format!("^{i}"));
            }
        }
    }
    out
}

impl fmt::Display for Poly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(self, "t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{big, rat, rat_int};

    fn ip(desc: &[i64]) -> IntPoly {
        IntPoly::from_descending_i64(desc)
    }

    #[test]
    fn construction_trims_and_orders() {
        let p = ip(&[1, -3, 1]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.coeff(0), big(1));
        assert_eq!(p.coeff(1), big(-3));
        assert_eq!(p.coeff(2), big(1));
        assert!(IntPoly::new(vec![big(0), big(0)]).is_zero());
    }

    #[test]
    fn eval_examples() {
        let p = ip(&[1, -3, 1]);
        assert_eq!(p.eval_rat(&rat_int(1)), rat_int(-1));
        assert_eq!(p.eval_rat(&rat_int(-1)), rat_int(5));
        // (t²−3t+1)(t−1)²(t+1)² expanded
        let q = ip(&[1, -3, -1, 6, -1, -3, 1]);
        assert_eq!(q.eval_rat(&rat_int(1)), rat_int(0));
        let s = ip(&[1, -3, 1]);
        let c = ip(&[1, 0, -2, 0, 1]);
        assert_eq!(s.mul(&c), q);
    }

    #[test]
    fn monic_reciprocal_examples() {
        assert!(ip(&[1, -3, 1]).is_monic_reciprocal().unwrap());
        assert!(!ip(&[1, -3, 2]).is_monic_reciprocal().unwrap());
        assert!(ip(&[1, 1, -1, 1, 1]).is_monic_reciprocal().unwrap());
        assert!(matches!(
            IntPoly::zero().is_monic_reciprocal(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1).unwrap(), ip(&[1, -1]));
        assert_eq!(cyclotomic(2).unwrap(), ip(&[1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), ip(&[1, 0, 1]));
        assert_eq!(cyclotomic(12).unwrap(), ip(&[1, 0, -1, 0, 1]));
        // Φ_105 is the first with a coefficient of magnitude 2
        let p105 = cyclotomic(105).unwrap();
        assert_eq!(p105.deg0(), 48);
        assert!(p105.coeffs().iter().any(|c| c.abs() == big(2)));
    }

    #[test]
    fn phi_and_candidates() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(46), 22);
        let cands = cyclotomic_candidates(2);
        assert_eq!(cands, vec![1, 2, 3, 4, 6]);
    }

    #[test]
    fn strip_examples() {
        let s = ip(&[1, -3, 1]);
        let p = s.mul(&ip(&[1, 0, 1]));
        let (core, factors) = strip_cyclotomic_factors(&p).unwrap();
        assert_eq!(core, s);
        assert_eq!(factors, vec![(4, 1)]);

        let (core2, factors2) = strip_cyclotomic_factors(&s).unwrap();
        assert_eq!(core2, s);
        assert!(factors2.is_empty());

        let q = s.mul(&ip(&[1, -1]).pow(2)).mul(&ip(&[1, 1]).pow(2));
        let (core3, factors3) = strip_cyclotomic_factors(&q).unwrap();
        assert_eq!(core3, s);
        assert_eq!(factors3, vec![(1, 2), (2, 2)]);
    }

    #[test]
    fn strip_reconstructs_exactly() {
        let inputs = [
            ip(&[1, -3, 1]).mul(&ip(&[1, 0, 1])).mul(&ip(&[1, 1, 1])),
            ip(&[1, -1]).pow(3).mul(&ip(&[1, 1])),
            ip(&[1, 0, 0, 0, -1, 0, 1]),
        ];
        for p in inputs {
            let (core, factors) = strip_cyclotomic_factors(&p).unwrap();
            let mut rebuilt = core;
            for (n, mult) in factors {
                rebuilt = rebuilt.mul(&cyclotomic(n).unwrap().pow(mult));
            }
            assert_eq!(rebuilt, p);
        }
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace_poly(&ip(&[1, -3, 1])).unwrap(), ip(&[1, -3]));
        assert_eq!(trace_poly(&ip(&[1, 0, 3, 0, 1])).unwrap(), ip(&[1, 0, 1]));
        assert_eq!(
            trace_poly(&ip(&[1, -1, -1, -1, 1])).unwrap(),
            ip(&[1, -1, -3])
        );
        assert!(matches!(
            trace_poly(&ip(&[1, 0, 0, 1])),
            Err(Error::OddDegree(3))
        ));
        assert!(matches!(
            trace_poly(&ip(&[1, -3, 2])),
            Err(Error::NotReciprocal)
        ));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = ip(&[1, -1]).pow(2).mul(&ip(&[1, 1]));
        let b = ip(&[1, -1]).mul(&ip(&[1, 0, 1]));
        assert_eq!(a.gcd(&b), ip(&[1, -1]));
        let sf = a.squarefree_part().unwrap();
        assert_eq!(sf, ip(&[1, -1]).mul(&ip(&[1, 1])));
    }

    #[test]
    fn multiplicity_of_rational_roots() {
        let p = ip(&[1, -1]).pow(3).mul(&ip(&[2, 1]));
        assert_eq!(p.multiplicity_at(&rat_int(1)), 3);
        assert_eq!(p.multiplicity_at(&rat(-1, 2)), 1);
        assert_eq!(p.multiplicity_at(&rat_int(2)), 0);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(ip(&[1, -3, 1]).to_string(), "t^2 - 3*t + 1");
        assert_eq!(ip(&[1, 0, -1]).to_string(), "t^2 - 1");
        assert_eq!(ip(&[-1, 0]).to_string(), "-t");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(format_poly(&ip(&[1, -1, -3]), "x"), "x^2 - x - 3");
    }
}
