//! Rigorous real-root counting with Sturm sequences over exact rationals,
//! and the root-location analysis of reciprocal polynomials through their
//! trace polynomials.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::interval::{refine_root, RatInterval};
use crate::poly::{int_primitive_from_rat, trace_poly, Poly};
use crate::scalar::rat_int;
use crate::{Error, IntPoly, Result};

/// An interval endpoint for root counting.
#[derive(Clone, Debug, PartialEq)]
pub enum Endpoint {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Endpoint {
    pub fn finite(x: BigRational) -> Self {
        Endpoint::Finite(x)
    }

    pub fn int(n: i64) -> Self {
        Endpoint::Finite(rat_int(n))
    }

    fn leq(&self, other: &Endpoint) -> bool {
        match (self, other) {
            (Endpoint::NegInf, _) | (_, Endpoint::PosInf) => true,
            (Endpoint::PosInf, _) | (_, Endpoint::NegInf) => false,
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a <= b,
        }
    }
}

/// Sturm chain of a squarefree primitive integer polynomial.
///
/// Remainders are computed over the rationals and stored as primitive
/// integer polynomials with their signs preserved, which keeps coefficient
/// growth under control without touching the sign sequence.
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Build the chain for `q`, which must be squarefree.
    pub fn new(q: &IntPoly) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![q.primitive()];
        let d = q.derivative();
        if !d.is_zero() {
            chain.push(d.primitive());
            loop {
                let a = &chain[chain.len() - 2];
                let b = &chain[chain.len() - 1];
                let (_, r) = a.to_rat().divrem(&b.to_rat());
                if r.is_zero() {
                    break;
                }
                let neg_r = int_primitive_from_rat(&r).neg();
                chain.push(neg_r);
            }
        }
        Ok(SturmChain { chain })
    }

    fn sign_at(p: &IntPoly, x: &Endpoint) -> i8 {
        if p.is_zero() {
            return 0;
        }
        match x {
            Endpoint::Finite(v) => {
                let y = p.eval_rat(v);
                if y.is_zero() {
                    0
                } else if y.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Endpoint::PosInf => {
                if p.leading().unwrap().is_positive() {
                    1
                } else {
                    -1
                }
            }
            Endpoint::NegInf => {
                let lead = if p.leading().unwrap().is_positive() { 1 } else { -1 };
                if p.deg0() % 2 == 0 {
                    lead
                } else {
                    -lead
                }
            }
        }
    }

    /// Sign variations of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Endpoint) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for p in &self.chain {
            let s = Self::sign_at(p, x);
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
///
/// Total on all nonzero inputs: the squarefree part is taken first, and
/// rational roots sitting exactly on a finite endpoint are divided out so
/// the Sturm count is well defined.
pub fn count_distinct(p: &IntPoly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !lo.leq(hi) {
        return Ok(0);
    }
    let mut q = p.squarefree_part()?;
    if q.deg0() == 0 {
        return Ok(0);
    }
    for e in [lo, hi] {
        if let Endpoint::Finite(a) = e {
            if q.eval_rat(a).is_zero() {
                let lin = Poly::new(vec![-a.numer().clone(), a.denom().clone()]);
                q = q.exact_div(&lin)?;
            }
        }
    }
    if q.deg0() == 0 {
        return Ok(0);
    }
    if let (Endpoint::Finite(a), Endpoint::Finite(b)) = (lo, hi) {
        if a == b {
            return Ok(0);
        }
    }
    let chain = SturmChain::new(&q)?;
    let va = chain.variations(lo);
    let vb = chain.variations(hi);
    Ok(va.saturating_sub(vb))
}

/// Number of real roots of `p` in `(lo, hi)` counted with multiplicity.
///
/// Peels one squarefree layer at a time: each pass counts every remaining
/// root once and then lowers all multiplicities by one.
pub fn count_with_multiplicity(p: &IntPoly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rest = p.primitive();
    let mut total = 0;
    while rest.deg0() > 0 {
        let q = rest.squarefree_part()?;
        total += count_distinct(&q, lo, hi)?;
        rest = rest.exact_div(&q)?;
    }
    Ok(total)
}

/// Isolating brackets (each containing exactly one distinct root, with
/// endpoints that are not roots) for all distinct roots of `p` inside the
/// finite open interval `(lo, hi)`, in increasing order.
pub fn isolate_distinct_roots(
    p: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<Vec<RatInterval>> {
    let q = p.squarefree_part()?;
    if q.deg0() == 0 {
        return Ok(Vec::new());
    }
    let two = rat_int(2);
    let mut out: Vec<RatInterval> = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = count_distinct(&q, &Endpoint::Finite(a.clone()), &Endpoint::Finite(b.clone()))?;
        if n == 0 {
            continue;
        }
        if n == 1 && !q.eval_rat(&a).is_zero() && !q.eval_rat(&b).is_zero() {
            out.push(RatInterval::new(a, b)?);
            continue;
        }
        // split at a midpoint that is not itself a root
        let mut m = (&a + &b) / &two;
        while q.eval_rat(&m).is_zero() {
            m = (&m + &b) / &two;
        }
        stack.push((a, m.clone()));
        stack.push((m, b));
    }
    out.sort_by(|x, y| x.lo().cmp(y.lo()));
    Ok(out)
}

/// Where the roots of a monic reciprocal polynomial of even degree live,
/// all counts with multiplicity.
///
/// Derived entirely from the trace polynomial `R`: a root of `R` in
/// `(2,∞)` is a positive real reciprocal pair, in `(−∞,−2)` a negative
/// one, in `(−2,2)` a conjugate pair on the unit circle, at `±2` a root of
/// the polynomial at `t = ±1` (with doubled multiplicity), and a non-real
/// root of `R` a reciprocal pair strictly off the unit circle.
#[derive(Clone, Debug, PartialEq)]
pub struct RootLocationReport {
    pub degree: usize,
    /// real roots in (1, ∞)
    pub n_real_gt1: usize,
    /// real roots in (0, 1) — reciprocal mirrors of the previous count
    pub n_real_in_unit: usize,
    /// real roots in (−∞, −1)
    pub n_real_lt_minus1: usize,
    /// real roots in (−1, 0)
    pub n_real_in_neg_unit: usize,
    /// non-real roots on the unit circle
    pub n_on_circle: usize,
    pub at_one: usize,
    pub at_minus_one: usize,
    /// non-real roots strictly off the unit circle
    pub n_complex_off_circle: usize,
}

impl RootLocationReport {
    pub fn total(&self) -> usize {
        self.n_real_gt1
            + self.n_real_in_unit
            + self.n_real_lt_minus1
            + self.n_real_in_neg_unit
            + self.n_on_circle
            + self.at_one
            + self.at_minus_one
            + self.n_complex_off_circle
    }
}

pub fn root_locations(s: &IntPoly) -> Result<RootLocationReport> {
    let r = trace_poly(s)?;
    let e = s.deg0() / 2;

    let at2 = r.multiplicity_at(&rat_int(2));
    let atm2 = r.multiplicity_at(&rat_int(-2));
    let mut core = r;
    let lin2: IntPoly = Poly::from_descending_i64(&[1, -2]);
    let linm2: IntPoly = Poly::from_descending_i64(&[1, 2]);
    for _ in 0..at2 {
        core = core.exact_div(&lin2)?;
    }
    for _ in 0..atm2 {
        core = core.exact_div(&linm2)?;
    }

    let gt2 = count_with_multiplicity(&core, &Endpoint::int(2), &Endpoint::PosInf)?;
    let ltm2 = count_with_multiplicity(&core, &Endpoint::NegInf, &Endpoint::int(-2))?;
    let inside = count_with_multiplicity(&core, &Endpoint::int(-2), &Endpoint::int(2))?;
    let nonreal = e - at2 - atm2 - gt2 - ltm2 - inside;

    let report = RootLocationReport {
        degree: s.deg0(),
        n_real_gt1: gt2,
        n_real_in_unit: gt2,
        n_real_lt_minus1: ltm2,
        n_real_in_neg_unit: ltm2,
        n_on_circle: 2 * inside,
        at_one: 2 * at2,
        at_minus_one: 2 * atm2,
        n_complex_off_circle: 2 * nonreal,
    };
    debug_assert_eq!(report.total(), s.deg0());
    Ok(report)
}

/// Cauchy root bound `1 + max |aᵢ|` for a monic integer polynomial.
pub fn cauchy_bound(p: &IntPoly) -> BigRational {
    let m = p
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(num_bigint::BigInt::zero);
    BigRational::from_integer(m + 1)
}

/// Refine every isolated root to brackets of width ≤ `tol`.
pub fn isolate_and_refine(
    p: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
    tol: &BigRational,
) -> Result<Vec<RatInterval>> {
    let q = p.squarefree_part()?;
    isolate_distinct_roots(&q, lo, hi)?
        .into_iter()
        .map(|b| refine_root(&q, &b, tol))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn ip(desc: &[i64]) -> IntPoly {
        IntPoly::from_descending_i64(desc)
    }

    #[test]
    fn count_examples() {
        let linear = ip(&[1, -3]);
        assert_eq!(count_distinct(&linear, &Endpoint::int(2), &Endpoint::PosInf).unwrap(), 1);
        let quad = ip(&[1, -1, -3]); // roots (1±√13)/2 ≈ 2.30, −1.30
        assert_eq!(count_distinct(&quad, &Endpoint::int(-2), &Endpoint::int(2)).unwrap(), 1);
        assert_eq!(count_distinct(&quad, &Endpoint::int(2), &Endpoint::PosInf).unwrap(), 1);
        assert_eq!(count_distinct(&quad, &Endpoint::NegInf, &Endpoint::PosInf).unwrap(), 2);
    }

    #[test]
    fn count_handles_roots_at_endpoints() {
        let p = ip(&[1, 0, -4]); // roots ±2
        assert_eq!(count_distinct(&p, &Endpoint::int(-2), &Endpoint::int(2)).unwrap(), 0);
        assert_eq!(count_distinct(&p, &Endpoint::int(-3), &Endpoint::int(3)).unwrap(), 2);
        assert_eq!(count_distinct(&p, &Endpoint::int(0), &Endpoint::PosInf).unwrap(), 1);
    }

    #[test]
    fn count_with_multiplicity_works() {
        let p = ip(&[1, -1]).pow(3).mul(&ip(&[1, -5]).pow(2));
        assert_eq!(
            count_with_multiplicity(&p, &Endpoint::int(0), &Endpoint::PosInf).unwrap(),
            5
        );
        assert_eq!(
            count_with_multiplicity(&p, &Endpoint::int(0), &Endpoint::int(2)).unwrap(),
            3
        );
    }

    #[test]
    fn isolation_separates_close_roots() {
        // roots 1, 2, and 2.25
        let p = ip(&[1, -1]).mul(&ip(&[1, -2])).mul(&ip(&[4, -9]));
        let roots = isolate_distinct_roots(&p, &rat(-10, 1), &rat(10, 1)).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots[0].contains(&rat(1, 1)));
        assert!(roots[1].contains(&rat(2, 1)));
        assert!(roots[2].contains(&rat(9, 4)));
    }

    #[test]
    fn locations_of_salem_quadratic() {
        let rep = root_locations(&ip(&[1, -3, 1])).unwrap();
        assert_eq!(rep.n_real_gt1, 1);
        assert_eq!(rep.n_real_in_unit, 1);
        assert_eq!(rep.n_on_circle, 0);
        assert_eq!(rep.n_complex_off_circle, 0);
        assert_eq!(rep.total(), 2);
    }

    #[test]
    fn locations_of_biquadratic_off_circle() {
        // t⁴+3t²+1: purely imaginary roots with |t| ≠ 1
        let rep = root_locations(&ip(&[1, 0, 3, 0, 1])).unwrap();
        assert_eq!(rep.n_real_gt1, 0);
        assert_eq!(rep.n_on_circle, 0);
        assert_eq!(rep.n_complex_off_circle, 4);
        assert_eq!(rep.total(), 4);
    }

    #[test]
    fn locations_with_unit_roots() {
        let q = ip(&[1, -3, 1])
            .mul(&ip(&[1, -1]).pow(2))
            .mul(&ip(&[1, 1]).pow(2));
        let rep = root_locations(&q).unwrap();
        assert_eq!(rep.at_one, 2);
        assert_eq!(rep.at_minus_one, 2);
        assert_eq!(rep.n_real_gt1, 1);
        assert_eq!(rep.total(), 6);
    }

    #[test]
    fn locations_of_cyclotomic() {
        let rep = root_locations(&ip(&[1, 0, 1])).unwrap();
        assert_eq!(rep.n_on_circle, 2);
        assert_eq!(rep.total(), 2);
    }
}
