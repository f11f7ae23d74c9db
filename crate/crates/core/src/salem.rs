//! Salem polynomial classification, λ and entropy computation, and
//! coefficient-space enumeration.
//!
//! A Salem polynomial here is a monic reciprocal integer polynomial of
//! even degree ≥ 2 with exactly one pair of real roots off the unit
//! circle, both positive, and every other root on the circle. Degree two
//! is included: `t² − at + 1` with `a ≥ 3` counts. Irreducibility is
//! established structurally rather than by factoring: a polynomial with
//! this root layout factors as an irreducible Salem polynomial times
//! cyclotomics, so once all cyclotomic factors are stripped the remaining
//! core is irreducible.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::interval::{refine_root, sqrt_enclosure, RatInterval};
use crate::poly::{strip_cyclotomic_factors, trace_poly, Poly};
use crate::scalar::{default_tol, rat_int, rat_to_f64};
use crate::sturm::{cauchy_bound, isolate_and_refine, root_locations, Endpoint, RootLocationReport};
use crate::{Error, IntPoly, Result};

/// Why a polynomial failed the Salem test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectionReason {
    NotMonic,
    NotReciprocal,
    OddDegree,
    /// Every factor is cyclotomic: spectral radius 1, entropy zero.
    CyclotomicOnly,
    /// Proper cyclotomic factors present, so not a minimal polynomial.
    CyclotomicFactor,
    /// More than one reciprocal pair of roots off the unit circle.
    ExtraOffCircleRoots,
    /// The off-circle real pair is negative.
    NegativeOffCircleRoots,
    /// Non-real roots off the unit circle.
    ComplexOffCircleRoots,
}

impl std::fmt::Display for RejectionReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RejectionReason::NotMonic => "not monic",
            RejectionReason::NotReciprocal => "not reciprocal",
            RejectionReason::OddDegree => "odd degree",
            RejectionReason::CyclotomicOnly => "cyclotomic only (entropy zero)",
            RejectionReason::CyclotomicFactor => "has cyclotomic factors",
            RejectionReason::ExtraOffCircleRoots => "more than one root pair off the unit circle",
            RejectionReason::NegativeOffCircleRoots => "off-circle root pair is negative",
            RejectionReason::ComplexOffCircleRoots => "non-real roots off the unit circle",
        };
        f.write_str(s)
    }
}

/// Full verdict record for one polynomial.
#[derive(Clone, Debug)]
pub struct SalemClassification {
    pub input: IntPoly,
    pub monic: bool,
    pub reciprocal: bool,
    pub cyclotomic_factors: Vec<(u64, u32)>,
    /// Input with all cyclotomic factors divided out.
    pub core: IntPoly,
    pub locations: Option<RootLocationReport>,
    pub degree: usize,
    pub is_salem: bool,
    /// Bracket around the unique root > 1, present iff `is_salem`.
    pub lambda: Option<RatInterval>,
    pub reason: Option<RejectionReason>,
}

impl SalemClassification {
    fn reject(input: IntPoly, reason: RejectionReason) -> Self {
        let degree = input.deg0();
        let monic = input.is_monic();
        let reciprocal = !input.is_zero() && input.is_palindrome();
        SalemClassification {
            core: input.clone(),
            input,
            monic,
            reciprocal,
            cyclotomic_factors: Vec::new(),
            locations: None,
            degree,
            is_salem: false,
            lambda: None,
            reason: Some(reason),
        }
    }
}

/// Classify with the default 10⁻¹² λ tolerance.
pub fn classify_salem(s: &IntPoly) -> SalemClassification {
    classify_salem_tol(s, &default_tol())
}

pub fn classify_salem_tol(s: &IntPoly, tol: &BigRational) -> SalemClassification {
    if s.is_zero() || !s.is_monic() {
        return SalemClassification::reject(s.clone(), RejectionReason::NotMonic);
    }
    if !s.is_palindrome() {
        return SalemClassification::reject(s.clone(), RejectionReason::NotReciprocal);
    }
    let degree = s.deg0();
    if degree % 2 != 0 {
        return SalemClassification::reject(s.clone(), RejectionReason::OddDegree);
    }
    let (core, factors) = match strip_cyclotomic_factors(s) {
        Ok(v) => v,
        Err(_) => return SalemClassification::reject(s.clone(), RejectionReason::NotMonic),
    };
    if core.deg0() == 0 {
        let mut c = SalemClassification::reject(s.clone(), RejectionReason::CyclotomicOnly);
        c.cyclotomic_factors = factors;
        c.core = core;
        return c;
    }
    if !factors.is_empty() {
        let mut c = SalemClassification::reject(s.clone(), RejectionReason::CyclotomicFactor);
        c.cyclotomic_factors = factors;
        c.core = core;
        return c;
    }

    // core == input from here on
    let locations = match root_locations(s) {
        Ok(l) => l,
        Err(_) => return SalemClassification::reject(s.clone(), RejectionReason::NotReciprocal),
    };
    let reason = if locations.n_complex_off_circle > 0 {
        Some(RejectionReason::ComplexOffCircleRoots)
    } else if locations.n_real_gt1 + locations.n_real_lt_minus1 > 1 {
        Some(RejectionReason::ExtraOffCircleRoots)
    } else if locations.n_real_lt_minus1 == 1 {
        Some(RejectionReason::NegativeOffCircleRoots)
    } else if locations.n_real_gt1 == 0 {
        // no cyclotomic factors and no off-circle roots cannot happen for
        // a nonconstant core, but report it rather than panic
        Some(RejectionReason::CyclotomicOnly)
    } else {
        None
    };
    if let Some(reason) = reason {
        let mut c = SalemClassification::reject(s.clone(), reason);
        c.locations = Some(locations);
        return c;
    }

    // the verified root layout guarantees one trace root in (2, ∞)
    let lambda = lambda_bracket(s, tol).expect("salem root layout yields a λ bracket");
    SalemClassification {
        input: s.clone(),
        monic: true,
        reciprocal: true,
        cyclotomic_factors: Vec::new(),
        core: s.clone(),
        locations: Some(locations),
        degree,
        is_salem: true,
        lambda: Some(lambda),
        reason: None,
    }
}

/// Bracket of width ≤ `tol` around λ for a polynomial already known to
/// have exactly one trace root in `(2, ∞)`.
///
/// Works through the trace polynomial: bisect its root `r` in `(2, ∞)`,
/// then form `λ = (r + √(r² − 4))/2` with outward-rounded rational
/// arithmetic, shrinking the inner tolerances until the λ bracket is
/// narrow enough.
fn lambda_bracket(s: &IntPoly, tol: &BigRational) -> Result<RatInterval> {
    let r = trace_poly(s)?;
    let bound = cauchy_bound(&r);
    let four = rat_int(4);
    let two = rat_int(2);
    let mut eps = tol / &four;
    loop {
        let seed = RatInterval::new(two.clone(), bound.clone())?;
        let rb = refine_root(&r, &seed, &eps)?;
        let u_lo = rb.lo() * rb.lo() - &four;
        let u_hi = rb.hi() * rb.hi() - &four;
        let u_lo = if u_lo.is_negative() { BigRational::zero() } else { u_lo };
        let s_enc = sqrt_enclosure(&u_lo, &u_hi, &eps)?;
        let lam = RatInterval::new(
            (rb.lo() + s_enc.lo()) / &two,
            (rb.hi() + s_enc.hi()) / &two,
        )?;
        if lam.width() <= *tol {
            let sl = s.eval_rat(lam.lo());
            let sh = s.eval_rat(lam.hi());
            if sl.is_zero() || sh.is_zero() || sl.is_positive() != sh.is_positive() {
                return Ok(lam);
            }
            return Err(Error::Internal("λ bracket lost the sign change".into()));
        }
        eps /= &four;
    }
}

/// Bracket of width ≤ `tol` around the Salem root λ.
pub fn salem_lambda(s: &IntPoly, tol: &BigRational) -> Result<RatInterval> {
    let c = classify_salem_tol(s, tol);
    match (c.is_salem, c.lambda) {
        (true, Some(l)) => Ok(l),
        _ => Err(Error::NotSalem(
            c.reason.map(|r| r.to_string()).unwrap_or_else(|| "unknown".into()),
        )),
    }
}

/// `log λ` with a propagated error bound.
#[derive(Clone, Debug)]
pub struct Entropy {
    pub value: f64,
    pub error_bound: f64,
    pub lambda: RatInterval,
}

pub fn entropy(s: &IntPoly, tol: &BigRational) -> Result<Entropy> {
    let lambda = salem_lambda(s, tol)?;
    let value = rat_to_f64(&lambda.midpoint()).ln();
    // d(log x) = dx / x with x > 1, plus float slack
    let error_bound = rat_to_f64(&lambda.width()) / rat_to_f64(lambda.lo()) + 1e-15;
    Ok(Entropy { value, error_bound, lambda })
}

/// The spectrum of the induced degree-d reciprocal polynomial: λ, 1/λ,
/// and the real traces `α + ᾱ` of its unit-circle eigenvalue pairs.
#[derive(Clone, Debug)]
pub struct H2Spectrum {
    pub lambda: RatInterval,
    pub lambda_inv: RatInterval,
    pub unit_eigenvalue_traces: Vec<RatInterval>,
}

impl H2Spectrum {
    /// 2 off-circle eigenvalues plus a conjugate pair per trace.
    pub fn eigenvalue_count(&self) -> usize {
        2 + 2 * self.unit_eigenvalue_traces.len()
    }
}

pub fn h2_spectrum(s: &IntPoly, tol: &BigRational) -> Result<H2Spectrum> {
    let lambda = salem_lambda(s, tol)?;
    let lambda_inv = RatInterval::new(
        BigRational::one() / lambda.hi(),
        BigRational::one() / lambda.lo(),
    )?;
    let r = trace_poly(s)?;
    let traces = isolate_and_refine(&r, &rat_int(-2), &rat_int(2), tol)?;
    Ok(H2Spectrum { lambda, lambda_inv, unit_eigenvalue_traces: traces })
}

/// All Salem polynomials of degree `d` whose free coefficients lie in
/// `[−bound, bound]`, sorted by λ (bracket midpoint), ties broken by the
/// coefficient vector.
///
/// Only the `d/2` free coefficients of a monic reciprocal polynomial are
/// iterated; the mirror half is forced.
pub fn enumerate_salem(d: usize, bound: u32) -> Result<Vec<SalemClassification>> {
    if d < 2 || d > 22 || d % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "degree must be even and within 2..=22, got {d}"
        )));
    }
    if bound < 1 {
        return Err(Error::InvalidArgument("bound must be ≥ 1".into()));
    }
    let e = d / 2;
    let b = bound as i64;
    let span = (2 * b + 1) as usize;
    let total = span.pow(e as u32);
    let mut found = Vec::new();
    for idx in 0..total {
        let mut rem = idx;
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::one();
        coeffs[d] = BigInt::one();
        for i in 1..=e {
            let digit = (rem % span) as i64 - b;
            rem /= span;
            coeffs[i] = BigInt::from(digit);
            coeffs[d - i] = BigInt::from(digit);
        }
        let p = Poly::new(coeffs);
        let c = classify_salem(&p);
        if c.is_salem {
            found.push(c);
        }
    }
    found.sort_by(|a, b| {
        let ka = a.lambda.as_ref().unwrap().midpoint();
        let kb = b.lambda.as_ref().unwrap().midpoint();
        ka.cmp(&kb).then_with(|| {
            let ca: Vec<_> = a.input.coeffs().to_vec();
            let cb: Vec<_> = b.input.coeffs().to_vec();
            ca.cmp(&cb)
        })
    });
    Ok(found)
}

/// Sign facts every Salem polynomial satisfies: `S(1) < 0 < S(−1)`.
pub fn salem_sign_pattern(s: &IntPoly) -> bool {
    s.eval_rat(&rat_int(1)).is_negative() && s.eval_rat(&rat_int(-1)).is_positive()
}

/// Count λ-bracket roots rigorously: exactly one root of `s` inside the
/// bracket and none beyond it, by Sturm counts independent of any float.
pub fn lambda_bracket_is_exact(s: &IntPoly, lambda: &RatInterval) -> Result<bool> {
    let inside = crate::sturm::count_with_multiplicity(
        s,
        &Endpoint::Finite(lambda.lo().clone()),
        &Endpoint::Finite(lambda.hi().clone()),
    )?;
    let beyond = crate::sturm::count_with_multiplicity(
        s,
        &Endpoint::Finite(lambda.hi().clone()),
        &Endpoint::PosInf,
    )?;
    Ok(inside == 1 && beyond == 0)
}
