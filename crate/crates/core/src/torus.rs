//! Realizability of a Salem number's logarithm as the entropy of a
//! two-dimensional complex torus automorphism, with constructive
//! witnesses.
//!
//! The pipeline for a Salem polynomial `S`:
//!
//! * pick a cofactor `C` so that `Q = S·C` is a monic reciprocal sextic
//!   with only two roots off the unit circle (trivial for degree six,
//!   `(t−1)²(t+1)²` for degree two, one of five quadratics for degree
//!   four);
//! * test the square property: `−Q(1) = m²` and `Q(−1) = n²`;
//! * from `m, n` derive `j = (m+n)/2`, `k = (n−m)/2` and the quartic
//!   `P = t⁴ + jt³ − at² + kt + 1` whose roots pair-multiply to the roots
//!   of `Q`;
//! * realize `P` as the companion matrix `F1` (the action on first
//!   cohomology) and its exterior square `F2` (the action on second
//!   cohomology), and verify everything exactly, including that `F2`
//!   preserves the rank-6 wedge intersection form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::interval::RatInterval;
use crate::lattice::Gram;
use crate::matrix::Mat;
use crate::poly::Poly;
use crate::salem::{classify_salem_tol, SalemClassification};
use crate::scalar::{default_tol, perfect_sqrt};
use crate::sturm::{count_with_multiplicity, Endpoint};
use crate::{Error, IntMat, IntPoly, Result};

/// Fixed basis order of the exterior square.
pub const WEDGE_BASIS: &str = "e1^e2,e1^e3,e1^e4,e2^e3,e2^e4,e3^e4";

const WEDGE_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Coefficient view `Q = t⁶ + at⁵ + bt⁴ + ct³ + bt² + at + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SexticView {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl SexticView {
    pub fn from_poly(q: &IntPoly) -> Result<Self> {
        if q.deg0() != 6 {
            return Err(Error::DegreeMismatch { expected: 6, got: q.deg0() });
        }
        if !q.is_monic_reciprocal()? {
            return Err(Error::NotReciprocal);
        }
        Ok(SexticView { a: q.coeff(5), b: q.coeff(4), c: q.coeff(3) })
    }

    pub fn to_poly(&self) -> IntPoly {
        Poly::new(vec![
            BigInt::one(),
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.b.clone(),
            self.a.clone(),
            BigInt::one(),
        ])
    }
}

/// Coefficient view `P = t⁴ + jt³ − at² + kt + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticView {
    pub j: BigInt,
    pub k: BigInt,
    pub a: BigInt,
}

impl QuarticView {
    pub fn to_poly(&self) -> IntPoly {
        Poly::new(vec![
            BigInt::one(),
            self.k.clone(),
            -self.a.clone(),
            self.j.clone(),
            BigInt::one(),
        ])
    }
}

/// Result of the square-property test on a reciprocal sextic.
#[derive(Clone, Debug)]
pub struct SquareProperty {
    pub holds: bool,
    pub q_at_one: BigInt,
    pub q_at_minus_one: BigInt,
    /// Nonnegative root of `−Q(1)` when it is a perfect square.
    pub m: Option<BigInt>,
    /// Nonnegative root of `Q(−1)` when it is a perfect square.
    pub n: Option<BigInt>,
}

/// `−Q(1)` and `Q(−1)` must both be perfect squares of integers.
pub fn square_property(q: &IntPoly) -> Result<SquareProperty> {
    let _view = SexticView::from_poly(q)?;
    let q1 = q.eval(&BigInt::one());
    let qm1 = q.eval(&BigInt::from(-1));
    let m = perfect_sqrt(&-&q1);
    let n = perfect_sqrt(&qm1);
    Ok(SquareProperty {
        holds: m.is_some() && n.is_some(),
        q_at_one: q1,
        q_at_minus_one: qm1,
        m,
        n,
    })
}

/// `j = (m+n)/2`, `k = (n−m)/2`; `m` and `n` must share a parity.
pub fn derive_jk(m: &BigInt, n: &BigInt) -> Result<(BigInt, BigInt)> {
    if ((m + n) % BigInt::from(2)) != BigInt::zero() {
        return Err(Error::Internal(format!(
            "square roots m={m}, n={n} differ in parity"
        )));
    }
    Ok(((m + n) / 2, (n - m) / 2))
}

/// Derive the quartic `P` from a sextic with the square property, checking
/// the coefficient identities `jk = b + 1` and `j² + k² = −c − 2a`.
pub fn derive_p_from_q(q: &IntPoly) -> Result<(IntPoly, BigInt, BigInt)> {
    let view = SexticView::from_poly(q)?;
    let sp = square_property(q)?;
    let (Some(m), Some(n)) = (sp.m, sp.n) else {
        return Err(Error::SquarePropertyFails(format!(
            "Q(1) = {}, Q(-1) = {}",
            sp.q_at_one, sp.q_at_minus_one
        )));
    };
    let (j, k) = derive_jk(&m, &n)?;
    if &j * &k != &view.b + BigInt::one() {
        return Err(Error::Internal("jk = b + 1 fails".into()));
    }
    if &j * &j + &k * &k != -&view.c - &view.a * 2 {
        return Err(Error::Internal("j² + k² = -c - 2a fails".into()));
    }
    let p = QuarticView { j: j.clone(), k: k.clone(), a: view.a }.to_poly();
    Ok((p, j, k))
}

/// Companion matrix of a monic quartic with constant term 1: subdiagonal
/// ones, negated coefficients in the last column. Its determinant is 1 and
/// its characteristic polynomial is `p`.
pub fn companion(p: &IntPoly) -> Result<IntMat> {
    if p.deg0() != 4 || !p.is_monic() {
        return Err(Error::DegreeMismatch { expected: 4, got: p.deg0() });
    }
    if !p.coeff(0).is_one() {
        return Err(Error::InvalidArgument("constant term must be 1".into()));
    }
    let mut m: IntMat = Mat::zeros(4, 4);
    for i in 0..3 {
        m.set(i + 1, i, BigInt::one());
    }
    for i in 0..4 {
        m.set(i, 3, -p.coeff(i));
    }
    Ok(m)
}

/// Action of a 4×4 matrix on the exterior square, in the fixed basis
/// order `e1∧e2, e1∧e3, e1∧e4, e2∧e3, e2∧e4, e3∧e4`; entries are the
/// 2×2 minors of `m`.
pub fn wedge_square(m: &IntMat) -> Result<IntMat> {
    if m.nrows() != 4 || m.ncols() != 4 {
        return Err(Error::DimensionMismatch("wedge square needs a 4x4 matrix".into()));
    }
    Ok(Mat::from_fn(6, 6, |r, c| {
        let (i, j) = WEDGE_PAIRS[r];
        let (k, l) = WEDGE_PAIRS[c];
        m.get(i, k) * m.get(j, l) - m.get(i, l) * m.get(j, k)
    }))
}

/// Gram matrix of the wedge pairing `u∧v = ⟨u,v⟩·e1∧e2∧e3∧e4` on the
/// exterior square of ℤ⁴: even, unimodular, signature (3,3).
pub fn wedge_gram() -> Gram {
    let rows: [&[i64]; 6] = [
        &[0, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, -1, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, 1, 0, 0, 0],
        &[0, -1, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0, 0],
    ];
    let m = IntMat::from_i64_rows(&rows).expect("fixed shape");
    Gram::new(m).expect("symmetric by construction")
}

/// The five quadratic cofactors that keep `S·C` reciprocal of degree six
/// with no new roots off the unit circle, in fixed search order.
pub fn quartic_cofactors() -> [IntPoly; 5] {
    [
        IntPoly::from_descending_i64(&[1, -2, 1]),
        IntPoly::from_descending_i64(&[1, -1, 1]),
        IntPoly::from_descending_i64(&[1, 0, 1]),
        IntPoly::from_descending_i64(&[1, 1, 1]),
        IntPoly::from_descending_i64(&[1, 2, 1]),
    ]
}

/// Which of the three degree-four value conditions hold for `S`.
#[derive(Clone, Debug)]
pub struct Deg4Analysis {
    pub s_at_one: BigInt,
    pub s_at_minus_one: BigInt,
    /// `S(1) = −m²`
    pub case_a: bool,
    /// `S(−1) = n²`
    pub case_b: bool,
    /// `S(1) = −m²/2` and `S(−1) = n²/2`
    pub case_c: bool,
    /// Square-property outcome of `S·C` for each of the five cofactors.
    pub cofactor_holds: Vec<(IntPoly, bool)>,
}

impl Deg4Analysis {
    pub fn any_case(&self) -> bool {
        self.case_a || self.case_b || self.case_c
    }

    pub fn first_working_cofactor(&self) -> Option<&IntPoly> {
        self.cofactor_holds.iter().find(|(_, ok)| *ok).map(|(c, _)| c)
    }
}

pub fn analyze_deg4(s: &IntPoly) -> Result<Deg4Analysis> {
    if s.deg0() != 4 {
        return Err(Error::DegreeMismatch { expected: 4, got: s.deg0() });
    }
    let s1 = s.eval(&BigInt::one());
    let sm1 = s.eval(&BigInt::from(-1));
    let case_a = perfect_sqrt(&-&s1).is_some();
    let case_b = perfect_sqrt(&sm1).is_some();
    let case_c = perfect_sqrt(&(-&s1 * BigInt::from(2))).is_some()
        && perfect_sqrt(&(&sm1 * BigInt::from(2))).is_some();
    let mut cofactor_holds = Vec::new();
    for c in quartic_cofactors() {
        let q = s.mul(&c);
        let ok = square_property(&q)?.holds;
        cofactor_holds.push((c, ok));
    }
    Ok(Deg4Analysis { s_at_one: s1, s_at_minus_one: sm1, case_a, case_b, case_c, cofactor_holds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessCase {
    Deg6,
    Deg4a,
    Deg4b,
    Deg4c,
    Deg2,
}

impl WitnessCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            WitnessCase::Deg6 => "deg6",
            WitnessCase::Deg4a => "deg4a",
            WitnessCase::Deg4b => "deg4b",
            WitnessCase::Deg4c => "deg4c",
            WitnessCase::Deg2 => "deg2",
        }
    }

    pub fn from_str_tag(s: &str) -> Result<Self> {
        Ok(match s {
            "deg6" => WitnessCase::Deg6,
            "deg4a" => WitnessCase::Deg4a,
            "deg4b" => WitnessCase::Deg4b,
            "deg4c" => WitnessCase::Deg4c,
            "deg2" => WitnessCase::Deg2,
            other => return Err(Error::FileFormat(format!("unknown case tag {other:?}"))),
        })
    }
}

/// Everything needed to reproduce and re-verify a realizability proof.
#[derive(Clone, Debug)]
pub struct TorusWitness {
    pub case: WitnessCase,
    pub s: IntPoly,
    /// Cofactor with `Q = S·C`; the constant 1 in the degree-6 case.
    pub c: IntPoly,
    pub q: IntPoly,
    pub m: BigInt,
    pub n: BigInt,
    pub j: BigInt,
    pub k: BigInt,
    pub p: IntPoly,
    /// Companion of `p`: the action on first cohomology.
    pub f1: IntMat,
    /// Exterior square of `f1`: the action on second cohomology.
    pub f2: IntMat,
    pub lambda: RatInterval,
}

/// Per-check outcome of `verify_witness`.
#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub q_is_s_times_c: bool,
    pub charpoly_f1_is_p: bool,
    pub det_f1_is_one: bool,
    pub f2_is_wedge_of_f1: bool,
    pub charpoly_f2_is_q: bool,
    pub isometry_of_wedge_gram: bool,
    pub square_values_consistent: bool,
    pub spectral_radius_in_lambda: bool,
}

impl WitnessReport {
    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }

    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("q = s * c", self.q_is_s_times_c),
            ("charpoly(f1) = p", self.charpoly_f1_is_p),
            ("det(f1) = 1", self.det_f1_is_one),
            ("f2 = wedge_square(f1)", self.f2_is_wedge_of_f1),
            ("charpoly(f2) = q", self.charpoly_f2_is_q),
            ("f2 preserves the wedge form", self.isometry_of_wedge_gram),
            ("square values consistent", self.square_values_consistent),
            ("spectral radius inside the lambda bracket", self.spectral_radius_in_lambda),
        ]
    }
}

/// Exact re-verification of a witness, check by check.
pub fn verify_witness(w: &TorusWitness) -> WitnessReport {
    let q_is_s_times_c = w.s.mul(&w.c) == w.q;
    let charpoly_f1_is_p = w.f1.char_poly().map(|cp| cp == w.p).unwrap_or(false);
    let det_f1_is_one = w.f1.det().map(|d| d.is_one()).unwrap_or(false);
    let f2_is_wedge_of_f1 = wedge_square(&w.f1).map(|m| m == w.f2).unwrap_or(false);
    let charpoly_f2_is_q = w.f2.char_poly().map(|cp| cp == w.q).unwrap_or(false);
    let isometry_of_wedge_gram =
        crate::lattice::is_isometry(&w.f2, &wedge_gram()).unwrap_or(false);

    let square_values_consistent = (|| {
        let q1 = w.q.eval(&BigInt::one());
        let qm1 = w.q.eval(&BigInt::from(-1));
        if -&q1 != &w.m * &w.m || qm1 != &w.n * &w.n {
            return false;
        }
        if w.m.is_negative() || w.n.is_negative() {
            return false;
        }
        match derive_jk(&w.m, &w.n) {
            Ok((j, k)) => j == w.j && k == w.k,
            Err(_) => false,
        }
    })();

    let spectral_radius_in_lambda = (|| {
        let lo = Endpoint::Finite(w.lambda.lo().clone());
        let hi = Endpoint::Finite(w.lambda.hi().clone());
        let neg_hi = Endpoint::Finite(-w.lambda.hi().clone());
        let inside = count_with_multiplicity(&w.q, &lo, &hi).ok()?;
        let above = count_with_multiplicity(&w.q, &hi, &Endpoint::PosInf).ok()?;
        let below = count_with_multiplicity(&w.q, &Endpoint::NegInf, &neg_hi).ok()?;
        Some(inside == 1 && above == 0 && below == 0)
    })()
    .unwrap_or(false);

    WitnessReport {
        q_is_s_times_c,
        charpoly_f1_is_p,
        det_f1_is_one,
        f2_is_wedge_of_f1,
        charpoly_f2_is_q,
        isometry_of_wedge_gram,
        square_values_consistent,
        spectral_radius_in_lambda,
    }
}

/// Outcome of the realizability decision.
#[derive(Clone, Debug)]
pub enum TorusVerdict {
    Realizable { witness: TorusWitness, report: WitnessReport },
    /// Degree exceeds six, the hard bound for torus automorphisms.
    DegreeTooLarge,
    /// Degree six and the square property fails.
    SquarePropertyFails { square: SquareProperty },
    /// Degree four and none of the five cofactors works.
    NoCofactorWorks,
}

#[derive(Clone, Debug)]
pub struct TorusDecision {
    pub classification: SalemClassification,
    pub degree: usize,
    pub lambda: RatInterval,
    /// Present for degree-four inputs whatever the verdict.
    pub deg4: Option<Deg4Analysis>,
    pub verdict: TorusVerdict,
}

impl TorusDecision {
    pub fn realizable(&self) -> bool {
        matches!(self.verdict, TorusVerdict::Realizable { .. })
    }

    pub fn witness(&self) -> Option<&TorusWitness> {
        match &self.verdict {
            TorusVerdict::Realizable { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

/// Decide realizability for a Salem polynomial with the default tolerance.
pub fn decide_torus(s: &IntPoly) -> Result<TorusDecision> {
    decide_torus_tol(s, &default_tol())
}

pub fn decide_torus_tol(s: &IntPoly, tol: &BigRational) -> Result<TorusDecision> {
    let classification = classify_salem_tol(s, tol);
    if !classification.is_salem {
        return Err(Error::NotSalem(
            classification
                .reason
                .map(|r| r.to_string())
                .unwrap_or_else(|| "unknown".into()),
        ));
    }
    let lambda = classification.lambda.clone().expect("salem implies lambda");
    let degree = classification.degree;

    let (verdict, deg4) = match degree {
        2 => {
            let c = IntPoly::from_descending_i64(&[1, 0, -2, 0, 1]);
            let (witness, report) = build_witness(s, &c, WitnessCase::Deg2, &lambda)?;
            (TorusVerdict::Realizable { witness, report }, None)
        }
        4 => {
            let analysis = analyze_deg4(s)?;
            let found = analysis.first_working_cofactor().cloned();
            if found.is_some() != analysis.any_case() {
                return Err(Error::Internal(
                    "cofactor search disagrees with the case analysis".into(),
                ));
            }
            match found {
                Some(c) => {
                    let case = if analysis.case_a {
                        WitnessCase::Deg4a
                    } else if analysis.case_b {
                        WitnessCase::Deg4b
                    } else {
                        WitnessCase::Deg4c
                    };
                    let (witness, report) = build_witness(s, &c, case, &lambda)?;
                    (TorusVerdict::Realizable { witness, report }, Some(analysis))
                }
                None => (TorusVerdict::NoCofactorWorks, Some(analysis)),
            }
        }
        6 => {
            let square = square_property(s)?;
            if square.holds {
                let (witness, report) =
                    build_witness(s, &IntPoly::one(), WitnessCase::Deg6, &lambda)?;
                (TorusVerdict::Realizable { witness, report }, None)
            } else {
                (TorusVerdict::SquarePropertyFails { square }, None)
            }
        }
        _ => (TorusVerdict::DegreeTooLarge, None),
    };

    Ok(TorusDecision { classification, degree, lambda, deg4, verdict })
}

fn build_witness(
    s: &IntPoly,
    c: &IntPoly,
    case: WitnessCase,
    lambda: &RatInterval,
) -> Result<(TorusWitness, WitnessReport)> {
    let q = s.mul(c);
    let sp = square_property(&q)?;
    let (Some(m), Some(n)) = (sp.m.clone(), sp.n.clone()) else {
        return Err(Error::SquarePropertyFails(format!(
            "Q(1) = {}, Q(-1) = {}",
            sp.q_at_one, sp.q_at_minus_one
        )));
    };
    let (p, j, k) = derive_p_from_q(&q)?;
    let f1 = companion(&p)?;
    let f2 = wedge_square(&f1)?;
    let witness = TorusWitness {
        case,
        s: s.clone(),
        c: c.clone(),
        q,
        m,
        n,
        j,
        k,
        p,
        f1,
        f2,
        lambda: lambda.clone(),
    };
    let report = verify_witness(&witness);
    if !report.all_pass() {
        let failed: Vec<&str> = report
            .checks()
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| name)
            .collect();
        return Err(Error::Internal(format!(
            "constructed witness failed verification: {}",
            failed.join(", ")
        )));
    }
    Ok((witness, report))
}

/// On-disk witness document: integer arrays row-major, polynomial
/// coefficients in descending order, λ bracket as exact rational strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessFile {
    pub schema: String,
    pub case: String,
    pub s: Vec<i64>,
    pub c: Vec<i64>,
    pub q: Vec<i64>,
    pub m: i64,
    pub n: i64,
    pub j: i64,
    pub k: i64,
    pub p: Vec<i64>,
    pub f1: Vec<Vec<i64>>,
    pub f2: Vec<Vec<i64>>,
    pub wedge_basis: String,
    pub lambda: [String; 2],
}

pub const WITNESS_SCHEMA: &str = "torus-witness/1";

fn poly_to_i64_desc(p: &IntPoly) -> Result<Vec<i64>> {
    p.coeffs()
        .iter()
        .rev()
        .map(|c| c.to_i64().ok_or_else(|| Error::FileFormat("coefficient exceeds i64".into())))
        .collect()
}

fn mat_to_i64_rows(m: &IntMat) -> Result<Vec<Vec<i64>>> {
    m.rows_vec()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    x.to_i64().ok_or_else(|| Error::FileFormat("entry exceeds i64".into()))
                })
                .collect()
        })
        .collect()
}

fn big_to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::FileFormat("value exceeds i64".into()))
}

impl WitnessFile {
    pub fn from_witness(w: &TorusWitness) -> Result<Self> {
        Ok(WitnessFile {
            schema: WITNESS_SCHEMA.to_string(),
            case: w.case.as_str().to_string(),
            s: poly_to_i64_desc(&w.s)?,
            c: poly_to_i64_desc(&w.c)?,
            q: poly_to_i64_desc(&w.q)?,
            m: big_to_i64(&w.m)?,
            n: big_to_i64(&w.n)?,
            j: big_to_i64(&w.j)?,
            k: big_to_i64(&w.k)?,
            p: poly_to_i64_desc(&w.p)?,
            f1: mat_to_i64_rows(&w.f1)?,
            f2: mat_to_i64_rows(&w.f2)?,
            wedge_basis: WEDGE_BASIS.to_string(),
            lambda: [w.lambda.lo().to_string(), w.lambda.hi().to_string()],
        })
    }

    pub fn to_witness(&self) -> Result<TorusWitness> {
        if self.schema != WITNESS_SCHEMA {
            return Err(Error::FileFormat(format!("unknown schema {:?}", self.schema)));
        }
        if self.wedge_basis != WEDGE_BASIS {
            return Err(Error::FileFormat("unexpected wedge basis order".into()));
        }
        let lo = BigRational::from_str(&self.lambda[0])
            .map_err(|e| Error::FileFormat(format!("bad rational: {e}")))?;
        let hi = BigRational::from_str(&self.lambda[1])
            .map_err(|e| Error::FileFormat(format!("bad rational: {e}")))?;
        let rows = |rows: &Vec<Vec<i64>>| -> Result<IntMat> {
            Mat::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                    .collect(),
            )
        };
        Ok(TorusWitness {
            case: WitnessCase::from_str_tag(&self.case)?,
            s: IntPoly::from_descending_i64(&self.s),
            c: IntPoly::from_descending_i64(&self.c),
            q: IntPoly::from_descending_i64(&self.q),
            m: BigInt::from(self.m),
            n: BigInt::from(self.n),
            j: BigInt::from(self.j),
            k: BigInt::from(self.k),
            p: IntPoly::from_descending_i64(&self.p),
            f1: rows(&self.f1)?,
            f2: rows(&self.f2)?,
            lambda: RatInterval::new(lo, hi)?,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::FileFormat(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::FileFormat(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::big;

    fn ip(desc: &[i64]) -> IntPoly {
        IntPoly::from_descending_i64(desc)
    }

    #[test]
    fn square_property_examples() {
        // Q = (t²−3t+1)(t−1)²(t+1)²: Q(1) = Q(−1) = 0
        let q = ip(&[1, -3, -1, 6, -1, -3, 1]);
        let sp = square_property(&q).unwrap();
        assert!(sp.holds);
        assert_eq!(sp.m, Some(big(0)));
        assert_eq!(sp.n, Some(big(0)));

        let q2 = ip(&[1, -1, -1, 1, -1, -1, 1]);
        let sp2 = square_property(&q2).unwrap();
        assert!(sp2.holds);
        assert_eq!(sp2.q_at_one, big(-1));
        assert_eq!(sp2.q_at_minus_one, big(1));
        assert_eq!(sp2.m, Some(big(1)));
        assert_eq!(sp2.n, Some(big(1)));

        // Q(1) = −3 is not minus a perfect square: a=0, b=1, c=−7
        let q3 = SexticView { a: big(0), b: big(1), c: big(-7) }.to_poly();
        let sp3 = square_property(&q3).unwrap();
        assert_eq!(sp3.q_at_one, big(-3));
        assert!(!sp3.holds);

        assert!(matches!(
            square_property(&ip(&[1, -3, 1])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn derive_p_examples() {
        let q = ip(&[1, -3, -1, 6, -1, -3, 1]);
        let (p, j, k) = derive_p_from_q(&q).unwrap();
        assert_eq!(p, ip(&[1, 0, 3, 0, 1]));
        assert_eq!(j, big(0));
        assert_eq!(k, big(0));

        let q2 = ip(&[1, -1, -1, 1, -1, -1, 1]);
        let (p2, j2, k2) = derive_p_from_q(&q2).unwrap();
        assert_eq!(j2, big(1));
        assert_eq!(k2, big(0));
        assert_eq!(p2, ip(&[1, 1, 1, 0, 1]));

        assert!(matches!(derive_jk(&big(1), &big(2)), Err(Error::Internal(_))));
    }

    #[test]
    fn companion_examples() {
        let p = ip(&[1, 0, 3, 0, 1]);
        let m = companion(&p).unwrap();
        // last column (−1, 0, −3, 0)ᵀ
        assert_eq!(*m.get(0, 3), big(-1));
        assert_eq!(*m.get(1, 3), big(0));
        assert_eq!(*m.get(2, 3), big(-3));
        assert_eq!(*m.get(3, 3), big(0));
        assert_eq!(m.char_poly().unwrap(), p);
        assert_eq!(m.det().unwrap(), big(1));

        let p2 = ip(&[1, -1, -1, -1, 1]);
        assert_eq!(companion(&p2).unwrap().char_poly().unwrap(), p2);

        assert!(companion(&ip(&[1, 0, 0, 1])).is_err());
    }

    #[test]
    fn wedge_of_identity_and_diagonal() {
        let id: IntMat = Mat::identity(4);
        assert_eq!(wedge_square(&id).unwrap(), Mat::identity(6));
        let d = IntMat::from_i64_rows(&[
            &[2, 0, 0, 0],
            &[0, 3, 0, 0],
            &[0, 0, 5, 0],
            &[0, 0, 0, 7],
        ])
        .unwrap();
        let w = wedge_square(&d).unwrap();
        let expect = [6i64, 10, 14, 15, 21, 35];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(*w.get(i, i), big(*e));
        }
    }

    #[test]
    fn wedge_gram_entries() {
        let g = wedge_gram();
        // ⟨e1∧e2, e3∧e4⟩ = 1, ⟨e1∧e3, e2∧e4⟩ = −1, ⟨e1∧e2, e1∧e3⟩ = 0
        assert_eq!(*g.mat().get(0, 5), big(1));
        assert_eq!(*g.mat().get(1, 4), big(-1));
        assert_eq!(*g.mat().get(0, 1), big(0));
        assert_eq!(*g.mat().get(2, 3), big(1));
    }

    #[test]
    fn decide_deg2() {
        let d = decide_torus(&ip(&[1, -3, 1])).unwrap();
        assert!(d.realizable());
        let w = d.witness().unwrap();
        assert_eq!(w.case, WitnessCase::Deg2);
        assert_eq!(w.q, ip(&[1, -3, -1, 6, -1, -3, 1]));
        assert_eq!(w.p, ip(&[1, 0, 3, 0, 1]));
    }

    #[test]
    fn decide_deg4_case_a() {
        let d = decide_torus(&ip(&[1, -1, -1, -1, 1])).unwrap();
        assert!(d.realizable());
        let w = d.witness().unwrap();
        assert_eq!(w.case, WitnessCase::Deg4a);
        let a = d.deg4.as_ref().unwrap();
        assert_eq!(a.s_at_one, big(-1));
        assert!(a.case_a);
        assert_eq!(w.c, ip(&[1, -1, 1]));
    }

    #[test]
    fn decide_deg4_case_b() {
        // S(−1) = 1 is a square while −S(1) = 3 and the doubled values
        // are not, so only case (b) applies; (t−1)² is the cofactor
        let s = ip(&[1, -1, -3, -1, 1]);
        let d = decide_torus(&s).unwrap();
        let a = d.deg4.as_ref().unwrap();
        assert!(!a.case_a && a.case_b && !a.case_c);
        let w = d.witness().unwrap();
        assert_eq!(w.case, WitnessCase::Deg4b);
        assert_eq!(w.c, ip(&[1, -2, 1]));
        assert!(verify_witness(w).all_pass());
    }

    #[test]
    fn decide_deg4_case_c() {
        // S(1) = −2 and S(−1) = 2: only the halved squares work, and the
        // cofactor is t² + 1
        let s = ip(&[1, -1, -2, -1, 1]);
        let d = decide_torus(&s).unwrap();
        let a = d.deg4.as_ref().unwrap();
        assert!(!a.case_a && !a.case_b && a.case_c);
        let w = d.witness().unwrap();
        assert_eq!(w.case, WitnessCase::Deg4c);
        assert_eq!(w.c, ip(&[1, 0, 1]));
        assert!(verify_witness(w).all_pass());
    }

    #[test]
    fn decide_deg4_not_realizable() {
        // S(1) = −5, S(−1) = 3: no case holds and no cofactor works
        let s = ip(&[1, -2, -3, -2, 1]);
        assert!(crate::salem::classify_salem(&s).is_salem);
        let d = decide_torus(&s).unwrap();
        assert!(!d.realizable());
        assert!(matches!(d.verdict, TorusVerdict::NoCofactorWorks));
        let a = d.deg4.as_ref().unwrap();
        assert!(!a.any_case());
        assert!(a.cofactor_holds.iter().all(|(_, ok)| !ok));
    }

    #[test]
    fn decide_rejects_large_degree() {
        let lehmer = ip(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let d = decide_torus(&lehmer).unwrap();
        assert!(!d.realizable());
        assert!(matches!(d.verdict, TorusVerdict::DegreeTooLarge));
    }

    #[test]
    fn decide_deg6_square_property() {
        let s = ip(&[1, -1, -1, 1, -1, -1, 1]);
        let c = crate::salem::classify_salem(&s);
        assert!(c.is_salem, "reference sextic must be Salem");
        let d = decide_torus(&s).unwrap();
        assert!(d.realizable());
        assert_eq!(d.witness().unwrap().case, WitnessCase::Deg6);
    }

    #[test]
    fn decide_requires_salem() {
        assert!(matches!(decide_torus(&ip(&[1, -1])), Err(Error::NotSalem(_))));
    }

    #[test]
    fn tampered_witness_fails_isometry() {
        let d = decide_torus(&ip(&[1, -3, 1])).unwrap();
        let mut w = d.witness().unwrap().clone();
        let v = w.f2.get(0, 0) + big(1);
        w.f2.set(0, 0, v);
        let rep = verify_witness(&w);
        assert!(!rep.isometry_of_wedge_gram);
        assert!(!rep.all_pass());
    }

    #[test]
    fn witness_file_round_trip() {
        let d = decide_torus(&ip(&[1, -3, 1])).unwrap();
        let w = d.witness().unwrap();
        let file = WitnessFile::from_witness(w).unwrap();
        let json = file.to_json().unwrap();
        let parsed = WitnessFile::from_json(&json).unwrap();
        let w2 = parsed.to_witness().unwrap();
        assert_eq!(w2.q, w.q);
        assert_eq!(w2.f2, w.f2);
        assert!(verify_witness(&w2).all_pass());
    }

    #[test]
    fn sextic_view_round_trip() {
        let q = ip(&[1, -1, -1, 1, -1, -1, 1]);
        let v = SexticView::from_poly(&q).unwrap();
        assert_eq!(v.to_poly(), q);
    }
}
