//! K3-surface realizability conditions for Salem numbers, and the
//! desk-scale verifier for the lattice-extension mechanics behind the
//! degree-14 sufficient condition.
//!
//! Decision routes, in priority order:
//!
//! * degree > 22: impossible (second cohomology of a K3 surface has rank
//!   22);
//! * degree ≤ 6 and torus-realizable: the automorphism descends to the
//!   Kummer surface with the same entropy;
//! * degree 14 or 22 with `S(−1)·S(1) = −1`: realizable through an
//!   isometry of the even unimodular lattice of signature (3,11) or
//!   (3,19) extended to the K3 lattice;
//! * everything else: unknown, with the necessary square conditions and
//!   the congruence-based sufficient condition reported as diagnostics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lattice::{
    e8_minus, eigenspace_signatures, extend_by_identity, is_isometry, kernel_sublattice,
    signature, EigenspaceReport, Gram, SignatureTriple,
};
use crate::poly::strip_cyclotomic_factors;
use crate::salem::{classify_salem, classify_salem_tol};
use crate::scalar::{default_tol, perfect_sqrt};
use crate::torus::{decide_torus_tol, TorusDecision};
use crate::{Error, IntMat, IntPoly, Result};

/// The three necessary square conditions for a Salem polynomial to be the
/// characteristic polynomial of an even-unimodular-lattice isometry:
/// `|S(−1)|`, `|S(1)|`, and `−S(−1)·S(1)` must all be perfect squares.
#[derive(Clone, Debug)]
pub struct NecessarySquares {
    pub s_at_minus_one: BigInt,
    pub s_at_one: BigInt,
    pub abs_s_minus_one_is_square: bool,
    pub abs_s_one_is_square: bool,
    pub neg_product_is_square: bool,
}

impl NecessarySquares {
    pub fn all(&self) -> bool {
        self.abs_s_minus_one_is_square && self.abs_s_one_is_square && self.neg_product_is_square
    }
}

pub fn necessary_squares(s: &IntPoly) -> Result<NecessarySquares> {
    if s.is_zero() || !s.is_monic() {
        return Err(Error::NotMonic);
    }
    let sm1 = s.eval(&BigInt::from(-1));
    let s1 = s.eval(&BigInt::one());
    Ok(NecessarySquares {
        abs_s_minus_one_is_square: perfect_sqrt(&sm1.abs()).is_some(),
        abs_s_one_is_square: perfect_sqrt(&s1.abs()).is_some(),
        neg_product_is_square: perfect_sqrt(&(-(&sm1 * &s1))).is_some(),
        s_at_minus_one: sm1,
        s_at_one: s1,
    })
}

/// Sufficient condition for `log λ` to be the entropy of an isometry of
/// the even unimodular lattice of signature `(p, q)`: `p + q = d`,
/// `d ≡ 2 (mod 4)`, `p ≡ q (mod 8)`, and `S(−1)·S(1) = −1`.
pub fn unimodular_isometry_sufficient(s: &IntPoly, p: usize, q: usize) -> Result<bool> {
    let c = classify_salem(s);
    if !c.is_salem {
        return Err(Error::NotSalem(
            c.reason.map(|r| r.to_string()).unwrap_or_else(|| "unknown".into()),
        ));
    }
    let d = c.degree;
    if p + q != d {
        return Err(Error::InvalidArgument(format!(
            "signature ({p},{q}) does not sum to the degree {d}"
        )));
    }
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument("p and q must be positive".into()));
    }
    let product = s.eval(&BigInt::from(-1)) * s.eval(&BigInt::one());
    Ok(d % 4 == 2 && (p as i64 - q as i64).rem_euclid(8) == 0 && product == BigInt::from(-1))
}

/// The canonical K3-compatible signature for a degree `d ≡ 2 (mod 4)`:
/// `p ≤ 3` with `p ≡ q (mod 8)` — `(1, d−1)` when `d ≡ 2 (mod 8)`,
/// `(3, d−3)` when `d ≡ 6 (mod 8)`.
pub fn canonical_signature(d: usize) -> Option<(usize, usize)> {
    if d % 4 != 2 {
        return None;
    }
    let p = if d % 8 == 6 { 3 } else { 1 };
    Some((p, d - p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum K3Verdict {
    RealizableKummer,
    RealizableDeg14,
    RealizableDeg22,
    ConditionsFail,
    Unknown,
}

impl K3Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            K3Verdict::RealizableKummer => "realizable_kummer",
            K3Verdict::RealizableDeg14 => "realizable_degree14",
            K3Verdict::RealizableDeg22 => "realizable_degree22",
            K3Verdict::ConditionsFail => "conditions_fail",
            K3Verdict::Unknown => "unknown",
        }
    }

    pub fn realizable(&self) -> bool {
        matches!(
            self,
            K3Verdict::RealizableKummer | K3Verdict::RealizableDeg14 | K3Verdict::RealizableDeg22
        )
    }
}

#[derive(Clone, Debug)]
pub struct K3Report {
    pub degree: usize,
    pub necessary: NecessarySquares,
    pub product_is_minus_one: bool,
    /// Canonical `(p, q)` and whether the sufficient condition holds there.
    pub isometry_condition: Option<(usize, usize, bool)>,
    /// Torus decision, embedded for degrees ≤ 6.
    pub torus: Option<TorusDecision>,
    pub verdict: K3Verdict,
    pub notes: Vec<String>,
}

pub fn k3_classify(s: &IntPoly) -> Result<K3Report> {
    k3_classify_tol(s, &default_tol())
}

pub fn k3_classify_tol(s: &IntPoly, tol: &BigRational) -> Result<K3Report> {
    let c = classify_salem_tol(s, tol);
    if !c.is_salem {
        return Err(Error::NotSalem(
            c.reason.map(|r| r.to_string()).unwrap_or_else(|| "unknown".into()),
        ));
    }
    let degree = c.degree;
    let necessary = necessary_squares(s)?;
    let product_is_minus_one = &necessary.s_at_minus_one * &necessary.s_at_one == BigInt::from(-1);
    let isometry_condition = match canonical_signature(degree) {
        Some((p, q)) => Some((p, q, unimodular_isometry_sufficient(s, p, q)?)),
        None => None,
    };

    let mut notes = Vec::new();
    let mut torus = None;

    let verdict = if degree > 22 {
        notes.push(
            "degree exceeds 22, the rank of the second cohomology of a K3 surface".to_string(),
        );
        K3Verdict::ConditionsFail
    } else if degree <= 6 {
        let decision = decide_torus_tol(s, tol)?;
        let realizable = decision.realizable();
        torus = Some(decision);
        if realizable {
            notes.push(
                "realizable on a torus; the automorphism descends to the Kummer surface with \
                 the same entropy"
                    .to_string(),
            );
            K3Verdict::RealizableKummer
        } else {
            notes.push(
                "not torus-realizable; low-degree K3 examples outside the Kummer route are \
                 known from lattice twisting constructions not attempted here"
                    .to_string(),
            );
            K3Verdict::Unknown
        }
    } else if degree == 14 && product_is_minus_one {
        notes.push(
            "S(-1)·S(1) = -1 at degree 14: an isometry of the even unimodular (3,11) lattice \
             extends over E8(-1) to a K3 automorphism action"
                .to_string(),
        );
        K3Verdict::RealizableDeg14
    } else if degree == 22 && product_is_minus_one {
        notes.push(
            "S(-1)·S(1) = -1 at degree 22: realizable directly on the full K3 lattice".to_string(),
        );
        K3Verdict::RealizableDeg22
    } else {
        if degree == 10 {
            notes.push(
                "degree 10: no trace root yields a τ-eigenspace of signature (2,0), so the \
                 eigenspace extension method does not apply; a twisting construction is known \
                 to realize the smallest degree-10 Salem number"
                    .to_string(),
            );
        } else {
            notes.push("no applicable sufficient condition".to_string());
        }
        K3Verdict::Unknown
    };

    Ok(K3Report {
        degree,
        necessary,
        product_is_minus_one,
        isometry_condition,
        torus,
        verdict,
        notes,
    })
}

/// The four extension-mechanics checks for an isometry `f` of `g` whose
/// characteristic polynomial has an irreducible Salem core.
#[derive(Clone, Debug)]
pub struct MechanicsReport {
    pub salem_core: IntPoly,
    pub ambient_signature: SignatureTriple,
    pub ambient_even: bool,
    pub ambient_unimodular: bool,
    pub extension_is_isometry: bool,
    /// `char(g) = char(f) · (t−1)⁸`
    pub charpoly_gains_fixed_block: bool,
    pub unique_tau_signature_2_0: bool,
    pub eigenspaces: EigenspaceReport,
    pub e8_summand_fixed: bool,
}

impl MechanicsReport {
    pub fn all_pass(&self) -> bool {
        self.extension_is_isometry
            && self.charpoly_gains_fixed_block
            && self.unique_tau_signature_2_0
            && self.e8_summand_fixed
    }

    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("extension is an isometry of the sum", self.extension_is_isometry),
            ("char poly gains (t-1)^8", self.charpoly_gains_fixed_block),
            ("exactly one tau has signature (2,0)", self.unique_tau_signature_2_0),
            ("E8 summand lies in the fixed kernel", self.e8_summand_fixed),
        ]
    }
}

/// Extend `f` by the identity on E8(−1) and verify: the extension is an
/// isometry of `g ⊕ E8(−1)`; its characteristic polynomial is
/// `char(f)·(t−1)⁸`; exactly one τ-eigenspace has signature (2,0); and the
/// E8 summand lies inside the fixed sublattice `ker(ext − I)`.
pub fn verify_k3_mechanics(f: &IntMat, g: &Gram, tol: &BigRational) -> Result<MechanicsReport> {
    if !is_isometry(f, g)? {
        return Err(Error::NotIsometry);
    }
    let cf = f.char_poly()?;
    let (core, _factors) = strip_cyclotomic_factors(&cf)?;
    let core_class = classify_salem(&core);
    if !core_class.is_salem {
        return Err(Error::NotSalem(
            "characteristic polynomial has no irreducible Salem core".into(),
        ));
    }

    let e8 = e8_minus();
    let ambient = g.direct_sum(&e8);
    let ext = extend_by_identity(f, g, &e8)?;

    let extension_is_isometry = is_isometry(&ext, &ambient)?;
    let ambient_signature = signature(&ambient)?;
    let ambient_even = ambient.is_even();
    let ambient_unimodular = ambient.is_unimodular();

    let expected = cf.mul(&IntPoly::from_descending_i64(&[1, -1]).pow(8));
    let charpoly_gains_fixed_block = ext.char_poly()? == expected;

    let eigenspaces = eigenspace_signatures(&ext, &ambient, tol)?;
    let unique_tau_signature_2_0 = eigenspaces.count_with_signature((2, 0)) == 1;

    let fixed = kernel_sublattice(&ext, &IntPoly::from_descending_i64(&[1, -1]))?;
    let n = ambient.rank();
    let e8_summand_fixed = (g.rank()..n).all(|i| {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::one();
        crate::lattice::in_row_lattice(&fixed, &v)
    });

    Ok(MechanicsReport {
        salem_core: core,
        ambient_signature,
        ambient_even,
        ambient_unimodular,
        extension_is_isometry,
        charpoly_gains_fixed_block,
        unique_tau_signature_2_0,
        eigenspaces,
        e8_summand_fixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Mat;
    use crate::scalar::big;
    use crate::torus::{decide_torus, wedge_gram};

    fn ip(desc: &[i64]) -> IntPoly {
        IntPoly::from_descending_i64(desc)
    }

    fn lehmer() -> IntPoly {
        ip(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    }

    // found by scanning reciprocal degree-22 polynomials with
    // coefficients in {-1,0,1} for S(1) = -1, S(-1) = 1; λ ≈ 1.714886
    fn salem22() -> IntPoly {
        ip(&[
            1, -1, -1, -1, 0, 1, 1, 1, 0, 0, -1, -1, -1, 0, 0, 1, 1, 1, 0, -1, -1, -1, 1,
        ])
    }

    // degree-24 Salem polynomial (all middle coefficients -1), λ ≈ 2
    fn salem24() -> IntPoly {
        let mut desc = vec![-1i64; 25];
        desc[0] = 1;
        desc[24] = 1;
        ip(&desc)
    }

    #[test]
    fn necessary_square_examples() {
        // t²−3t+1: |S(−1)| = 5 not a square
        let n1 = necessary_squares(&ip(&[1, -3, 1])).unwrap();
        assert_eq!(n1.s_at_minus_one, big(5));
        assert_eq!(n1.s_at_one, big(-1));
        assert!(!n1.abs_s_minus_one_is_square);
        assert!(n1.abs_s_one_is_square);
        assert!(!n1.neg_product_is_square);

        let n2 = necessary_squares(&lehmer()).unwrap();
        assert_eq!(n2.s_at_minus_one, big(1));
        assert_eq!(n2.s_at_one, big(-1));
        assert!(n2.all());

        let n3 = necessary_squares(&ip(&[1, -1, -1, 1, -1, -1, 1])).unwrap();
        assert!(n3.all());
    }

    #[test]
    fn sufficient_condition_examples() {
        assert!(unimodular_isometry_sufficient(&lehmer(), 1, 9).unwrap());
        assert!(unimodular_isometry_sufficient(&ip(&[1, -1, -1, 1, -1, -1, 1]), 3, 3).unwrap());
        assert!(matches!(
            unimodular_isometry_sufficient(&lehmer(), 2, 9),
            Err(Error::InvalidArgument(_))
        ));
        // degree 4 fails the d ≡ 2 (mod 4) congruence
        assert!(!unimodular_isometry_sufficient(&ip(&[1, -1, -1, -1, 1]), 2, 2).unwrap());
    }

    #[test]
    fn canonical_signatures() {
        assert_eq!(canonical_signature(6), Some((3, 3)));
        assert_eq!(canonical_signature(10), Some((1, 9)));
        assert_eq!(canonical_signature(14), Some((3, 11)));
        assert_eq!(canonical_signature(22), Some((3, 19)));
        assert_eq!(canonical_signature(4), None);
    }

    #[test]
    fn classify_kummer_and_unknown() {
        let r1 = k3_classify(&ip(&[1, -3, 1])).unwrap();
        assert_eq!(r1.verdict, K3Verdict::RealizableKummer);
        assert!(r1.torus.as_ref().unwrap().realizable());

        let r2 = k3_classify(&lehmer()).unwrap();
        assert_eq!(r2.verdict, K3Verdict::Unknown);
        assert_eq!(r2.isometry_condition, Some((1, 9, true)));
        assert!(r2.notes.iter().any(|n| n.contains("degree 10")));
    }

    #[test]
    fn classify_degree22_and_beyond() {
        let s22 = salem22();
        assert!(crate::salem::classify_salem(&s22).is_salem);
        let rep = k3_classify(&s22).unwrap();
        assert_eq!(rep.verdict, K3Verdict::RealizableDeg22);
        assert_eq!(rep.isometry_condition, Some((3, 19, true)));

        let s24 = salem24();
        assert!(crate::salem::classify_salem(&s24).is_salem);
        let rep24 = k3_classify(&s24).unwrap();
        assert_eq!(rep24.verdict, K3Verdict::ConditionsFail);
    }

    #[test]
    fn degree14_without_product_condition_is_unknown() {
        // λ for t^14 - t^13 - t^8 ... pick from the enumeration instead:
        // any degree-14 Salem with S(1) ≠ -1 must land on Unknown
        let found = crate::salem::enumerate_salem(14, 1).unwrap();
        let mut checked = 0;
        for c in found.iter().take(20) {
            let product =
                c.input.eval(&BigInt::one()) * c.input.eval(&BigInt::from(-1));
            if product != BigInt::from(-1) {
                let rep = k3_classify(&c.input).unwrap();
                assert_eq!(rep.verdict, K3Verdict::Unknown);
                checked += 1;
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn mechanics_on_torus_sextic() {
        let d = decide_torus(&ip(&[1, -1, -1, 1, -1, -1, 1])).unwrap();
        let f2 = &d.witness().unwrap().f2;
        let rep = verify_k3_mechanics(f2, &wedge_gram(), &default_tol()).unwrap();
        assert!(rep.all_pass(), "failed checks: {:?}", rep.checks());
        assert_eq!(rep.ambient_signature, SignatureTriple { pos: 3, neg: 11, zero: 0 });
        assert!(rep.ambient_even);
        assert!(rep.ambient_unimodular);
    }

    #[test]
    fn mechanics_on_degree4_witnesses() {
        // the Salem core of char(F2) is the quartic; the cofactor's
        // unit-circle plane (when present) picks up signature (0,2)
        for desc in [
            [1i64, -1, -1, -1, 1],
            [1, -1, -3, -1, 1],
            [1, -1, -2, -1, 1],
        ] {
            let s = ip(&desc);
            let d = decide_torus(&s).unwrap();
            let w = d.witness().unwrap();
            let rep = verify_k3_mechanics(&w.f2, &wedge_gram(), &default_tol()).unwrap();
            assert!(rep.all_pass(), "mechanics failed for {s}: {:?}", rep.checks());
            assert_eq!(rep.salem_core, s);
        }
    }

    #[test]
    fn mechanics_rejects_identity() {
        let id: IntMat = Mat::identity(6);
        assert!(matches!(
            verify_k3_mechanics(&id, &wedge_gram(), &default_tol()),
            Err(Error::NotSalem(_))
        ));
    }
}
