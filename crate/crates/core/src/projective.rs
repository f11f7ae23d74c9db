//! Projectivity flags for torus automorphisms, and the explicit
//! constructions on products `E × E` of one-dimensional complex tori.
//!
//! A degree-six Salem polynomial is irreducible on second cohomology, so
//! its entropy can never come from a *projective* torus automorphism. For
//! degrees two and four projectivity is not decided here; degree two gets
//! the sufficient `E × E` construction: a 2×2 integer matrix `A` acts on
//! `E × E`, and its action on second cohomology has characteristic
//! polynomial `(t² − (tr² − 2)t + 1)(t−1)⁴` when `det A = 1` and
//! `(t² − (tr² + 2)t + 1)(t+1)⁴` when `det A = −1`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::salem::classify_salem;
use crate::scalar::perfect_sqrt;
use crate::{Error, IntMat, IntPoly, Result};

/// Characteristic polynomial of the induced action of `A ∈ GL₂(ℤ)` on the
/// second cohomology of `E × E`.
pub fn elliptic_product_charpoly(a: &IntMat) -> Result<IntPoly> {
    if a.nrows() != 2 || a.ncols() != 2 {
        return Err(Error::DimensionMismatch("expected a 2x2 matrix".into()));
    }
    let det = a.det()?;
    let tr = a.trace();
    let tr2 = &tr * &tr;
    if det.is_one() {
        let quad = IntPoly::new(vec![BigInt::one(), -(&tr2 - BigInt::from(2)), BigInt::one()]);
        Ok(quad.mul(&IntPoly::from_descending_i64(&[1, -1]).pow(4)))
    } else if (-&det).is_one() {
        let quad = IntPoly::new(vec![BigInt::one(), -(&tr2 + BigInt::from(2)), BigInt::one()]);
        Ok(quad.mul(&IntPoly::from_descending_i64(&[1, 1]).pow(4)))
    } else {
        Err(Error::InvalidArgument(format!("determinant must be ±1, got {det}")))
    }
}

/// Outcome of the sufficient `E × E` test for a Salem quadratic.
#[derive(Clone, Debug)]
pub enum EllipticProductVerdict {
    /// `a = m² + 2` or `a = m² − 2` with `|m| > 2`: witness matrix found.
    Yes { witness: IntMat, trace: BigInt, det: BigInt },
    /// The condition is sufficient only; nothing is concluded.
    Unknown,
}

#[derive(Clone, Debug)]
pub struct EllipticProductCheck {
    pub a: BigInt,
    pub verdict: EllipticProductVerdict,
}

/// For `S = t² − at + 1` Salem (`a ≥ 3`): realizable on `E × E` when
/// `a = m² + 2` (witness of trace `m`, det −1) or `a = m² − 2` with
/// `|m| > 2` (witness of trace `m`, det 1); otherwise unknown.
pub fn elliptic_product_deg2(s: &IntPoly) -> Result<EllipticProductCheck> {
    if s.deg0() != 2 || !s.is_monic_reciprocal()? {
        return Err(Error::DegreeMismatch { expected: 2, got: s.deg0() });
    }
    let a = -s.coeff(1);
    if a < BigInt::from(3) {
        return Err(Error::NotSalem(format!("t² − at + 1 needs a ≥ 3, got a = {a}")));
    }
    if let Some(m) = perfect_sqrt(&(&a - BigInt::from(2))) {
        // det −1, trace m: [[0,1],[1,m]]
        let witness = make_witness(&m, false);
        verify_elliptic_witness(&witness, s)?;
        return Ok(EllipticProductCheck {
            a,
            verdict: EllipticProductVerdict::Yes { witness, trace: m, det: BigInt::from(-1) },
        });
    }
    if let Some(m) = perfect_sqrt(&(&a + BigInt::from(2))) {
        if m.abs() > BigInt::from(2) {
            // det 1, trace m: [[0,−1],[1,m]]
            let witness = make_witness(&m, true);
            verify_elliptic_witness(&witness, s)?;
            return Ok(EllipticProductCheck {
                a,
                verdict: EllipticProductVerdict::Yes { witness, trace: m, det: BigInt::one() },
            });
        }
    }
    Ok(EllipticProductCheck { a, verdict: EllipticProductVerdict::Unknown })
}

fn make_witness(m: &BigInt, det_one: bool) -> IntMat {
    let corner = if det_one { BigInt::from(-1) } else { BigInt::one() };
    crate::matrix::Mat::from_rows(vec![
        vec![BigInt::from(0), corner],
        vec![BigInt::one(), m.clone()],
    ])
    .expect("fixed shape")
}

fn verify_elliptic_witness(witness: &IntMat, s: &IntPoly) -> Result<()> {
    let cp = elliptic_product_charpoly(witness)?;
    if !s.divides(&cp) {
        return Err(Error::Internal("elliptic-product witness misses the Salem factor".into()));
    }
    Ok(())
}

/// Projectivity information attached to a Salem polynomial.
#[derive(Clone, Debug)]
pub struct ProjectiveFlags {
    pub degree: usize,
    /// `Some(false)`: ruled out. `None`: not decided by this tool.
    pub projective_torus_possible: Option<bool>,
    pub note: String,
    pub elliptic_product: Option<EllipticProductCheck>,
}

pub fn projective_flags(s: &IntPoly) -> Result<ProjectiveFlags> {
    let c = classify_salem(s);
    if !c.is_salem {
        return Err(Error::NotSalem(
            c.reason.map(|r| r.to_string()).unwrap_or_else(|| "unknown".into()),
        ));
    }
    let flags = match c.degree {
        2 => ProjectiveFlags {
            degree: 2,
            projective_torus_possible: None,
            note: "undetermined; the E×E construction below is sufficient only".into(),
            elliptic_product: Some(elliptic_product_deg2(s)?),
        },
        4 => ProjectiveFlags {
            degree: 4,
            projective_torus_possible: None,
            note: "undetermined; a projective product of two copies of C/Z[ζ₃] realizes the \
                   smallest degree-four Salem number"
                .into(),
            elliptic_product: None,
        },
        6 => ProjectiveFlags {
            degree: 6,
            projective_torus_possible: Some(false),
            note: "a projective torus automorphism must preserve a proper sublattice of second \
                   cohomology, so no irreducible sextic can occur"
                .into(),
            elliptic_product: None,
        },
        d => ProjectiveFlags {
            degree: d,
            projective_torus_possible: Some(false),
            note: "degree exceeds six, so no torus automorphism at all".into(),
            elliptic_product: None,
        },
    };
    Ok(flags)
}
