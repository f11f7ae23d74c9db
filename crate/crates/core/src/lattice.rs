//! Exact quadratic-lattice infrastructure: Gram matrices with exact
//! signatures, E8(−1), isometry checks, direct sums and identity
//! extensions, saturated integer kernels, and the one approximate
//! operation of the crate — numeric signatures of the τ-eigenspaces
//! `E_τ = ker(f + f⁻¹ − τI)` of a lattice isometry.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::interval::RatInterval;
use crate::matrix::Mat;
use crate::poly::trace_poly;
use crate::scalar::{rat_int, rat_to_f64};
use crate::sturm::{count_distinct, count_with_multiplicity, isolate_and_refine, Endpoint};
use crate::{Error, IntMat, IntPoly, Result};

/// Symmetric integer Gram matrix of a bilinear form.
#[derive(Clone, Debug, PartialEq)]
pub struct Gram {
    mat: IntMat,
}

impl Gram {
    pub fn new(mat: IntMat) -> Result<Self> {
        if !mat.is_square() || mat.nrows() == 0 {
            return Err(Error::DimensionMismatch("gram matrix must be square and nonempty".into()));
        }
        if !mat.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Gram { mat })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Gram::new(IntMat::from_i64_rows(rows)?)
    }

    pub fn mat(&self) -> &IntMat {
        &self.mat
    }

    pub fn rank(&self) -> usize {
        self.mat.nrows()
    }

    /// Even iff every diagonal self-pairing is even.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (self.mat.get(i, i) % BigInt::from(2)).is_zero())
    }

    /// Unimodular iff the exact determinant is ±1.
    pub fn is_unimodular(&self) -> bool {
        self.mat.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }

    pub fn direct_sum(&self, other: &Gram) -> Gram {
        Gram { mat: self.mat.block_diag(&other.mat) }
    }
}

/// Exact counts of positive, negative, and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureTriple {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl SignatureTriple {
    pub fn total(&self) -> usize {
        self.pos + self.neg + self.zero
    }
}

/// Exact signature by Sturm root counting on the characteristic
/// polynomial over `(0, ∞)` and `(−∞, 0)`; the zero count is the
/// multiplicity of the root at 0.
pub fn signature(g: &Gram) -> Result<SignatureTriple> {
    let cp = g.mat().char_poly()?;
    let zero = cp
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .unwrap_or(0);
    let pos = count_with_multiplicity(&cp, &Endpoint::int(0), &Endpoint::PosInf)?;
    let neg = count_with_multiplicity(&cp, &Endpoint::NegInf, &Endpoint::int(0))?;
    let sig = SignatureTriple { pos, neg, zero };
    if sig.total() != g.rank() {
        return Err(Error::Internal("signature counts do not sum to the rank".into()));
    }
    Ok(sig)
}

/// The even unimodular lattice E8(−1): diagonal −2, bonds
/// 1–2, 2–3, 3–4, 3–5, 5–6, 6–7, 7–8.
pub fn e8_minus() -> Gram {
    let rows: [&[i64]; 8] = [
        &[-2, 1, 0, 0, 0, 0, 0, 0],
        &[1, -2, 1, 0, 0, 0, 0, 0],
        &[0, 1, -2, 1, 1, 0, 0, 0],
        &[0, 0, 1, -2, 0, 0, 0, 0],
        &[0, 0, 1, 0, -2, 1, 0, 0],
        &[0, 0, 0, 0, 1, -2, 1, 0],
        &[0, 0, 0, 0, 0, 1, -2, 1],
        &[0, 0, 0, 0, 0, 0, 1, -2],
    ];
    Gram::from_i64_rows(&rows).expect("fixed shape")
}

/// `MᵀGM = G`, exactly.
pub fn is_isometry(m: &IntMat, g: &Gram) -> Result<bool> {
    if !m.is_square() || m.nrows() != g.rank() {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{}, form has rank {}",
            m.nrows(),
            m.ncols(),
            g.rank()
        )));
    }
    let lhs = m.transpose().mul(g.mat())?.mul(m)?;
    Ok(lhs == *g.mat())
}

/// Extend an isometry of `g1` by the identity on `g2`, block-diagonally.
pub fn extend_by_identity(m: &IntMat, g1: &Gram, g2: &Gram) -> Result<IntMat> {
    if !is_isometry(m, g1)? {
        return Err(Error::NotIsometry);
    }
    Ok(m.block_diag(&Mat::identity(g2.rank())))
}

/// Primitive basis (rows) of the sublattice `{v : p(M)·v = 0}`.
///
/// The integer kernel of an integer matrix is automatically saturated, so
/// the Hermite-based kernel basis is primitive.
pub fn kernel_sublattice(m: &IntMat, p: &IntPoly) -> Result<IntMat> {
    let pm = m.poly_at(p)?;
    Ok(pm.integer_kernel())
}

/// Does `v` lie in the lattice spanned by the rows of `basis`?
pub fn in_row_lattice(basis: &IntMat, v: &[BigInt]) -> bool {
    if basis.ncols() != v.len() {
        return false;
    }
    if basis.nrows() == 0 {
        return v.iter().all(|x| x.is_zero());
    }
    let a = basis.transpose().to_rat();
    let b: Vec<BigRational> = v.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    match a.solve(&b) {
        Some(x) => x.iter().all(|c| c.is_integer()),
        None => false,
    }
}

/// One τ-eigenspace record: the trace value, the numeric kernel
/// dimension, the signature of the form restricted to it (None when an
/// eigenvalue sits within `tol` of zero), the smallest restricted
/// eigenvalue magnitude, and the kernel-equation residual.
#[derive(Clone, Debug)]
pub struct EigenspaceEntry {
    pub tau: f64,
    pub tau_bracket: RatInterval,
    pub dimension: usize,
    pub signature: Option<(usize, usize)>,
    pub margin: f64,
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct EigenspaceReport {
    pub entries: Vec<EigenspaceEntry>,
    pub tol: f64,
}

impl EigenspaceReport {
    pub fn count_with_signature(&self, sig: (usize, usize)) -> usize {
        self.entries.iter().filter(|e| e.signature == Some(sig)).count()
    }
}

fn to_dmatrix(m: &IntMat) -> DMatrix<f64> {
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
        m.get(i, j).to_f64().expect("lattice entries fit in f64")
    })
}

/// Sign pattern of `g` restricted to the column span of `basis`, judged
/// with an eigenvalue margin; `None` when some eigenvalue of the
/// restricted form sits within `tol` of zero.
fn restricted_signature(
    basis: &DMatrix<f64>,
    g: &DMatrix<f64>,
    tol: f64,
) -> (Option<(usize, usize)>, f64) {
    let w = basis.transpose() * g * basis;
    let w_sym = (&w + &w.transpose()) * 0.5;
    let eig = w_sym.symmetric_eigen();
    let margin = eig.eigenvalues.iter().fold(f64::INFINITY, |a, &x| a.min(x.abs()));
    if margin <= tol {
        (None, margin)
    } else {
        let pos = eig.eigenvalues.iter().filter(|&&x| x > 0.0).count();
        let neg = eig.eigenvalues.iter().filter(|&&x| x < 0.0).count();
        (Some((pos, neg)), margin)
    }
}

/// Numeric signatures of `E_τ = ker(M + M⁻¹ − τI)` for every root τ of
/// the trace polynomial of the reciprocal (non-±1) part of `char(M)`
/// inside `(−2, 2)`.
///
/// τ values are isolated and refined exactly first; only the kernel bases
/// and restricted-form eigenvalues are floating point, and both come back
/// with residuals and margins.
pub fn eigenspace_signatures(m: &IntMat, g: &Gram, tol: &BigRational) -> Result<EigenspaceReport> {
    if !is_isometry(m, g)? {
        return Err(Error::NotIsometry);
    }
    let tol_f = rat_to_f64(tol);
    let cp = m.char_poly()?;
    let one = rat_int(1);
    let minus_one = rat_int(-1);
    let a1 = cp.multiplicity_at(&one);
    let am1 = cp.multiplicity_at(&minus_one);
    let mut d = cp;
    let lin1 = IntPoly::from_descending_i64(&[1, -1]);
    let linm1 = IntPoly::from_descending_i64(&[1, 1]);
    for _ in 0..a1 {
        d = d.exact_div(&lin1)?;
    }
    for _ in 0..am1 {
        d = d.exact_div(&linm1)?;
    }
    if d.deg0() == 0 {
        return Ok(EigenspaceReport { entries: Vec::new(), tol: tol_f });
    }
    if !d.is_monic_reciprocal()? || d.deg0() % 2 != 0 {
        return Err(Error::NotReciprocal);
    }
    let r = trace_poly(&d)?;

    // simple trace roots in (−2,2): the multiplicity-aware count must
    // match the distinct count, and refined brackets must be separated
    let lo2 = rat_int(-2);
    let hi2 = rat_int(2);
    let with_mult = count_with_multiplicity(&r, &Endpoint::int(-2), &Endpoint::int(2))?;
    let distinct = count_distinct(&r, &Endpoint::int(-2), &Endpoint::int(2))?;
    if with_mult != distinct {
        return Err(Error::ClusteredRoots("repeated trace roots in (-2,2)".into()));
    }
    let brackets = isolate_and_refine(&r, &lo2, &hi2, tol)?;
    let ten_tol = tol * BigRational::from_integer(10.into());
    for pair in brackets.windows(2) {
        let gap = pair[1].lo() - pair[0].hi();
        if gap <= ten_tol {
            return Err(Error::ClusteredRoots("trace roots closer than 10·tol".into()));
        }
    }

    let inv = m.inverse_unimodular()?;
    let b_exact = m.add(&inv)?;
    let b = to_dmatrix(&b_exact);
    let gf = to_dmatrix(g.mat());
    let n = g.rank();

    let mut entries = Vec::new();
    for bracket in brackets {
        let tau = bracket.midpoint_f64();
        let k = &b - DMatrix::identity(n, n) * tau;
        let svd = k.clone().svd(false, true);
        let smax = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
        let thresh = tol_f.sqrt() * smax.max(1.0);
        let v_t = svd.v_t.as_ref().expect("svd computed with V");
        let mut kernel_rows: Vec<usize> = Vec::new();
        for (i, s) in svd.singular_values.iter().enumerate() {
            if *s < thresh {
                kernel_rows.push(i);
            }
        }
        // rows of V^T beyond the singular value list also span the kernel
        for i in svd.singular_values.len()..v_t.nrows() {
            kernel_rows.push(i);
        }
        let dim = kernel_rows.len();
        if dim == 0 {
            entries.push(EigenspaceEntry {
                tau,
                tau_bracket: bracket,
                dimension: 0,
                signature: None,
                margin: 0.0,
                residual: 0.0,
            });
            continue;
        }
        let basis = DMatrix::from_fn(n, dim, |i, j| v_t.row(kernel_rows[j])[i]);
        let residual = (&k * &basis).abs().max();
        let (signature, margin) = restricted_signature(&basis, &gf, tol_f);
        entries.push(EigenspaceEntry { tau, tau_bracket: bracket, dimension: dim, signature, margin, residual });
    }
    Ok(EigenspaceReport { entries, tol: tol_f })
}

/// On-disk document for a form together with a candidate isometry.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IsometryFile {
    pub gram: Vec<Vec<i64>>,
    pub matrix: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl IsometryFile {
    pub fn from_parts(g: &Gram, m: &IntMat, name: Option<String>) -> Result<Self> {
        let conv = |mat: &IntMat| -> Result<Vec<Vec<i64>>> {
            mat.rows_vec()
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|x| {
                            x.to_i64().ok_or_else(|| Error::FileFormat("entry exceeds i64".into()))
                        })
                        .collect()
                })
                .collect()
        };
        Ok(IsometryFile { gram: conv(g.mat())?, matrix: conv(m)?, name })
    }

    pub fn to_parts(&self) -> Result<(Gram, IntMat)> {
        let conv = |rows: &Vec<Vec<i64>>| -> Result<IntMat> {
            Mat::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                    .collect(),
            )
        };
        let g = Gram::new(conv(&self.gram)?)?;
        let m = conv(&self.matrix)?;
        if m.nrows() != g.rank() || m.ncols() != g.rank() {
            return Err(Error::FileFormat("matrix and gram sizes disagree".into()));
        }
        Ok((g, m))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::FileFormat(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::FileFormat(e.to_string()))
    }
}
