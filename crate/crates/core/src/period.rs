//! Numeric period-matrix model for a torus witness.
//!
//! Everything else about a witness is exact; the lattice the torus lives
//! on is transcendental data, so this module exhibits a floating-point
//! model instead: eigenvalues `γ₁, γ₂` of the quartic `P` (one from each
//! conjugate pair, `|γ₁| ≥ |γ₂|`) and a 2×4 period matrix `Π` whose rows
//! are eigenvectors of `F1`, with the defining relation
//! `diag(γ₁,γ₂)·Π = Π·F1ᵀ` verified to a reported residual.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::{Error, IntPoly, Result};

#[derive(Clone, Debug)]
pub struct PeriodModel {
    pub gamma1: Complex64,
    pub gamma2: Complex64,
    /// Rows are the eigenvectors for γ₁ and γ₂.
    pub pi: [[Complex64; 4]; 2],
    /// Max-norm of `diag(γ)·Π − Π·F1ᵀ`.
    pub residual: f64,
}

fn poly_coeffs_c64(p: &IntPoly) -> Vec<Complex64> {
    p.coeffs()
        .iter()
        .map(|c| Complex64::new(c.to_f64().expect("witness coefficients fit in f64"), 0.0))
        .collect()
}

fn eval_c64(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// All roots of a small monic polynomial by Durand–Kerner iteration with
/// a few Newton polish steps.
fn roots_c64(p: &IntPoly) -> Vec<Complex64> {
    let coeffs = poly_coeffs_c64(p);
    let n = p.deg0();
    let radius = 1.0
        + coeffs
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut xs: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32 + 1)).collect();
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= xs[i] - xs[j];
                }
            }
            let step = eval_c64(&coeffs, xs[i]) / denom;
            xs[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 * radius {
            break;
        }
    }
    let deriv: Vec<Complex64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();
    for x in xs.iter_mut() {
        for _ in 0..3 {
            let d = eval_c64(&deriv, *x);
            if d.norm() > 1e-12 {
                *x -= eval_c64(&coeffs, *x) / d;
            }
        }
    }
    xs
}

/// Build the numeric period model for a monic quartic with constant term
/// 1 whose roots form two genuine conjugate pairs.
pub fn period_matrix(p: &IntPoly, tol: f64) -> Result<PeriodModel> {
    if p.deg0() != 4 || !p.is_monic() {
        return Err(Error::DegreeMismatch { expected: 4, got: p.deg0() });
    }
    let roots = roots_c64(p);

    for i in 0..4 {
        for j in i + 1..4 {
            if (roots[i] - roots[j]).norm() < tol {
                return Err(Error::ClusteredRoots(format!(
                    "roots {} and {} within {tol}",
                    roots[i], roots[j]
                )));
            }
        }
    }
    let scale = 1.0 + roots.iter().map(|r| r.norm()).fold(0.0f64, f64::max);
    if roots.iter().any(|r| r.im.abs() < tol * scale) {
        return Err(Error::ConjugatePairing("real roots cannot form conjugate pairs".into()));
    }

    // pair each upper-half-plane root with its conjugate
    let mut upper: Vec<Complex64> = roots.iter().copied().filter(|r| r.im > 0.0).collect();
    let lower: Vec<Complex64> = roots.iter().copied().filter(|r| r.im < 0.0).collect();
    if upper.len() != 2 || lower.len() != 2 {
        return Err(Error::ConjugatePairing("roots do not split into two conjugate pairs".into()));
    }
    for u in &upper {
        if !lower.iter().any(|l| (l.conj() - u).norm() < 1e-6 * scale) {
            return Err(Error::ConjugatePairing("no conjugate partner found".into()));
        }
    }
    upper.sort_by(|a, b| b.norm().partial_cmp(&a.norm()).unwrap());
    let gamma1 = upper[0];
    let gamma2 = upper[1];
    if (gamma1.norm() * gamma2.norm() - 1.0).abs() > 100.0 * tol {
        return Err(Error::ConjugatePairing(
            "pair moduli are not reciprocal; wrong pairing".into(),
        ));
    }

    // eigenvector of the companion matrix for eigenvalue γ: Horner tails
    let c = poly_coeffs_c64(p);
    let row = |g: Complex64| -> [Complex64; 4] {
        let v3 = Complex64::new(1.0, 0.0);
        let v2 = g + c[3];
        let v1 = g * v2 + c[2];
        let v0 = g * v1 + c[1];
        [v0, v1, v2, v3]
    };
    let pi = [row(gamma1), row(gamma2)];

    // residual of diag(γ)·Π − Π·F1ᵀ with F1 the companion of p
    let f1 = crate::torus::companion(p)?;
    let f1f: Vec<Vec<f64>> = f1
        .rows_vec()
        .iter()
        .map(|r| r.iter().map(|x| x.to_f64().unwrap()).collect())
        .collect();
    let gammas = [gamma1, gamma2];
    let mut residual = 0.0f64;
    for (r, row_v) in pi.iter().enumerate() {
        for j in 0..4 {
            // (Π·F1ᵀ)[r][j] = Σ_k Π[r][k]·F1[j][k]
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..4 {
                acc += row_v[k] * f1f[j][k];
            }
            let diff = gammas[r] * row_v[j] - acc;
            residual = residual.max(diff.norm());
        }
    }
    if residual > tol {
        return Err(Error::Internal(format!(
            "period residual {residual} exceeds tolerance {tol}"
        )));
    }
    Ok(PeriodModel { gamma1, gamma2, pi, residual })
}
