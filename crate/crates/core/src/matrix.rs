//! Dense matrices over a generic scalar, with the exact integer linear
//! algebra the lattice and torus modules rely on: fraction-free
//! determinants, characteristic polynomials, unimodular inverses, and
//! integer kernels through a column Hermite reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::scalar::Coeff;
use crate::{Error, IntMat, IntPoly, RatMat, Result};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T> {
    nrows: usize,
    ncols: usize,
    data: Vec<T>,
}

impl<T: Coeff> Mat<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Mat { nrows, ncols, data: vec![T::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Mat { nrows, ncols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(nrows * ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                data.push(f(i, j));
            }
        }
        Mat { nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.ncols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<T>> {
        (0..self.nrows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.ncols, self.nrows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { nrows: self.nrows, ncols: self.ncols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} · {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut out: Mat<T> = Mat::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(Error::DimensionMismatch("add".into()));
        }
        Ok(Mat::from_fn(self.nrows, self.ncols, |i, j| {
            self.get(i, j).clone() + other.get(i, j).clone()
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(Error::DimensionMismatch("sub".into()));
        }
        Ok(Mat::from_fn(self.nrows, self.ncols, |i, j| {
            self.get(i, j).clone() - other.get(i, j).clone()
        }))
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        let n = self.nrows + other.nrows;
        let m = self.ncols + other.ncols;
        Mat::from_fn(n, m, |i, j| {
            if i < self.nrows && j < self.ncols {
                self.get(i, j).clone()
            } else if i >= self.nrows && j >= self.ncols {
                other.get(i - self.nrows, j - self.ncols).clone()
            } else {
                T::zero()
            }
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.nrows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl IntMat {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rat(&self) -> RatMat {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.nrows).map(|i| self.get(i, i)).sum()
    }

    /// Fraction-free determinant (Bareiss).
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.nrows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(p) => {
                        for j in 0..n {
                            let tmp = a.get(k, j).clone();
                            let v = a.get(p, j).clone();
                            a.set(k, j, v);
                            a.set(p, j, tmp);
                        }
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j);
                    a.set(i, j, &num / &prev);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1).clone())
    }

    /// Exact characteristic polynomial `det(tI − A)` by the
    /// Faddeev–LeVerrier recursion; every division is exact over ℤ.
    pub fn char_poly(&self) -> Result<IntPoly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("char poly of a non-square matrix".into()));
        }
        let n = self.nrows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        if n == 0 {
            return Ok(Poly::new(coeffs));
        }
        let mut m = self.clone();
        let mut c = -m.trace();
        coeffs[n - 1] = c.clone();
        for k in 2..=n {
            let mut shifted = m;
            for i in 0..n {
                let v = shifted.get(i, i) + &c;
                shifted.set(i, i, v);
            }
            m = self.mul(&shifted)?;
            let tr = m.trace();
            let kk = BigInt::from(k);
            let (q, r) = tr.div_rem(&kk);
            if !r.is_zero() {
                return Err(Error::Internal("inexact Faddeev-LeVerrier division".into()));
            }
            c = -q;
            coeffs[n - k] = c.clone();
        }
        Ok(Poly::new(coeffs))
    }

    /// Exact inverse; errors unless the inverse is integral.
    pub fn inverse_unimodular(&self) -> Result<IntMat> {
        let inv = self.to_rat().inverse().ok_or(Error::NotInvertible)?;
        inv.try_to_int().ok_or(Error::NotInvertible)
    }

    /// Evaluate `p` at this matrix.
    pub fn poly_at(&self, p: &IntPoly) -> Result<IntMat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("polynomial of a non-square matrix".into()));
        }
        let n = self.nrows;
        let mut acc: IntMat = Mat::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc)?;
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        Ok(acc)
    }

    /// Primitive basis (as rows) of the integer kernel `{v : Av = 0}`.
    ///
    /// Column-reduces `A·U = H` with `U` unimodular; the columns of `U`
    /// matching the zero columns of `H` form a basis of the kernel, which
    /// is automatically saturated.
    pub fn integer_kernel(&self) -> IntMat {
        let m = self.nrows;
        let n = self.ncols;
        let mut h = self.clone();
        let mut u: IntMat = Mat::identity(n);
        let mut col = 0usize;
        for row in 0..m {
            if col >= n {
                break;
            }
            loop {
                let pivot = (col..n)
                    .filter(|&j| !h.get(row, j).is_zero())
                    .min_by_key(|&j| h.get(row, j).abs());
                let Some(p) = pivot else { break };
                if p != col {
                    swap_cols(&mut h, p, col);
                    swap_cols(&mut u, p, col);
                }
                let mut clean = true;
                for j in col + 1..n {
                    if h.get(row, j).is_zero() {
                        continue;
                    }
                    let q = h.get(row, j) / h.get(row, col);
                    if !q.is_zero() {
                        sub_col_multiple(&mut h, j, col, &q);
                        sub_col_multiple(&mut u, j, col, &q);
                    }
                    if !h.get(row, j).is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            if col < n && !h.get(row, col).is_zero() {
                col += 1;
            }
        }
        let basis: Vec<Vec<BigInt>> = (col..n)
            .map(|j| (0..n).map(|i| u.get(i, j).clone()).collect())
            .collect();
        if basis.is_empty() {
            Mat { nrows: 0, ncols: n, data: Vec::new() }
        } else {
            Mat::from_rows(basis).expect("kernel rows are uniform")
        }
    }
}

fn swap_cols(m: &mut IntMat, a: usize, b: usize) {
    for i in 0..m.nrows() {
        let tmp = m.get(i, a).clone();
        let v = m.get(i, b).clone();
        m.set(i, a, v);
        m.set(i, b, tmp);
    }
}

fn sub_col_multiple(m: &mut IntMat, target: usize, source: usize, q: &BigInt) {
    for i in 0..m.nrows() {
        let v = m.get(i, target) - q * m.get(i, source);
        m.set(i, target, v);
    }
}

impl RatMat {
    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RatMat> {
        if !self.is_square() {
            return None;
        }
        let n = self.nrows;
        let mut a = self.clone();
        let mut inv: RatMat = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&i| !a.get(i, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let t1 = a.get(pivot, j).clone();
                    let t2 = a.get(col, j).clone();
                    a.set(pivot, j, t2);
                    a.set(col, j, t1);
                    let s1 = inv.get(pivot, j).clone();
                    let s2 = inv.get(col, j).clone();
                    inv.set(pivot, j, s2);
                    inv.set(col, j, s1);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                let v = a.get(col, j) / &p;
                a.set(col, j, v);
                let w = inv.get(col, j) / &p;
                inv.set(col, j, w);
            }
            for i in 0..n {
                if i == col || a.get(i, col).is_zero() {
                    continue;
                }
                let f = a.get(i, col).clone();
                for j in 0..n {
                    let v = a.get(i, j) - &f * a.get(col, j);
                    a.set(i, j, v);
                    let w = inv.get(i, j) - &f * inv.get(col, j);
                    inv.set(i, j, w);
                }
            }
        }
        Some(inv)
    }

    pub fn try_to_int(&self) -> Option<IntMat> {
        let mut data = Vec::with_capacity(self.data.len());
        for x in &self.data {
            if !x.is_integer() {
                return None;
            }
            data.push(x.to_integer());
        }
        Some(Mat { nrows: self.nrows, ncols: self.ncols, data })
    }

    /// One exact solution of `A·x = b`, or `None` when inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        if b.len() != self.nrows {
            return None;
        }
        let n = self.nrows;
        let m = self.ncols;
        let mut a = self.clone();
        let mut rhs = b.to_vec();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut row = 0usize;
        for col in 0..m {
            let Some(p) = (row..n).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m {
                    let t1 = a.get(p, j).clone();
                    let t2 = a.get(row, j).clone();
                    a.set(p, j, t2);
                    a.set(row, j, t1);
                }
                rhs.swap(p, row);
            }
            let pv = a.get(row, col).clone();
            for j in 0..m {
                let v = a.get(row, j) / &pv;
                a.set(row, j, v);
            }
            rhs[row] = &rhs[row] / &pv;
            for i in 0..n {
                if i == row || a.get(i, col).is_zero() {
                    continue;
                }
                let f = a.get(i, col).clone();
                for j in 0..m {
                    let v = a.get(i, j) - &f * a.get(row, j);
                    a.set(i, j, v);
                }
                rhs[i] = &rhs[i] - &f * &rhs[row];
            }
            pivots.push((row, col));
            row += 1;
            if row == n {
                break;
            }
        }
        if rhs.iter().skip(row).any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = vec![BigRational::zero(); m];
        for (r, c) in pivots {
            x[c] = rhs[r].clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::big;

    fn im(rows: &[&[i64]]) -> IntMat {
        IntMat::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(im(&[&[2, 1], &[1, 1]]).det().unwrap(), big(1));
        assert_eq!(im(&[&[1, 2], &[2, 4]]).det().unwrap(), big(0));
        assert_eq!(
            im(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).det().unwrap(),
            big(1)
        );
        assert_eq!(
            im(&[&[3, 0, 0], &[0, -2, 0], &[0, 0, 5]]).det().unwrap(),
            big(-30)
        );
    }

    #[test]
    fn char_poly_matches_interpolated_determinant() {
        // independent route: evaluate det(xI − A) at integer points
        let cases = [
            im(&[&[0, 1], &[1, 1]]),
            im(&[&[1, 2, 3], &[0, -1, 4], &[2, 2, 2]]),
            im(&[&[0, 0, 0, -1], &[1, 0, 0, 0], &[0, 1, 0, -3], &[0, 0, 1, 0]]),
        ];
        for a in cases {
            let cp = a.char_poly().unwrap();
            let n = a.nrows();
            for x in -3i64..=3 {
                let xi: IntMat = Mat::from_fn(n, n, |i, j| {
                    if i == j { big(x) - a.get(i, j) } else { -a.get(i, j).clone() }
                });
                assert_eq!(
                    cp.eval_rat(&crate::scalar::rat_int(x)).to_integer(),
                    xi.det().unwrap()
                );
            }
        }
    }

    #[test]
    fn unimodular_inverse_round_trips() {
        let a = im(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse_unimodular().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Mat::identity(2));
        let singular = im(&[&[1, 1], &[1, 1]]);
        assert!(singular.inverse_unimodular().is_err());
        let non_integral = im(&[&[2, 0], &[0, 1]]);
        assert!(non_integral.inverse_unimodular().is_err());
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let a = im(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.integer_kernel();
        assert_eq!(k.nrows(), 2);
        for r in 0..k.nrows() {
            let v: Vec<BigInt> = k.row(r).to_vec();
            for i in 0..a.nrows() {
                let dot: BigInt = (0..3).map(|j| a.get(i, j) * &v[j]).sum();
                assert!(dot.is_zero());
            }
        }
        let full: IntMat = Mat::identity(4);
        assert_eq!(full.integer_kernel().nrows(), 0);
    }

    #[test]
    fn kernel_is_primitive() {
        // A = [2 4]; the integer kernel is spanned by (2, -1), not (4, -2)
        let a = im(&[&[2, 4]]);
        let k = a.integer_kernel();
        assert_eq!(k.nrows(), 1);
        let g = k.row(0)[0].gcd(&k.row(0)[1]);
        assert_eq!(g, big(1));
    }

    #[test]
    fn poly_at_matrix() {
        let a = im(&[&[0, 1], &[1, 1]]);
        let cp = a.char_poly().unwrap();
        let z = a.poly_at(&cp).unwrap();
        assert_eq!(z, Mat::zeros(2, 2));
    }

    #[test]
    fn rational_solve() {
        let a = im(&[&[1, 2], &[3, 4]]).to_rat();
        let b = vec![crate::scalar::rat_int(5), crate::scalar::rat_int(11)];
        let x = a.solve(&b).unwrap();
        assert_eq!(x[0], crate::scalar::rat_int(1));
        assert_eq!(x[1], crate::scalar::rat_int(2));
        let inconsistent = im(&[&[1, 1], &[1, 1]]).to_rat();
        assert!(inconsistent
            .solve(&[crate::scalar::rat_int(0), crate::scalar::rat_int(1)])
            .is_none());
    }
}
