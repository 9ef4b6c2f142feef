//! Dense matrices over an arbitrary scalar ring, with exact
//! (fraction-free) determinants and inverses on the rational path.

use crate::scalar::{CoreError, Rat, Ring};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn rat_zero() -> Rat {
    <Rat as Zero>::zero()
}

fn rat_one() -> Rat {
    <Rat as One>::one()
}

/// Dense row-major matrix. Sizes stay at desk scale (≤ ~50), so no sparse
/// storage or blocking is attempted.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, CoreError> {
        if entries.len() != rows * cols {
            return Err(CoreError::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn scalar(n: usize, value: &T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = value.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.check_same_shape(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.check_same_shape(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|a| a.neg())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|a| a.mul(s))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, CoreError> {
        if self.cols != rhs.rows {
            return Err(CoreError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out: Mat<T> = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = &self[(i, k)];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = aik.mul(&rhs[(k, j)]);
                    out[(i, j)] = out[(i, j)].add(&term);
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<T, CoreError> {
        if !self.is_square() {
            return Err(CoreError::DimensionMismatch("trace of non-square".into()));
        }
        let mut t = T::zero();
        for i in 0..self.rows {
            t = t.add(&self[(i, i)]);
        }
        Ok(t)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(idx, e)| {
                    let (i, j) = (idx / self.cols, idx % self.cols);
                    if i == j {
                        *e == T::one()
                    } else {
                        e.is_zero()
                    }
                })
    }

    /// Extract the `size`x`size` block with top-left corner at
    /// `(bi*size, bj*size)`.
    pub fn block(&self, bi: usize, bj: usize, size: usize) -> Mat<T> {
        Mat::from_fn(size, size, |i, j| self[(bi * size + i, bj * size + j)].clone())
    }

    /// Extract a general sub-matrix.
    pub fn submatrix(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Mat<T> {
        Mat::from_fn(rows, cols, |i, j| self[(row0 + i, col0 + j)].clone())
    }

    pub fn set_block(&mut self, row0: usize, col0: usize, b: &Mat<T>) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(row0 + i, col0 + j)] = b[(i, j)].clone();
            }
        }
    }

    /// Assemble a block-diagonal matrix.
    pub fn block_diag(blocks: &[Mat<T>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Stack matrices of equal row count side by side.
    pub fn hstack(blocks: &[Mat<T>]) -> Result<Self, CoreError> {
        let rows = blocks.first().map(|b| b.rows).unwrap_or(0);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(CoreError::DimensionMismatch("hstack row mismatch".into()));
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut c0 = 0;
        for b in blocks {
            out.set_block(0, c0, b);
            c0 += b.cols;
        }
        Ok(out)
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<(), CoreError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(CoreError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.cols + j]
    }
}

// ---------------------------------------------------------------------------
// Exact rational path: fraction-free (Bareiss) elimination.
// ---------------------------------------------------------------------------

impl Mat<Rat> {
    /// Determinant by fraction-free Gaussian elimination over the integers
    /// after clearing denominators. Intermediate entries are minors of the
    /// scaled integer matrix, which keeps coefficient growth polynomial.
    pub fn det(&self) -> Result<Rat, CoreError> {
        if !self.is_square() {
            return Err(CoreError::DimensionMismatch("det of non-square".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(rat_one());
        }
        let (mut m, scale) = self.to_scaled_int();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return Ok(rat_zero());
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k * n + k] * &m[i * n + j] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = num / &prev; // exact by the Sylvester identity
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        let det_int = m[(n - 1) * n + (n - 1)].clone() * BigInt::from(sign);
        Ok(BigRational::new(det_int, BigInt::one()) / scale)
    }

    /// Exact inverse: fraction-free forward elimination on the augmented
    /// system, then rational back-substitution.
    pub fn inverse(&self) -> Result<Mat<Rat>, CoreError> {
        if !self.is_square() {
            return Err(CoreError::DimensionMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        let w = 2 * n;
        let (ints, scale) = self.to_scaled_int();
        // Augment [L*A | I].
        let mut m = vec![BigInt::zero(); n * w];
        for i in 0..n {
            for j in 0..n {
                m[i * w + j] = ints[i * n + j].clone();
            }
            m[i * w + n + i] = BigInt::one();
        }
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k * w + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * w + k].is_zero()) else {
                    return Err(CoreError::Singular("matrix has no inverse".into()));
                };
                for j in 0..w {
                    m.swap(k * w + j, p * w + j);
                }
            }
            if k == n - 1 {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..w {
                    let num = &m[k * w + k] * &m[i * w + j] - &m[i * w + k] * &m[k * w + j];
                    m[i * w + j] = num / &prev;
                }
                m[i * w + k] = BigInt::zero();
            }
            prev = m[k * w + k].clone();
        }
        // Rational back-substitution on the upper-triangular system.
        let big = |b: &BigInt| BigRational::from_integer(b.clone());
        let mut inv = Mat::zeros(n, n);
        for col in 0..n {
            let mut x = vec![rat_zero(); n];
            for i in (0..n).rev() {
                let mut acc = big(&m[i * w + n + col]);
                for j in i + 1..n {
                    acc -= big(&m[i * w + j]) * &x[j];
                }
                x[i] = acc / big(&m[i * w + i]);
            }
            for i in 0..n {
                // Undo the denominator clearing: (L*A)^-1 = A^-1 / L.
                inv[(i, col)] = x[i].clone() * &scale;
            }
        }
        Ok(inv)
    }

    /// Reduced row echelon form over the rationals; returns pivot columns.
    pub fn rref(&self) -> (Mat<Rat>, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !Ring::is_zero(&m[(i, c)])) else {
                continue;
            };
            for j in 0..cols {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(r, j)].clone();
                m[(r, j)] = tmp;
            }
            let piv = m[(r, c)].clone();
            for j in 0..cols {
                m[(r, j)] = &m[(r, j)] / &piv;
            }
            for i in 0..rows {
                if i != r && !Ring::is_zero(&m[(i, c)]) {
                    let f = m[(i, c)].clone();
                    for j in 0..cols {
                        let sub = &m[(r, j)] * &f;
                        m[(i, j)] = &m[(i, j)] - sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        (m, pivots)
    }

    /// Basis of the right kernel (null space), exact.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (rr, pivots) = self.rref();
        let cols = self.cols;
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![rat_zero(); cols];
            v[f] = rat_one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -rr[(row, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Clear denominators: returns (integer entries, L) with self = ints / L.
    fn to_scaled_int(&self) -> (Vec<BigInt>, Rat) {
        let mut l = BigInt::one();
        for e in &self.entries {
            l = l.lcm(e.denom());
        }
        let ints = self
            .entries
            .iter()
            .map(|e| e.numer() * (&l / e.denom()))
            .collect();
        (ints, BigRational::from_integer(l))
    }
}

// ---------------------------------------------------------------------------
// Complex double path: partial-pivot LU.
// ---------------------------------------------------------------------------

impl Mat<Complex64> {
    pub fn det(&self) -> Result<Complex64, CoreError> {
        if !self.is_square() {
            return Err(CoreError::DimensionMismatch("det of non-square".into()));
        }
        let n = self.rows;
        let mut m = self.entries.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let (p, _) = (k..n)
                .map(|i| (i, m[i * n + k].norm_sqr()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if m[p * n + k].norm_sqr() == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            if p != k {
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            det *= m[k * n + k];
            for i in k + 1..n {
                let f = m[i * n + k] / m[k * n + k];
                for j in k..n {
                    let sub = f * m[k * n + j];
                    m[i * n + j] -= sub;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Mat<Complex64>, CoreError> {
        if !self.is_square() {
            return Err(CoreError::DimensionMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        let w = 2 * n;
        let mut m = vec![Complex64::new(0.0, 0.0); n * w];
        for i in 0..n {
            for j in 0..n {
                m[i * w + j] = self[(i, j)];
            }
            m[i * w + n + i] = Complex64::new(1.0, 0.0);
        }
        for k in 0..n {
            let (p, mag) = (k..n)
                .map(|i| (i, m[i * w + k].norm_sqr()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if mag == 0.0 {
                return Err(CoreError::Singular("complex matrix has no inverse".into()));
            }
            if p != k {
                for j in 0..w {
                    m.swap(k * w + j, p * w + j);
                }
            }
            let piv = m[k * w + k];
            for j in 0..w {
                m[k * w + j] /= piv;
            }
            for i in 0..n {
                if i != k {
                    let f = m[i * w + k];
                    if f.norm_sqr() != 0.0 {
                        for j in 0..w {
                            let sub = f * m[k * w + j];
                            m[i * w + j] -= sub;
                        }
                    }
                }
            }
        }
        Ok(Mat::from_fn(n, n, |i, j| m[i * w + n + j]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::Stream;
    use crate::scalar::rat;

    #[test]
    fn det_and_inverse_small() {
        let a = Mat::from_vec(2, 2, vec![rat(2, 1), rat(3, 1), rat(0, 1), rat(10, 1)]).unwrap();
        assert_eq!(a.det().unwrap(), rat(20, 1));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn det_singular_is_zero() {
        let a = Mat::from_vec(2, 2, vec![rat(1, 2), rat(1, 1), rat(1, 1), rat(2, 1)]).unwrap();
        assert_eq!(a.det().unwrap(), rat(0, 1));
        assert!(a.inverse().is_err());
    }

    // Exactness at size 12: associativity and A * A^-1 = 1 hold bit-exactly.
    #[test]
    fn rational_arithmetic_exact_size_12() {
        let mut st = Stream::new(0x5eed);
        for _ in 0..3 {
            let a = st.rat_mat(12, 12, 3);
            let b = st.rat_mat(12, 12, 3);
            let c = st.rat_mat(12, 12, 3);
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
        }
        for _ in 0..3 {
            let a = st.rat_invertible(12, 3);
            let inv = a.inverse().unwrap();
            assert!(a.mul(&inv).unwrap().is_identity());
            assert!(inv.mul(&a).unwrap().is_identity());
        }
    }

    #[test]
    fn kernel_of_rank_deficient() {
        // rows (1,2,3), (2,4,6): kernel is 2-dimensional.
        let a = Mat::from_vec(
            2,
            3,
            vec![rat(1, 1), rat(2, 1), rat(3, 1), rat(2, 1), rat(4, 1), rat(6, 1)],
        )
        .unwrap();
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            let vm = Mat::from_vec(3, 1, v).unwrap();
            assert!(a.mul(&vm).unwrap().is_zero());
        }
    }

    #[test]
    fn complex_inverse_roundtrip() {
        let a = Mat::from_vec(
            2,
            2,
            vec![
                Complex64::new(1.0, 2.0),
                Complex64::new(0.5, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(3.0, 1.0),
            ],
        )
        .unwrap();
        let inv = a.inverse().unwrap();
        let prod = a.mul(&inv).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((prod[(i, j)] - Complex64::new(want, 0.0)).norm() < 1e-12);
            }
        }
    }
}
