//! Complex Hermitian matrices backed by the shared dense matrix type,
//! with eigenvalues through a real symmetric Jacobi solver.

use num_complex::Complex64;
use radon_core::Mat;

/// Error type for the numeric crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IntError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not Hermitian: max asymmetry {0:.3e}")]
    NotHermitian(f64),
    #[error("outside supported range: {0}")]
    Unsupported(String),
    #[error("convergence failure: {0}")]
    NoConvergence(String),
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] radon_core::CoreError),
}

const HERM_TOL: f64 = 1e-12;

/// A complex Hermitian matrix; construction enforces a_ji = conj(a_ij).
#[derive(Debug, Clone, PartialEq)]
pub struct HermMatrix {
    m: Mat<Complex64>,
}

impl HermMatrix {
    pub fn new(m: Mat<Complex64>) -> Result<Self, IntError> {
        if !m.is_square() {
            return Err(IntError::Dimension("Hermitian matrix must be square".into()));
        }
        let mut worst = 0.0f64;
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
            }
        }
        if worst > HERM_TOL {
            return Err(IntError::NotHermitian(worst));
        }
        Ok(Self { m })
    }

    /// Symmetrize (A + A*)/2 and wrap.
    pub fn hermitize(m: &Mat<Complex64>) -> Result<Self, IntError> {
        if !m.is_square() {
            return Err(IntError::Dimension("Hermitian matrix must be square".into()));
        }
        let h = Mat::from_fn(m.rows(), m.cols(), |i, j| {
            (m[(i, j)] + m[(j, i)].conj()) * Complex64::new(0.5, 0.0)
        });
        Ok(Self { m: h })
    }

    pub fn zero(r: usize) -> Self {
        Self { m: Mat::zeros(r, r) }
    }

    pub fn from_diag(d: &[f64]) -> Self {
        let r = d.len();
        let mut m = Mat::zeros(r, r);
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = Complex64::new(x, 0.0);
        }
        Self { m }
    }

    pub fn r(&self) -> usize {
        self.m.rows()
    }

    pub fn mat(&self) -> &Mat<Complex64> {
        &self.m
    }

    pub fn into_mat(self) -> Mat<Complex64> {
        self.m
    }

    /// Real eigenvalues in ascending order, via the 2r×2r real symmetric
    /// doubling [[B, -C],[C, B]] of A = B + iC.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let r = self.r();
        let n = 2 * r;
        let mut s = vec![0.0f64; n * n];
        for i in 0..r {
            for j in 0..r {
                let z = self.m[(i, j)];
                s[i * n + j] = z.re;
                s[(i + r) * n + (j + r)] = z.re;
                s[i * n + (j + r)] = -z.im;
                s[(i + r) * n + j] = z.im;
            }
        }
        let mut eig = jacobi_symmetric_eigenvalues(&mut s, n);
        eig.sort_by(|a, b| a.total_cmp(b));
        // Every eigenvalue of A appears twice in the doubled spectrum.
        eig.into_iter().step_by(2).collect()
    }

    pub fn trace_re(&self) -> f64 {
        (0..self.r()).map(|i| self.m[(i, i)].re).sum()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues()
            .into_iter()
            .fold(0.0f64, |acc, x| acc.max(x.abs()))
    }
}

/// Eigenvalues of a dense real symmetric matrix by cyclic Jacobi sweeps.
/// Destroys the input buffer.
pub fn jacobi_symmetric_eigenvalues(a: &mut [f64], n: usize) -> Vec<f64> {
    let mut v_unused = None::<&mut [f64]>;
    jacobi_symmetric(a, n, &mut v_unused);
    (0..n).map(|i| a[i * n + i]).collect()
}

/// Cyclic Jacobi on a real symmetric matrix; optionally accumulates the
/// orthogonal transform into `vectors` (row-major n×n, pre-seeded identity).
pub fn jacobi_symmetric(a: &mut [f64], n: usize, vectors: &mut Option<&mut [f64]>) {
    if n <= 1 {
        return;
    }
    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i * n + j] * a[i * n + j];
            }
        }
        if off.sqrt() < 1e-14 * (1.0 + frob(a, n)) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                if let Some(v) = vectors.as_deref_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
}

fn frob(a: &[f64], n: usize) -> f64 {
    a.iter().take(n * n).map(|x| x * x).sum::<f64>().sqrt()
}

/// exp(Tr U) for complex square matrices.
pub fn etr(m: &Mat<Complex64>) -> Complex64 {
    let mut t = Complex64::new(0.0, 0.0);
    for i in 0..m.rows() {
        t += m[(i, i)];
    }
    t.exp()
}

/// Principal log-determinant of a complex matrix.
pub fn log_det(m: &Mat<Complex64>) -> Result<Complex64, IntError> {
    let d = m.det()?;
    if d.norm() == 0.0 {
        return Err(IntError::Invalid("log of zero determinant".into()));
    }
    Ok(d.ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eigenvalues_of_known_hermitian() {
        // [[2, i],[-i, 2]] has eigenvalues 1 and 3.
        let m = Mat::from_vec(2, 2, vec![c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)])
            .unwrap();
        let h = HermMatrix::new(m).unwrap();
        let eig = h.eigenvalues();
        assert!((eig[0] - 1.0).abs() < 1e-12);
        assert!((eig[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_match_trace_and_det() {
        let mut state = 0x12345u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 33) as f64 / (1u64 << 31) as f64) - 1.0
        };
        for _ in 0..20 {
            let r = 3;
            let mut m = Mat::zeros(r, r);
            for i in 0..r {
                m[(i, i)] = c(next(), 0.0);
                for j in i + 1..r {
                    let z = c(next(), next());
                    m[(i, j)] = z;
                    m[(j, i)] = z.conj();
                }
            }
            let h = HermMatrix::new(m.clone()).unwrap();
            let eig = h.eigenvalues();
            let tr: f64 = (0..r).map(|i| m[(i, i)].re).sum();
            assert!((eig.iter().sum::<f64>() - tr).abs() < 1e-10);
            let det = m.det().unwrap();
            let prod: f64 = eig.iter().product();
            assert!((det.re - prod).abs() < 1e-9 && det.im.abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Mat::from_vec(2, 2, vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)])
            .unwrap();
        assert!(HermMatrix::new(m.clone()).is_err());
        assert!(HermMatrix::hermitize(&m).is_ok());
    }
}
