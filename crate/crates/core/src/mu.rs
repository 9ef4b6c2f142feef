//! The μ polynomial engine: coefficients of powers of a truncated series
//! M(x,T) = x₁T + x₂T² + ⋯, the group they generate, and its operations.

use crate::matrix::Mat;
use crate::scalar::{CoreError, Ring};

/// Truncated polynomial arithmetic mod T^p, dense coefficient vectors of
/// length p with index = degree.
fn poly_mul_trunc<T: Ring>(a: &[T], b: &[T], p: usize) -> Vec<T> {
    let mut out = vec![T::zero(); p];
    for (i, ai) in a.iter().enumerate().take(p) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(p - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

/// Coefficient vector (c₁, …, c_{p-1}) of an order-p substitution series.
/// The group-element condition is c₁ ≠ 0; the identity is (1, 0, …, 0).
#[derive(Debug, Clone, PartialEq)]
pub struct MuVector<T> {
    p: usize,
    c: Vec<T>,
}

impl<T: Ring> MuVector<T> {
    pub fn new(p: usize, c: Vec<T>) -> Result<Self, CoreError> {
        if p == 0 {
            return Err(CoreError::Invalid("mu order must be ≥ 1".into()));
        }
        if c.len() + 1 != p {
            return Err(CoreError::DimensionMismatch(format!(
                "order-{} mu vector needs {} coefficients, got {}",
                p,
                p - 1,
                c.len()
            )));
        }
        Ok(Self { p, c })
    }

    pub fn identity(p: usize) -> Self {
        let mut c = vec![T::zero(); p.saturating_sub(1)];
        if !c.is_empty() {
            c[0] = T::one();
        }
        Self { p, c }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// c_j for j = 1..p-1.
    pub fn c(&self, j: usize) -> &T {
        &self.c[j - 1]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn is_group_element(&self) -> bool {
        self.p == 1 || !self.c[0].is_zero()
    }

    /// The series M(c,T) as a dense degree-indexed vector of length p.
    fn series(&self) -> Vec<T> {
        let mut s = vec![T::zero(); self.p];
        for (k, v) in self.c.iter().enumerate() {
            s[k + 1] = v.clone();
        }
        s
    }

    /// μ_{i,j}(c): coefficient of T^j in M(c,T)^i, truncated at T^p.
    pub fn mu_eval(&self, i: usize, j: usize) -> Result<T, CoreError> {
        if i >= self.p || j >= self.p {
            return Err(CoreError::IndexOutOfRange(format!(
                "mu_{{{i},{j}}} with order p = {}",
                self.p
            )));
        }
        Ok(self.mu_row(i)[j].clone())
    }

    /// Row i of the μ matrix: coefficients of M(c,T)^i.
    pub fn mu_row(&self, i: usize) -> Vec<T> {
        let mut row = vec![T::zero(); self.p];
        row[0] = T::one();
        let s = self.series();
        for _ in 0..i {
            row = poly_mul_trunc(&row, &s, self.p);
        }
        row
    }

    /// The p×p scalar matrix (μ_{i,j}(c)).
    pub fn mu_matrix(&self) -> Mat<T> {
        let mut m = Mat::zeros(self.p, self.p);
        let s = self.series();
        let mut row = vec![T::zero(); self.p];
        row[0] = T::one();
        for i in 0..self.p {
            for j in 0..self.p {
                m[(i, j)] = row[j].clone();
            }
            if i + 1 < self.p {
                row = poly_mul_trunc(&row, &s, self.p);
            }
        }
        m
    }

    /// Group law: coefficients of the substitution M(a, M(b, T)) mod T^p,
    /// equivalently μ(a)·μ(b) = μ(a∘b) as p×p matrices.
    pub fn compose(&self, rhs: &Self) -> Result<Self, CoreError> {
        if self.p != rhs.p {
            return Err(CoreError::DimensionMismatch(format!(
                "mu orders {} vs {}",
                self.p, rhs.p
            )));
        }
        if !self.is_group_element() || !rhs.is_group_element() {
            return Err(CoreError::DegenerateMu);
        }
        let p = self.p;
        let sb = rhs.series();
        // z = Σ_k a_k · M(b,T)^k, k = 1..p-1.
        let mut z = vec![T::zero(); p];
        let mut power = sb.clone();
        for k in 1..p {
            let ak = &self.c[k - 1];
            if !ak.is_zero() {
                for (d, pd) in power.iter().enumerate() {
                    z[d] = z[d].add(&ak.mul(pd));
                }
            }
            if k + 1 < p {
                power = poly_mul_trunc(&power, &sb, p);
            }
        }
        Self::new(p, z[1..].to_vec())
    }

    /// Group inverse: the unique x with self ∘ x = identity.
    pub fn inverse(&self) -> Result<Self, CoreError> {
        if !self.is_group_element() {
            return Err(CoreError::DegenerateMu);
        }
        let p = self.p;
        if p == 1 {
            return Ok(Self::identity(1));
        }
        let c1_inv = self.c[0].inv().ok_or(CoreError::DegenerateMu)?;
        let mut x = vec![T::zero(); p - 1];
        x[0] = c1_inv.clone();
        for j in 2..p {
            // With x_j = 0, compose gives everything except the a₁·x_j term.
            let partial = Self::new(p, x.clone())?;
            let z = self.compose(&partial)?;
            x[j - 1] = c1_inv.mul(&z.c[j - 1].neg());
        }
        Self::new(p, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::Stream;
    use crate::scalar::{rat, Rat};

    fn mv(c: &[Rat]) -> MuVector<Rat> {
        MuVector::new(c.len() + 1, c.to_vec()).unwrap()
    }

    #[test]
    fn mu_base_cases() {
        let c = mv(&[rat(3, 1), rat(5, 1), rat(7, 1)]);
        // μ_{0,0} = 1 and μ_{0,j} = 0 for j ≥ 1.
        assert_eq!(c.mu_eval(0, 0).unwrap(), rat(1, 1));
        assert_eq!(c.mu_eval(0, 1).unwrap(), rat(0, 1));
        assert_eq!(c.mu_eval(0, 3).unwrap(), rat(0, 1));
        // μ_{i,i} = c₁^i and μ_{1,j} = c_j.
        assert_eq!(c.mu_eval(2, 2).unwrap(), rat(9, 1));
        assert_eq!(c.mu_eval(3, 3).unwrap(), rat(27, 1));
        assert_eq!(c.mu_eval(1, 2).unwrap(), rat(5, 1));
        assert_eq!(c.mu_eval(1, 3).unwrap(), rat(7, 1));
        // μ_{i,j} = 0 for i > j.
        assert_eq!(c.mu_eval(2, 1).unwrap(), rat(0, 1));
        // μ_{2,3} = 2c₁c₂.
        assert_eq!(c.mu_eval(2, 3).unwrap(), rat(30, 1));
        assert!(c.mu_eval(4, 0).is_err());
    }

    // μ_{n-2,n-1}(c) = (n-2)·c₁^{n-3}·c₂.
    #[test]
    fn mu_subleading_closed_form() {
        for n in 3..8usize {
            let mut c = vec![rat(2, 1); n - 1];
            c[1] = rat(3, 1);
            let m = mv(&c);
            let want = rat((n as i64 - 2) * 2i64.pow(n as u32 - 3) * 3, 1);
            assert_eq!(m.mu_eval(n - 2, n - 1).unwrap(), want);
        }
    }

    #[test]
    fn compose_examples() {
        // Identity is neutral.
        let b = mv(&[rat(2, 1), rat(-1, 2), rat(4, 3)]);
        let id = MuVector::identity(4);
        assert_eq!(id.compose(&b).unwrap(), b);
        assert_eq!(b.compose(&id).unwrap(), b);
        // p=2: (a₁)∘(b₁) = (a₁b₁).
        let a = mv(&[rat(3, 2)]);
        let b2 = mv(&[rat(4, 1)]);
        assert_eq!(a.compose(&b2).unwrap(), mv(&[rat(6, 1)]));
        // p=3: (x₁,x₂)∘(y₁,y₂) = (x₁y₁, x₁y₂ + x₂y₁²).
        let x = mv(&[rat(2, 1), rat(3, 1)]);
        let y = mv(&[rat(5, 1), rat(7, 1)]);
        let z = x.compose(&y).unwrap();
        assert_eq!(z, mv(&[rat(10, 1), rat(2 * 7 + 3 * 25, 1)]));
    }

    #[test]
    fn inverse_examples() {
        let id = MuVector::<Rat>::identity(5);
        assert_eq!(id.inverse().unwrap(), id);
        // p=3: (c₁,c₂) → (1/c₁, −c₂/c₁³).
        let a = mv(&[rat(2, 1), rat(5, 1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, mv(&[rat(1, 2), rat(-5, 8)]));
        // Degenerate input is rejected.
        assert!(mv(&[rat(0, 1), rat(1, 1)]).inverse().is_err());
    }

    // Group law matches the matrix product μ(a)·μ(b) = μ(a∘b) exactly,
    // and inverses round-trip, for random rational vectors up to p = 8.
    #[test]
    fn matrix_model_and_inverse_roundtrip() {
        let mut st = Stream::new(7);
        for _ in 0..25 {
            let p = 2 + st.below(7) as usize;
            let mut ca = vec![st.rat_nonzero(3)];
            let mut cb = vec![st.rat_nonzero(3)];
            for _ in 2..p {
                ca.push(st.rat_small(3));
                cb.push(st.rat_small(3));
            }
            let a = MuVector::new(p, ca).unwrap();
            let b = MuVector::new(p, cb).unwrap();
            let ab = a.compose(&b).unwrap();
            assert_eq!(
                a.mu_matrix().mul(&b.mu_matrix()).unwrap(),
                ab.mu_matrix()
            );
            let inv = a.inverse().unwrap();
            assert_eq!(a.compose(&inv).unwrap(), MuVector::identity(p));
            assert_eq!(inv.compose(&a).unwrap(), MuVector::identity(p));
        }
    }
}
