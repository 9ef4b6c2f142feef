//! Truncated matrix jets: elements of Mat(r)[w]/(w^p).
//!
//! A jet stores the coefficient list (h₀, …, h_{p-1}); the Jordan group of
//! block upper-triangular block-Toeplitz matrices is exactly the unit group
//! of this algebra, realized by [`Jet::embed`].

use crate::matrix::Mat;
use crate::scalar::{CoreError, Ring};

#[derive(Debug, Clone, PartialEq)]
pub struct Jet<T> {
    r: usize,
    p: usize,
    coeffs: Vec<Mat<T>>,
}

impl<T: Ring> Jet<T> {
    pub fn new(r: usize, p: usize, coeffs: Vec<Mat<T>>) -> Result<Self, CoreError> {
        if p == 0 {
            return Err(CoreError::Invalid("truncation order p must be ≥ 1".into()));
        }
        if coeffs.len() != p {
            return Err(CoreError::DimensionMismatch(format!(
                "jet of order {} needs {} coefficients, got {}",
                p,
                p,
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| c.rows() != r || c.cols() != r) {
            return Err(CoreError::DimensionMismatch(
                "jet coefficients must all be r×r".into(),
            ));
        }
        Ok(Self { r, p, coeffs })
    }

    pub fn identity(r: usize, p: usize) -> Self {
        let mut coeffs = vec![Mat::zeros(r, r); p];
        coeffs[0] = Mat::identity(r);
        Self { r, p, coeffs }
    }

    pub fn zero(r: usize, p: usize) -> Self {
        Self {
            r,
            p,
            coeffs: vec![Mat::zeros(r, r); p],
        }
    }

    /// Constant jet (h₀, 0, …, 0).
    pub fn constant(h0: Mat<T>, p: usize) -> Self {
        let r = h0.rows();
        let mut coeffs = vec![Mat::zeros(r, r); p];
        coeffs[0] = h0;
        Self { r, p, coeffs }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn coeff(&self, k: usize) -> &Mat<T> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Mat<T>] {
        &self.coeffs
    }

    pub fn is_unipotent(&self) -> bool {
        self.coeffs[0].is_identity()
    }

    /// Leading coefficient is zero (Lie-algebra side of exp/log).
    pub fn is_nilpotent(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    fn check_compatible(&self, rhs: &Self) -> Result<(), CoreError> {
        if self.r != rhs.r || self.p != rhs.p {
            return Err(CoreError::DimensionMismatch(format!(
                "jet (r={},p={}) vs (r={},p={})",
                self.r, self.p, rhs.r, rhs.p
            )));
        }
        Ok(())
    }

    /// Product in Mat(r)[w]/(w^p): coefficient k is Σ_{i+j=k} aᵢ·bⱼ.
    pub fn mul(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.check_compatible(rhs)?;
        let mut coeffs = vec![Mat::zeros(self.r, self.r); self.p];
        for i in 0..self.p {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..self.p - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let term = self.coeffs[i].mul(&rhs.coeffs[j])?;
                coeffs[i + j] = coeffs[i + j].add(&term)?;
            }
        }
        Self::new(self.r, self.p, coeffs)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.check_compatible(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(self.r, self.p, coeffs)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            r: self.r,
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
        }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U + Copy) -> Jet<U> {
        Jet {
            r: self.r,
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c.map(f)).collect(),
        }
    }

    /// Block embedding into GL(pr): (i,j)-block is h_{j-i}, zero below the
    /// diagonal, so the matrix is block upper-triangular block-Toeplitz.
    pub fn embed(&self) -> Mat<T> {
        let n = self.p * self.r;
        let mut m = Mat::zeros(n, n);
        for i in 0..self.p {
            for j in i..self.p {
                m.set_block(i * self.r, j * self.r, &self.coeffs[j - i]);
            }
        }
        m
    }

    /// Inverse of [`Jet::embed`]; verifies the full Toeplitz pattern and
    /// reports the first block that breaks it.
    pub fn extract(m: &Mat<T>, r: usize, p: usize) -> Result<Self, CoreError> {
        if m.rows() != p * r || m.cols() != p * r {
            return Err(CoreError::DimensionMismatch(format!(
                "expected {}x{} matrix",
                p * r,
                p * r
            )));
        }
        let coeffs: Vec<Mat<T>> = (0..p).map(|k| m.block(0, k, r)).collect();
        for i in 0..p {
            for j in 0..p {
                let want = if j < i {
                    Mat::zeros(r, r)
                } else {
                    coeffs[j - i].clone()
                };
                if m.block(i, j, r) != want {
                    return Err(CoreError::Invalid(format!(
                        "block ({i},{j}) breaks the Jordan (Toeplitz) pattern"
                    )));
                }
            }
        }
        Self::new(r, p, coeffs)
    }
}

impl<T: Ring> Jet<T> {
    fn leading_inverse(&self) -> Result<Mat<T>, CoreError>
    where
        Mat<T>: MatInverse<T>,
    {
        self.coeffs[0].inv_checked()
    }

    /// Inverse in the unit group; requires det h₀ ≠ 0.
    pub fn inv(&self) -> Result<Self, CoreError>
    where
        Mat<T>: MatInverse<T>,
    {
        let a0_inv = self.leading_inverse().map_err(|_| CoreError::NonUnit)?;
        let mut x: Vec<Mat<T>> = Vec::with_capacity(self.p);
        x.push(a0_inv.clone());
        for k in 1..self.p {
            // a₀ x_k = −Σ_{i=1..k} a_i x_{k-i}
            let mut acc = Mat::zeros(self.r, self.r);
            for i in 1..=k {
                acc = acc.add(&self.coeffs[i].mul(&x[k - i])?)?;
            }
            x.push(a0_inv.mul(&acc.neg())?);
        }
        Self::new(self.r, self.p, x)
    }

    /// Unipotent factor h̲ with h = h₀·h̲, i.e. h̲ᵢ = h₀⁻¹hᵢ. The leading
    /// coefficient is the identity by definition and is set exactly, so
    /// the factorization stays unipotent under floating scalars too.
    pub fn underline(&self) -> Result<Self, CoreError>
    where
        Mat<T>: MatInverse<T>,
    {
        let h0_inv = self.leading_inverse().map_err(|_| CoreError::NonUnit)?;
        let mut coeffs = vec![Mat::identity(self.r)];
        for c in &self.coeffs[1..] {
            coeffs.push(h0_inv.mul(c)?);
        }
        Self::new(self.r, self.p, coeffs)
    }

    /// log of a unipotent jet: the finite sum
    /// Σ_{1≤k<p} ((-1)^{k+1}/k)(h₁w + ⋯)^k, returned with zero constant term.
    pub fn log(&self) -> Result<Self, CoreError> {
        if !self.is_unipotent() {
            return Err(CoreError::NonUnipotent);
        }
        let mut m = self.clone();
        m.coeffs[0] = Mat::zeros(self.r, self.r);
        let mut result = Jet::zero(self.r, self.p);
        let mut power = m.clone();
        for k in 1..self.p {
            let k_inv = T::from_i64(k as i64)
                .inv()
                .expect("small integers are invertible in a field");
            let sign = if k % 2 == 1 { k_inv } else { k_inv.neg() };
            result = result.add(&power.scale(&sign))?;
            if k + 1 < self.p {
                power = power.mul(&m)?;
            }
        }
        Ok(result)
    }

    /// exp of a nilpotent jet: the finite sum Σ_{0≤k<p} X^k/k!.
    pub fn exp(&self) -> Result<Self, CoreError> {
        if !self.is_nilpotent() {
            return Err(CoreError::NonNilpotent);
        }
        let mut result = Jet::identity(self.r, self.p);
        let mut power = self.clone();
        let mut factorial = T::one();
        for k in 1..self.p {
            factorial = factorial.mul(&T::from_i64(k as i64));
            let f_inv = factorial.inv().expect("factorials are invertible");
            result = result.add(&power.scale(&f_inv))?;
            if k + 1 < self.p {
                power = power.mul(self)?;
            }
        }
        Ok(result)
    }
}

/// Matrix inverse plumbing so jets stay generic over the scalar ring while
/// inversion dispatches to the exact (Bareiss) or numeric (LU) path.
pub trait MatInverse<T> {
    fn inv_checked(&self) -> Result<Mat<T>, CoreError>;
    fn det_checked(&self) -> Result<T, CoreError>;
}

impl MatInverse<crate::scalar::Rat> for Mat<crate::scalar::Rat> {
    fn inv_checked(&self) -> Result<Mat<crate::scalar::Rat>, CoreError> {
        self.inverse()
    }
    fn det_checked(&self) -> Result<crate::scalar::Rat, CoreError> {
        self.det()
    }
}

impl MatInverse<num_complex::Complex64> for Mat<num_complex::Complex64> {
    fn inv_checked(&self) -> Result<Mat<num_complex::Complex64>, CoreError> {
        self.inverse()
    }
    fn det_checked(&self) -> Result<num_complex::Complex64, CoreError> {
        self.det()
    }
}

/// A jet is a unit exactly when det h₀ ≠ 0.
pub fn is_unit<T: Ring>(jet: &Jet<T>) -> bool
where
    Mat<T>: MatInverse<T>,
{
    jet.coeff(0)
        .det_checked()
        .map(|d| !d.is_zero())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::Stream;
    use crate::scalar::{rat, Rat};

    fn jet1(p: usize, vals: &[i64]) -> Jet<Rat> {
        let coeffs = vals
            .iter()
            .map(|&v| Mat::from_vec(1, 1, vec![rat(v, 1)]).unwrap())
            .collect();
        Jet::new(1, p, coeffs).unwrap()
    }

    #[test]
    fn mul_identity_and_scalars() {
        let id = Jet::<Rat>::identity(2, 2);
        assert_eq!(id.mul(&id).unwrap(), id);
        // (2 + 3w)(5 + 7w) = 10 + 29w mod w².
        let a = jet1(2, &[2, 3]);
        let b = jet1(2, &[5, 7]);
        assert_eq!(a.mul(&b).unwrap(), jet1(2, &[10, 29]));
        // (1 + w)(1 - w + w²) = 1 mod w³.
        let c = jet1(3, &[1, 1, 0]);
        let d = jet1(3, &[1, -1, 1]);
        assert_eq!(c.mul(&d).unwrap(), Jet::identity(1, 3));
    }

    #[test]
    fn inv_examples() {
        assert_eq!(Jet::<Rat>::identity(2, 3).inv().unwrap(), Jet::identity(2, 3));
        let a = jet1(2, &[2, 3]);
        let inv = a.inv().unwrap();
        assert_eq!(inv.coeff(0)[(0, 0)], rat(1, 2));
        assert_eq!(inv.coeff(1)[(0, 0)], rat(-3, 4));
        // r=2, p=3 random unit jets invert exactly.
        let mut st = Stream::new(11);
        for _ in 0..20 {
            let j = st.unit_jet(2, 3, 3);
            assert_eq!(j.mul(&j.inv().unwrap()).unwrap(), Jet::identity(2, 3));
        }
    }

    #[test]
    fn singular_leading_coefficient_rejected() {
        let j = jet1(2, &[0, 3]);
        assert_eq!(j.inv().unwrap_err(), CoreError::NonUnit);
    }

    #[test]
    fn log_exp_examples() {
        // exp(w) = 1 + w + w²/2 mod w³.
        let x = jet1(3, &[0, 1, 0]);
        let e = x.exp().unwrap();
        assert_eq!(e.coeff(0)[(0, 0)], rat(1, 1));
        assert_eq!(e.coeff(1)[(0, 0)], rat(1, 1));
        assert_eq!(e.coeff(2)[(0, 0)], rat(1, 2));
        // Unipotent with zero tail has zero log.
        let id = Jet::<Rat>::identity(3, 4);
        assert_eq!(id.log().unwrap(), Jet::zero(3, 4));
        assert_eq!(jet1(2, &[2, 0]).log().unwrap_err(), CoreError::NonUnipotent);
        assert_eq!(jet1(2, &[1, 1]).exp().unwrap_err(), CoreError::NonNilpotent);
    }

    // log and exp are mutually inverse bijections between nilpotent and
    // unipotent jets, exactly over the rationals.
    #[test]
    fn log_exp_roundtrip_random() {
        let mut st = Stream::new(99);
        for _ in 0..15 {
            let r = 1 + st.below(3) as usize;
            let p = 2 + st.below(5) as usize;
            let x = st.nilpotent_jet(r, p, 2);
            assert_eq!(x.exp().unwrap().log().unwrap(), x);
            let h = st.unipotent_jet(r, p, 2);
            assert_eq!(h.log().unwrap().exp().unwrap(), h);
        }
    }

    #[test]
    fn embed_shape_and_homomorphism() {
        assert!(Jet::<Rat>::identity(2, 3).embed().is_identity());
        // r=1, p=3, (a,b,c) embeds as [[a,b,c],[0,a,b],[0,0,a]].
        let j = jet1(3, &[4, 5, 6]);
        let m = j.embed();
        let want = Mat::from_vec(
            3,
            3,
            [4, 5, 6, 0, 4, 5, 0, 0, 4].iter().map(|&v| rat(v, 1)).collect(),
        )
        .unwrap();
        assert_eq!(m, want);
        // embed(a·b) = embed(a)·embed(b) on random inputs, and extract inverts.
        let mut st = Stream::new(5);
        for _ in 0..10 {
            let r = 1 + st.below(2) as usize;
            let p = 2 + st.below(3) as usize;
            let a = st.unit_jet(r, p, 3);
            let b = st.unit_jet(r, p, 3);
            let lhs = a.mul(&b).unwrap().embed();
            let rhs = a.embed().mul(&b.embed()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(Jet::extract(&lhs, r, p).unwrap(), a.mul(&b).unwrap());
        }
    }

    #[test]
    fn extract_rejects_non_toeplitz() {
        let mut m: Mat<Rat> = Mat::identity(4);
        m[(2, 0)] = rat(1, 1);
        assert!(Jet::extract(&m, 2, 2).is_err());
    }

    #[test]
    fn underline_factorization() {
        // (2, 6) underlines to (1, 3).
        let h = jet1(2, &[2, 6]);
        let u = h.underline().unwrap();
        assert_eq!(u, jet1(2, &[1, 3]));
        // h = h₀ · h̲ as jets, randomly.
        let mut st = Stream::new(17);
        for _ in 0..10 {
            let h = st.unit_jet(2, 4, 3);
            let u = h.underline().unwrap();
            assert!(u.is_unipotent());
            let recon = Jet::constant(h.coeff(0).clone(), 4).mul(&u).unwrap();
            assert_eq!(recon, h);
        }
    }
}
