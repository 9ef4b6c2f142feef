//! Elements of H_λ: one truncated jet per part of the partition, together
//! with the row-flattening ι used by the integral representation.

use crate::jet::{is_unit, Jet, MatInverse};
use crate::matrix::Mat;
use crate::partition::PartitionSpec;
use crate::scalar::{CoreError, Ring};

/// h = diag(h^{(1)}, …, h^{(ℓ)}) with h^{(k)} a jet of order n_k.
#[derive(Debug, Clone, PartialEq)]
pub struct HLambdaElement<T> {
    spec: PartitionSpec,
    factors: Vec<Jet<T>>,
}

impl<T: Ring> HLambdaElement<T> {
    pub fn new(spec: PartitionSpec, factors: Vec<Jet<T>>) -> Result<Self, CoreError> {
        if factors.len() != spec.len() {
            return Err(CoreError::SpecMismatch(format!(
                "partition has {} parts, got {} factors",
                spec.len(),
                factors.len()
            )));
        }
        for (k, f) in factors.iter().enumerate() {
            if f.r() != spec.r() || f.p() != spec.parts()[k] {
                return Err(CoreError::SpecMismatch(format!(
                    "factor {} should be a jet with r={}, p={}",
                    k,
                    spec.r(),
                    spec.parts()[k]
                )));
            }
        }
        Ok(Self { spec, factors })
    }

    pub fn identity(spec: PartitionSpec) -> Self {
        let factors = spec
            .parts()
            .iter()
            .map(|&p| Jet::identity(spec.r(), p))
            .collect();
        Self { spec, factors }
    }

    pub fn spec(&self) -> &PartitionSpec {
        &self.spec
    }

    pub fn factors(&self) -> &[Jet<T>] {
        &self.factors
    }

    pub fn factor(&self, k: usize) -> &Jet<T> {
        &self.factors[k]
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, CoreError> {
        if self.spec != rhs.spec {
            return Err(CoreError::SpecMismatch("H elements over different λ".into()));
        }
        let factors = self
            .factors
            .iter()
            .zip(&rhs.factors)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(self.spec.clone(), factors)
    }

    /// Block-diagonal embedding into GL(N), N = n·r.
    pub fn embed(&self) -> Mat<T> {
        let blocks: Vec<Mat<T>> = self.factors.iter().map(|f| f.embed()).collect();
        Mat::block_diag(&blocks)
    }

    /// The flattening ι(h) = (h₀^{(1)}, …, h_{n₁-1}^{(1)}, …, h_{n_ℓ-1}^{(ℓ)})
    /// as an r×N matrix.
    pub fn iota(&self) -> Mat<T> {
        let mut cols: Vec<Mat<T>> = Vec::new();
        for f in &self.factors {
            for k in 0..f.p() {
                cols.push(f.coeff(k).clone());
            }
        }
        Mat::hstack(&cols).expect("factor blocks share r rows")
    }

    /// Rebuild an element from a flattened r×N row of blocks.
    pub fn from_iota(spec: &PartitionSpec, row: &Mat<T>) -> Result<Self, CoreError> {
        let r = spec.r();
        if row.rows() != r || row.cols() != spec.big_n() {
            return Err(CoreError::DimensionMismatch(format!(
                "ι row must be {}x{}",
                r,
                spec.big_n()
            )));
        }
        let mut factors = Vec::new();
        let mut off = 0;
        for &p in spec.parts() {
            let coeffs: Vec<Mat<T>> = (0..p)
                .map(|k| row.submatrix(0, off + k * r, r, r))
                .collect();
            factors.push(Jet::new(r, p, coeffs)?);
            off += p * r;
        }
        Self::new(spec.clone(), factors)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U + Copy) -> HLambdaElement<U> {
        HLambdaElement {
            spec: self.spec.clone(),
            factors: self.factors.iter().map(|j| j.map(f)).collect(),
        }
    }
}

impl<T: Ring> HLambdaElement<T>
where
    Mat<T>: MatInverse<T>,
{
    pub fn inv(&self) -> Result<Self, CoreError> {
        let factors = self
            .factors
            .iter()
            .map(|f| f.inv())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(self.spec.clone(), factors)
    }

    pub fn is_valid_group_element(&self) -> bool {
        self.factors.iter().all(is_unit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::Stream;
    use crate::scalar::Rat;

    fn sample(st: &mut Stream, spec: &PartitionSpec) -> HLambdaElement<Rat> {
        let factors = spec
            .parts()
            .iter()
            .map(|&p| st.unit_jet(spec.r(), p, 2))
            .collect();
        HLambdaElement::new(spec.clone(), factors).unwrap()
    }

    #[test]
    fn iota_roundtrip_and_embed_mul() {
        let spec = PartitionSpec::new(2, vec![2, 1]).unwrap();
        let mut st = Stream::new(3);
        let h = sample(&mut st, &spec);
        let row = h.iota();
        assert_eq!(row.rows(), 2);
        assert_eq!(row.cols(), 6);
        let back = HLambdaElement::from_iota(&spec, &row).unwrap();
        assert_eq!(back, h);

        let g = sample(&mut st, &spec);
        let prod = h.mul(&g).unwrap();
        assert_eq!(prod.embed(), h.embed().mul(&g.embed()).unwrap());
    }
}
