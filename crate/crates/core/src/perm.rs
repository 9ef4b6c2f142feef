//! Permutations and block permutation matrices.
//!
//! The matrix convention is fixed once: `P_σ` has (j,k)-block equal to the
//! identity exactly when j = σ(k). Under this convention
//! `P_σ · P_τ = P_{σ∘τ}` with (σ∘τ)(k) = σ(τ(k)), which the tests enforce.

use crate::matrix::Mat;
use crate::scalar::{CoreError, Ring};

/// Permutation of {0, …, n-1} stored as the image list σ(0), …, σ(n-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perm {
    image: Vec<usize>,
}

impl Perm {
    pub fn new(image: Vec<usize>) -> Result<Self, CoreError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(CoreError::InvalidPermutation(format!("{image:?}")));
            }
            seen[x] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
        }
    }

    /// Transposition (a b) inside {0, …, n-1}.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self, CoreError> {
        if a >= n || b >= n {
            return Err(CoreError::InvalidPermutation(format!(
                "transposition ({a},{b}) outside 0..{n}"
            )));
        }
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        Ok(Self { image })
    }

    /// Cycle (c₀ c₁ … c_k): c₀ ↦ c₁ ↦ … ↦ c_k ↦ c₀.
    pub fn cycle(n: usize, cyc: &[usize]) -> Result<Self, CoreError> {
        let mut image: Vec<usize> = (0..n).collect();
        for w in cyc.windows(2) {
            if w[0] >= n || w[1] >= n {
                return Err(CoreError::InvalidPermutation(format!("cycle {cyc:?}")));
            }
            image[w[0]] = w[1];
        }
        if let (Some(&last), Some(&first)) = (cyc.last(), cyc.first()) {
            image[last] = first;
        }
        Self::new(image)
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.image[k]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Perm {
        let mut image = vec![0; self.image.len()];
        for (k, &v) in self.image.iter().enumerate() {
            image[v] = k;
        }
        Perm { image }
    }

    /// (self ∘ rhs)(k) = self(rhs(k)).
    pub fn compose(&self, rhs: &Perm) -> Perm {
        assert_eq!(self.n(), rhs.n(), "permutation size mismatch");
        Perm {
            image: (0..self.n()).map(|k| self.apply(rhs.apply(k))).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &v)| k == v)
    }
}

/// Block permutation matrix with square blocks of the given size:
/// (j,k)-block = 1 iff j = σ(k).
pub fn perm_block_matrix<T: Ring>(sigma: &Perm, block: usize) -> Mat<T> {
    let n = sigma.n() * block;
    let mut m = Mat::zeros(n, n);
    for k in 0..sigma.n() {
        let j = sigma.apply(k);
        m.set_block(j * block, k * block, &Mat::identity(block));
    }
    m
}
