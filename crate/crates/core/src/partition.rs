//! Partitions of `n` with a block size `r`, in list and multiplicity form.

use crate::scalar::CoreError;
use serde::{Deserialize, Serialize};

/// A partition λ = (n₁ ≥ … ≥ n_ℓ) of n together with the block size r.
/// The subgroup it describes sits inside GL(N) with N = n·r.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSpec {
    r: usize,
    parts: Vec<usize>,
}

/// One multiplicity class: part size `n_i` repeated `p_i` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultClass {
    pub part: usize,
    pub count: usize,
}

impl PartitionSpec {
    pub fn new(r: usize, parts: Vec<usize>) -> Result<Self, CoreError> {
        if r == 0 {
            return Err(CoreError::Invalid("block size r must be positive".into()));
        }
        if parts.is_empty() {
            return Err(CoreError::Invalid("partition must be nonempty".into()));
        }
        if parts.contains(&0) {
            return Err(CoreError::Invalid("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoreError::Invalid(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Self { r, parts })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Weight n = Σ parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Ambient size N = n·r.
    pub fn big_n(&self) -> usize {
        self.n() * self.r
    }

    /// Multiplicity form ((n₁, p₁), …, (n_s, p_s)) with n₁ > … > n_s.
    pub fn classes(&self) -> Vec<MultClass> {
        let mut out: Vec<MultClass> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some(c) if c.part == p => c.count += 1,
                _ => out.push(MultClass { part: p, count: 1 }),
            }
        }
        out
    }

    /// Column offset (in scalar entries) where factor `k` starts inside the
    /// flattened row (h₀^{(1)}, …, h_{n_ℓ-1}^{(ℓ)}) and inside GL(N).
    pub fn factor_offset(&self, k: usize) -> usize {
        self.parts[..k].iter().sum::<usize>() * self.r
    }

    /// Flat factor index of the `j`-th factor of class `i`.
    pub fn class_factor_index(&self, class: usize, j: usize) -> usize {
        let classes = self.classes();
        let before: usize = classes[..class].iter().map(|c| c.count).sum();
        before + j
    }
}

impl std::fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
