//! Random-matrix sampling: deterministic per-chunk RNG streams, Haar
//! unitaries, and the eigenvalue proposals used for importance sampling
//! on the box, the cone and the full space.

use crate::herm::IntError;
use num_complex::Complex64;
use radon_core::Mat;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, Distribution, Gamma, StandardNormal};

/// RNG for chunk `idx` of a run with the given seed. Streams are
/// independent of worker scheduling by construction.
pub fn chunk_rng(seed: u64, idx: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&idx.to_le_bytes());
    key[16..24].copy_from_slice(&(seed ^ 0x9e3779b97f4a7c15).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Haar-distributed unitary via QR of a complex Ginibre matrix with the
/// phase convention fixed by positive R diagonal.
#[allow(clippy::needless_range_loop)]
pub fn haar_unitary(r: usize, rng: &mut ChaCha8Rng) -> Mat<Complex64> {
    let mut cols: Vec<Vec<Complex64>> = (0..r)
        .map(|_| {
            (0..r)
                .map(|_| {
                    let re: f64 = StandardNormal.sample(rng);
                    let im: f64 = StandardNormal.sample(rng);
                    Complex64::new(re, im)
                })
                .collect()
        })
        .collect();
    // Modified Gram-Schmidt.
    for j in 0..r {
        for k in 0..j {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in 0..r {
                dot += cols[k][i].conj() * cols[j][i];
            }
            for i in 0..r {
                let sub = dot * cols[k][i];
                cols[j][i] -= sub;
            }
        }
        let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        // The diagonal phase makes the distribution exactly Haar.
        let mut diag = cols[j][j] / norm;
        if diag.norm() < 1e-300 {
            diag = Complex64::new(1.0, 0.0);
        } else {
            diag /= diag.norm();
        }
        for i in 0..r {
            cols[j][i] = cols[j][i] / norm / diag;
        }
    }
    Mat::from_fn(r, r, |i, j| cols[j][i])
}

/// Assemble U = V·diag(λ)·V*.
pub fn conjugated_diag(v: &Mat<Complex64>, lambda: &[f64]) -> Mat<Complex64> {
    let r = lambda.len();
    let mut d = Mat::zeros(r, r);
    for (i, &l) in lambda.iter().enumerate() {
        d[(i, i)] = Complex64::new(l, 0.0);
    }
    let vd = v.mul(&d).expect("square");
    let vh = Mat::from_fn(r, r, |i, j| v[(j, i)].conj());
    vd.mul(&vh).expect("square")
}

/// Per-eigenvalue proposal densities.
#[derive(Debug, Clone, Copy)]
pub enum Proposal {
    /// Beta(a, b) on (0,1), density x^{a-1}(1-x)^{b-1}/B(a,b).
    BetaProduct { a: f64, b: f64 },
    /// Gamma(shape, scale) on (0,∞).
    GammaProduct { shape: f64, scale: f64 },
    /// Standard normal on ℝ.
    GaussProduct,
}

impl Proposal {
    pub fn sample(&self, r: usize, rng: &mut ChaCha8Rng) -> Result<Vec<f64>, IntError> {
        match self {
            Proposal::BetaProduct { a, b } => {
                let d = Beta::new(*a, *b)
                    .map_err(|e| IntError::Invalid(format!("beta proposal: {e}")))?;
                Ok((0..r).map(|_| d.sample(rng)).collect())
            }
            Proposal::GammaProduct { shape, scale } => {
                let d = Gamma::new(*shape, *scale)
                    .map_err(|e| IntError::Invalid(format!("gamma proposal: {e}")))?;
                Ok((0..r).map(|_| d.sample(rng)).collect())
            }
            Proposal::GaussProduct => Ok((0..r).map(|_| rng.sample(StandardNormal)).collect()),
        }
    }

    /// log of the joint proposal density at λ.
    pub fn log_pdf(&self, lambda: &[f64]) -> f64 {
        match self {
            Proposal::BetaProduct { a, b } => {
                let lb = ln_beta(*a, *b);
                lambda
                    .iter()
                    .map(|&x| (a - 1.0) * x.ln() + (b - 1.0) * (1.0 - x).ln() - lb)
                    .sum()
            }
            Proposal::GammaProduct { shape, scale } => lambda
                .iter()
                .map(|&x| {
                    (shape - 1.0) * x.ln() - x / scale
                        - shape * scale.ln()
                        - ln_gamma_real(*shape)
                })
                .sum(),
            Proposal::GaussProduct => lambda
                .iter()
                .map(|&x| -0.5 * x * x - 0.5 * (2.0 * std::f64::consts::PI).ln())
                .sum(),
        }
    }
}

/// log Δ(λ)² = 2 Σ_{i<j} log|λ_i - λ_j|; -inf at coincidences.
pub fn log_vandermonde_sq(lambda: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..lambda.len() {
        for j in i + 1..lambda.len() {
            let d = (lambda[i] - lambda[j]).abs();
            if d == 0.0 {
                return f64::NEG_INFINITY;
            }
            s += 2.0 * d.ln();
        }
    }
    s
}

/// Real log-gamma (Lanczos, g = 7).
pub fn ln_gamma_real(x: f64) -> f64 {
    crate::gammar::ln_gamma(Complex64::new(x, 0.0)).re
}

pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma_real(a) + ln_gamma_real(b) - ln_gamma_real(a + b)
}
