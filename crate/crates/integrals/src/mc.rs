//! Monte Carlo evaluation of Hermitian matrix integrals in the
//! eigenvalue/Haar parametrization, with deterministic chunked
//! parallelism: chunk i always uses the same RNG stream and chunk
//! results are reduced in index order, so the estimate is bit-identical
//! for any worker count.

use crate::domain::Domain;
use crate::estimate::{IntegralEstimate, Method};
use crate::herm::{HermMatrix, IntError};
use crate::sampling::{chunk_rng, conjugated_diag, haar_unitary, log_vandermonde_sq, Proposal};
use num_complex::Complex64;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

pub const DEFAULT_CHUNK: u64 = 1 << 14;

/// Configuration of one Monte Carlo run.
#[derive(Debug, Clone)]
pub struct McConfig {
    pub r: usize,
    pub n_samples: u64,
    pub seed: u64,
    pub proposal: Proposal,
    pub threads: usize,
    pub chunk_size: u64,
}

impl McConfig {
    pub fn new(r: usize, n_samples: u64, seed: u64, proposal: Proposal) -> Self {
        Self {
            r,
            n_samples,
            seed,
            proposal,
            threads: 1,
            chunk_size: DEFAULT_CHUNK,
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

/// Welford accumulator; chunks combine exactly, in index order.
#[derive(Debug, Clone, Copy, Default)]
struct ChunkStat {
    mean: Complex64,
    m2: f64,
    n: u64,
    nonfinite: u64,
}

impl ChunkStat {
    fn push(&mut self, w: Complex64) {
        self.n += 1;
        let delta = w - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += (delta.conj() * (w - self.mean)).re;
    }

    fn merge(&mut self, other: &ChunkStat) {
        if other.n == 0 {
            self.nonfinite += other.nonfinite;
            return;
        }
        if self.n == 0 {
            let keep = self.nonfinite;
            *self = *other;
            self.nonfinite += keep;
            return;
        }
        let (na, nb) = (self.n as f64, other.n as f64);
        let delta = other.mean - self.mean;
        let n = na + nb;
        self.mean += delta * (nb / n);
        self.m2 += other.m2 + delta.norm_sqr() * na * nb / n;
        self.n += other.n;
        self.nonfinite += other.nonfinite;
    }
}

/// Estimate ∫ f(U) Δ(λ)² dλ dV over the eigenvalue region of `domain`,
/// where dV is probability Haar measure on the unitary group and the
/// caller's `log_f` returns log f at U = V·diag(λ)·V*. The global
/// unitary-volume constant of this parametrization is deliberately not
/// applied; callers work with constant-cancelling ratios or calibrated
/// prefactors.
pub fn mc_integral(
    log_f: &(dyn Fn(&HermMatrix) -> Complex64 + Sync),
    domain: Domain,
    cfg: &McConfig,
) -> Result<IntegralEstimate, IntError> {
    check_proposal_domain(&cfg.proposal, domain)?;
    let n_chunks = cfg.n_samples.div_ceil(cfg.chunk_size).max(1);
    let results: Vec<Mutex<Option<ChunkStat>>> =
        (0..n_chunks).map(|_| Mutex::new(None)).collect();
    let next = AtomicU64::new(0);
    let workers = cfg.threads.min(n_chunks as usize).max(1);

    let run_chunk = |idx: u64| -> ChunkStat {
        let mut rng = chunk_rng(cfg.seed, idx);
        let lo = idx * cfg.chunk_size;
        let hi = (lo + cfg.chunk_size).min(cfg.n_samples);
        let mut stat = ChunkStat::default();
        for _ in lo..hi {
            let lambda = cfg
                .proposal
                .sample(cfg.r, &mut rng)
                .expect("proposal validated up front");
            let v = haar_unitary(cfg.r, &mut rng);
            let u = conjugated_diag(&v, &lambda);
            let u = HermMatrix::hermitize(&u).expect("square by construction");
            let log_w = log_vandermonde_sq(&lambda) - cfg.proposal.log_pdf(&lambda);
            let log_val = log_f(&u);
            let w = (log_val + Complex64::new(log_w, 0.0)).exp();
            if w.re.is_finite() && w.im.is_finite() {
                stat.push(w);
            } else {
                stat.nonfinite += 1;
            }
        }
        stat
    };

    if workers == 1 {
        for idx in 0..n_chunks {
            *results[idx as usize].lock().unwrap() = Some(run_chunk(idx));
        }
    } else {
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let idx = next.fetch_add(1, Ordering::Relaxed);
                    if idx >= n_chunks {
                        break;
                    }
                    let stat = run_chunk(idx);
                    *results[idx as usize].lock().unwrap() = Some(stat);
                });
            }
        });
    }

    // Reduce strictly in chunk order.
    let mut total = ChunkStat::default();
    for cell in &results {
        let stat = cell.lock().unwrap().expect("all chunks ran");
        total.merge(&stat);
    }
    if total.nonfinite > 0 && total.nonfinite * 100 > cfg.n_samples {
        return Err(IntError::Domain(format!(
            "{} of {} samples were non-finite",
            total.nonfinite, cfg.n_samples
        )));
    }
    let n = total.n.max(1) as f64;
    let var = (total.m2 / n).max(0.0);
    Ok(IntegralEstimate {
        value: total.mean,
        stderr: (var / n).sqrt(),
        n_samples: total.n,
        seed: cfg.seed,
        method: Method::Mc,
    })
}

fn check_proposal_domain(p: &Proposal, d: Domain) -> Result<(), IntError> {
    let ok = matches!(
        (p, d),
        (Proposal::BetaProduct { .. }, Domain::BetaBox)
            | (Proposal::GammaProduct { .. }, Domain::PositiveCone)
            | (Proposal::GaussProduct, Domain::FullSpace)
    );
    if ok {
        Ok(())
    } else {
        Err(IntError::Domain(format!(
            "proposal {p:?} does not cover domain {}",
            d.name()
        )))
    }
}
