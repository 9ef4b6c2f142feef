//! Deterministic generation of random rational objects.
//!
//! The verification suite draws random matrices, jets and Weyl elements;
//! a small hand-rolled SplitMix64 keeps those draws reproducible across
//! platforms without pulling a RNG dependency into the exact crate.

use crate::jet::Jet;
use crate::matrix::Mat;
use crate::scalar::{rat, Rat, Ring};

/// SplitMix64 stream; identical sequences for identical seeds everywhere.
#[derive(Debug, Clone)]
pub struct Stream {
    state: u64,
}

impl Stream {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound.max(1)
    }

    /// Small rational with numerator in `[-mag, mag]` and denominator in
    /// `{1, 2, 3}`.
    pub fn rat_small(&mut self, mag: i64) -> Rat {
        let span = (2 * mag + 1) as u64;
        let n = self.below(span) as i64 - mag;
        let d = 1 + self.below(3) as i64;
        rat(n, d)
    }

    /// Small nonzero rational.
    pub fn rat_nonzero(&mut self, mag: i64) -> Rat {
        loop {
            let r = self.rat_small(mag);
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn rat_mat(&mut self, rows: usize, cols: usize, mag: i64) -> Mat<Rat> {
        Mat::from_fn(rows, cols, |_, _| self.rat_small(mag))
    }

    /// Random invertible rational matrix (rejection on det = 0).
    pub fn rat_invertible(&mut self, n: usize, mag: i64) -> Mat<Rat> {
        loop {
            let m = self.rat_mat(n, n, mag);
            if !m.det().expect("square").is_zero() {
                return m;
            }
        }
    }

    /// Random unit jet: invertible leading coefficient, free tail.
    pub fn unit_jet(&mut self, r: usize, p: usize, mag: i64) -> Jet<Rat> {
        let mut coeffs = vec![self.rat_invertible(r, mag)];
        for _ in 1..p {
            coeffs.push(self.rat_mat(r, r, mag));
        }
        Jet::new(r, p, coeffs).expect("well-formed jet")
    }

    /// Random unipotent jet: identity leading coefficient.
    pub fn unipotent_jet(&mut self, r: usize, p: usize, mag: i64) -> Jet<Rat> {
        let mut coeffs = vec![Mat::identity(r)];
        for _ in 1..p {
            coeffs.push(self.rat_mat(r, r, mag));
        }
        Jet::new(r, p, coeffs).expect("well-formed jet")
    }

    /// Random nilpotent jet: zero leading coefficient.
    pub fn nilpotent_jet(&mut self, r: usize, p: usize, mag: i64) -> Jet<Rat> {
        let mut coeffs = vec![Mat::zeros(r, r)];
        for _ in 1..p {
            coeffs.push(self.rat_mat(r, r, mag));
        }
        Jet::new(r, p, coeffs).expect("well-formed jet")
    }

    /// Random permutation of `0..n` (Fisher-Yates).
    pub fn perm(&mut self, n: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.below(i as u64 + 1) as usize;
            v.swap(i, j);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_reproducible() {
        let a: Vec<u64> = {
            let mut s = Stream::new(7);
            (0..5).map(|_| s.next_u64()).collect()
        };
        let b: Vec<u64> = {
            let mut s = Stream::new(7);
            (0..5).map(|_| s.next_u64()).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn perm_is_bijection() {
        let mut s = Stream::new(123);
        for n in 1..8 {
            let p = s.perm(n);
            let mut seen = vec![false; n];
            for &x in &p {
                assert!(!seen[x]);
                seen[x] = true;
            }
        }
    }
}
