//! Numeric integral results: value, statistical error, provenance.

use num_complex::Complex64;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Mc,
    EigQuad,
    Series,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Mc => write!(f, "mc"),
            Method::EigQuad => write!(f, "eig_quad"),
            Method::Series => write!(f, "series"),
        }
    }
}

/// A numeric evaluation of an integral. `stderr` is zero exactly for the
/// deterministic methods.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralEstimate {
    pub value: Complex64,
    pub stderr: f64,
    pub n_samples: u64,
    pub seed: u64,
    pub method: Method,
}

impl IntegralEstimate {
    pub fn deterministic(value: Complex64, method: Method) -> Self {
        Self {
            value,
            stderr: 0.0,
            n_samples: 0,
            seed: 0,
            method,
        }
    }

    /// Pool two estimates of the same quantity with inverse-variance
    /// weights; a deterministic estimate dominates completely.
    pub fn pool(&self, other: &IntegralEstimate) -> IntegralEstimate {
        if self.stderr == 0.0 {
            return *self;
        }
        if other.stderr == 0.0 {
            return *other;
        }
        let wa = 1.0 / (self.stderr * self.stderr);
        let wb = 1.0 / (other.stderr * other.stderr);
        IntegralEstimate {
            value: (self.value * wa + other.value * wb) / (wa + wb),
            stderr: 1.0 / (wa + wb).sqrt(),
            n_samples: self.n_samples + other.n_samples,
            seed: self.seed,
            method: self.method,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pooling_weights_by_variance() {
        let a = IntegralEstimate {
            value: Complex64::new(1.0, 0.0),
            stderr: 0.1,
            n_samples: 100,
            seed: 1,
            method: Method::Mc,
        };
        let b = IntegralEstimate {
            value: Complex64::new(2.0, 0.0),
            stderr: 0.1,
            n_samples: 100,
            seed: 2,
            method: Method::Mc,
        };
        let p = a.pool(&b);
        assert!((p.value.re - 1.5).abs() < 1e-12);
        assert!((p.stderr - 0.1 / 2f64.sqrt()).abs() < 1e-12);
        let det = IntegralEstimate::deterministic(Complex64::new(3.0, 0.0), Method::EigQuad);
        assert_eq!(a.pool(&det), det);
    }
}
