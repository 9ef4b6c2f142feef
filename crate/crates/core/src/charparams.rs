//! Character parameter vectors α and the admissibility conditions they
//! must satisfy for the integral transform to make sense.

use crate::partition::PartitionSpec;
use crate::scalar::CoreError;
use num_complex::Complex64;

/// Parameter vector for a character of H̃_λ: one complex vector per part,
/// vector k of length n_k, plus the row count m of the ambient variable
/// space (m = 2r throughout the worked examples).
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterParams {
    spec: PartitionSpec,
    alpha: Vec<Vec<Complex64>>,
    m: usize,
}

/// One violated admissibility clause.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// Clause (i): α₀^{(j)} must not be an integer.
    LeadingIsInteger { part: usize, value: Complex64 },
    /// Clause (ii): α_{n_j-1}^{(j)} must be nonzero when n_j ≥ 2.
    TopCoefficientZero { part: usize },
    /// Clause (iii): Σ_j α₀^{(j)} must equal -m.
    SumMismatch { sum: Complex64, want: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssumptionReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl CharacterParams {
    pub fn new(
        spec: PartitionSpec,
        alpha: Vec<Vec<Complex64>>,
        m: usize,
    ) -> Result<Self, CoreError> {
        if alpha.len() != spec.len() {
            return Err(CoreError::SpecMismatch(format!(
                "partition has {} parts, got {} alpha vectors",
                spec.len(),
                alpha.len()
            )));
        }
        for (k, v) in alpha.iter().enumerate() {
            if v.len() != spec.parts()[k] {
                return Err(CoreError::SpecMismatch(format!(
                    "alpha vector {} should have length {}",
                    k,
                    spec.parts()[k]
                )));
            }
        }
        Ok(Self { spec, alpha, m })
    }

    pub fn spec(&self) -> &PartitionSpec {
        &self.spec
    }

    pub fn alpha(&self) -> &[Vec<Complex64>] {
        &self.alpha
    }

    pub fn alpha_mut(&mut self) -> &mut Vec<Vec<Complex64>> {
        &mut self.alpha
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// α as one flat row of length n, in factor order.
    pub fn flat(&self) -> Vec<Complex64> {
        self.alpha.iter().flatten().copied().collect()
    }

    pub fn from_flat(
        spec: PartitionSpec,
        flat: &[Complex64],
        m: usize,
    ) -> Result<Self, CoreError> {
        if flat.len() != spec.n() {
            return Err(CoreError::SpecMismatch(format!(
                "expected {} entries, got {}",
                spec.n(),
                flat.len()
            )));
        }
        let mut alpha = Vec::new();
        let mut off = 0;
        for &p in spec.parts() {
            alpha.push(flat[off..off + p].to_vec());
            off += p;
        }
        Self::new(spec, alpha, m)
    }
}

const INT_TOL: f64 = 1e-12;

fn is_integer(z: Complex64) -> bool {
    z.im.abs() <= INT_TOL && (z.re - z.re.round()).abs() <= INT_TOL
}

/// Check the three admissibility clauses and report each violated one.
pub fn check_assumption(params: &CharacterParams) -> AssumptionReport {
    let mut violations = Vec::new();
    let mut sum = Complex64::new(0.0, 0.0);
    for (j, v) in params.alpha().iter().enumerate() {
        let lead = v[0];
        sum += lead;
        if is_integer(lead) {
            violations.push(Violation::LeadingIsInteger {
                part: j,
                value: lead,
            });
        }
        let nj = params.spec().parts()[j];
        if nj >= 2 && v[nj - 1].norm() <= INT_TOL {
            violations.push(Violation::TopCoefficientZero { part: j });
        }
    }
    let want = -(params.m() as f64);
    if (sum - Complex64::new(want, 0.0)).norm() > INT_TOL {
        violations.push(Violation::SumMismatch { sum, want });
    }
    AssumptionReport {
        ok: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn admissible_example() {
        // λ=(2,1), m=2r=2, α=((−1.3, 1),(−0.7)).
        let spec = PartitionSpec::new(1, vec![2, 1]).unwrap();
        let p = CharacterParams::new(spec, vec![vec![c(-1.3), c(1.0)], vec![c(-0.7)]], 2).unwrap();
        let rep = check_assumption(&p);
        assert!(rep.ok, "{:?}", rep.violations);
    }

    #[test]
    fn top_coefficient_zero_violates_ii() {
        let spec = PartitionSpec::new(1, vec![2, 1]).unwrap();
        let p = CharacterParams::new(spec, vec![vec![c(-1.3), c(0.0)], vec![c(-0.7)]], 2).unwrap();
        let rep = check_assumption(&p);
        assert!(!rep.ok);
        assert!(rep
            .violations
            .iter()
            .any(|v| matches!(v, Violation::TopCoefficientZero { part: 0 })));
    }

    #[test]
    fn sum_mismatch_violates_iii() {
        let spec = PartitionSpec::new(1, vec![2, 1]).unwrap();
        let p = CharacterParams::new(spec, vec![vec![c(-1.3), c(1.0)], vec![c(-0.2)]], 2).unwrap();
        let rep = check_assumption(&p);
        assert!(rep
            .violations
            .iter()
            .any(|v| matches!(v, Violation::SumMismatch { .. })));
    }

    #[test]
    fn integer_leading_violates_i() {
        let spec = PartitionSpec::new(1, vec![1, 1]).unwrap();
        let p = CharacterParams::new(spec, vec![vec![c(1.0)], vec![c(-3.0)]], 2).unwrap();
        let rep = check_assumption(&p);
        assert_eq!(
            rep.violations
                .iter()
                .filter(|v| matches!(v, Violation::LeadingIsInteger { .. }))
                .count(),
            2
        );
    }
}
