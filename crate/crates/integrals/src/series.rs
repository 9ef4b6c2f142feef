//! Hypergeometric series of matrix argument (Schur expansion) and their
//! classical scalar counterparts, used as independent oracles for the
//! integral evaluators.

use crate::herm::{HermMatrix, IntError};
use crate::schur::{homogeneous_syms, partitions_of, schur};
use num_complex::Complex64;

/// Outcome of a truncated series evaluation.
#[derive(Debug, Clone, Copy)]
pub struct SeriesValue {
    pub value: Complex64,
    /// Magnitude of the last computed weight shell, as a tail estimate.
    pub tail_estimate: f64,
    pub max_weight_used: usize,
}

const SHELL_TOL: f64 = 1e-12;

/// Σ_κ ∏[num]_κ / ∏[den]_κ · s_κ(X)/H(κ), summed by weight shells over
/// partitions with at most r parts; stops early when two consecutive
/// shells fall below 1e-12 relative.
pub fn pfq_eigs(
    num: &[Complex64],
    den: &[Complex64],
    eigs: &[f64],
    trunc: usize,
) -> Result<SeriesValue, IntError> {
    for d in den {
        // Poles of the lower Pochhammers make the series undefined.
        if d.im == 0.0 && d.re <= 0.0 && d.re.fract() == 0.0 {
            return Err(IntError::Invalid(format!(
                "lower parameter {d} is a non-positive integer"
            )));
        }
    }
    let r = eigs.len();
    let h = homogeneous_syms(eigs, trunc + 1);
    let mut total = Complex64::new(1.0, 0.0);
    let mut last_shells = [f64::INFINITY, f64::INFINITY];
    let mut used = 0;
    for k in 1..=trunc {
        let mut shell = Complex64::new(0.0, 0.0);
        for kappa in partitions_of(k, r) {
            let mut coeff = Complex64::new(1.0, 0.0);
            for &a in num {
                coeff *= kappa.pochhammer(a);
            }
            for &d in den {
                let p = kappa.pochhammer(d);
                if p.norm() == 0.0 {
                    return Err(IntError::Invalid(
                        "lower Pochhammer vanished inside the series".into(),
                    ));
                }
                coeff /= p;
            }
            shell += coeff * (schur(&kappa, &h) / kappa.hook_product());
        }
        total += shell;
        used = k;
        let rel = shell.norm() / total.norm().max(1e-300);
        last_shells = [last_shells[1], rel];
        if last_shells[0] < SHELL_TOL && last_shells[1] < SHELL_TOL {
            break;
        }
    }
    Ok(SeriesValue {
        value: total,
        tail_estimate: last_shells[1] * total.norm(),
        max_weight_used: used,
    })
}

/// Gauss series of Hermitian matrix argument; requires spectral radius
/// below 1.
pub fn hgf_series_2f1(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: &HermMatrix,
    trunc: usize,
) -> Result<SeriesValue, IntError> {
    let eigs = x.eigenvalues();
    let rad = eigs.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    if rad >= 1.0 {
        return Err(IntError::Unsupported(format!(
            "series needs spectral radius < 1, got {rad}"
        )));
    }
    pfq_eigs(&[a, b], &[c], &eigs, trunc)
}

/// Confluent series of Hermitian matrix argument; entire in X.
pub fn hgf_series_1f1(
    a: Complex64,
    c: Complex64,
    x: &HermMatrix,
    trunc: usize,
) -> Result<SeriesValue, IntError> {
    pfq_eigs(&[a], &[c], &x.eigenvalues(), trunc)
}

// ---------------------------------------------------------------------------
// Classical scalar series, kept separate as oracles for the r = 1 cases.
// ---------------------------------------------------------------------------

pub fn classical_2f1(a: Complex64, b: Complex64, c: Complex64, x: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..500usize {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        sum += term;
        if term.norm() < 1e-17 * sum.norm().max(1e-30) {
            break;
        }
    }
    sum
}

pub fn classical_1f1(a: Complex64, c: Complex64, x: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..700usize {
        let nf = n as f64;
        term *= (a + nf) / ((c + nf) * (nf + 1.0)) * x;
        sum += term;
        if term.norm() < 1e-17 * sum.norm().max(1e-30) {
            break;
        }
    }
    sum
}

/// det(1-X)^p through the eigenvalues, principal branch per factor.
pub fn det_one_minus_pow(x: &HermMatrix, p: Complex64) -> Complex64 {
    let mut ln = Complex64::new(0.0, 0.0);
    for e in x.eigenvalues() {
        ln += Complex64::new(1.0 - e, 0.0).ln();
    }
    (ln * p).exp()
}

/// The Hermitian matrix with the same eigenvectors and eigenvalues
/// mapped by λ ↦ λ/(λ-1); diagonal inputs stay diagonal.
pub fn cayley_ratio_eigs(eigs: &[f64]) -> Vec<f64> {
    eigs.iter().map(|&l| l / (l - 1.0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn series_at_zero_is_one() {
        let x = HermMatrix::zero(2);
        let v = hgf_series_2f1(c(0.8), c(1.1), c(2.4), &x, 10).unwrap();
        assert_eq!(v.value, Complex64::new(1.0, 0.0));
        let v = hgf_series_1f1(c(0.8), c(2.4), &x, 10).unwrap();
        assert_eq!(v.value, Complex64::new(1.0, 0.0));
    }

    // r = 1 reduces to the classical series: ₂F₁(1,1,2;1/2) = 2 ln 2 and
    // ₁F₁(1,2;1) = e - 1.
    #[test]
    fn classical_reductions() {
        let x = HermMatrix::from_diag(&[0.5]);
        let v = hgf_series_2f1(c(1.0), c(1.0), c(2.0), &x, 60).unwrap();
        assert!((v.value.re - 2.0 * 2f64.ln()).abs() < 1e-6);
        let x1 = HermMatrix::from_diag(&[1.0]);
        let v = hgf_series_1f1(c(1.0), c(2.0), &x1, 40).unwrap();
        assert!((v.value.re - (1f64.exp() - 1.0)).abs() < 1e-6);
        // And the matrix series agrees with the scalar implementation.
        let m = hgf_series_2f1(c(0.7), c(1.3), c(2.1), &HermMatrix::from_diag(&[0.4]), 60)
            .unwrap()
            .value;
        let s = classical_2f1(c(0.7), c(1.3), c(2.1), c(0.4));
        assert!((m - s).norm() < 1e-10);
    }

    // ₁F₀(a;;X) = det(1-X)^{-a}: fixes the series normalization for
    // genuinely matrix arguments.
    #[test]
    fn binomial_series_identity() {
        let x = HermMatrix::from_diag(&[0.3, -0.25, 0.1]);
        for &a in &[1.0, 2.5, -0.7] {
            let v = pfq_eigs(&[c(a)], &[], &x.eigenvalues(), 80).unwrap().value;
            let want = det_one_minus_pow(&x, c(-a));
            assert!((v - want).norm() < 1e-9, "a={a}: {v} vs {want}");
        }
    }

    // Series values depend on the spectrum only.
    #[test]
    fn spectral_dependence_only() {
        let e1 = [0.25, -0.1];
        let v1 = pfq_eigs(&[c(0.9)], &[c(2.2)], &e1, 40).unwrap().value;
        let e2 = [-0.1, 0.25];
        let v2 = pfq_eigs(&[c(0.9)], &[c(2.2)], &e2, 40).unwrap().value;
        assert!((v1 - v2).norm() < 1e-14);
    }

    #[test]
    fn pole_and_radius_rejected() {
        let x = HermMatrix::from_diag(&[0.5]);
        assert!(hgf_series_2f1(c(1.0), c(1.0), c(-2.0), &x, 10).is_err());
        let big = HermMatrix::from_diag(&[1.5]);
        assert!(hgf_series_2f1(c(1.0), c(1.0), c(2.0), &big, 10).is_err());
    }

    // Tail estimates decrease with the truncation weight.
    #[test]
    fn tail_monotone_in_truncation() {
        let eigs = [0.2, 0.35];
        let t10 = pfq_eigs(&[c(0.8), c(1.1)], &[c(2.4)], &eigs, 10)
            .unwrap()
            .tail_estimate;
        let t20 = pfq_eigs(&[c(0.8), c(1.1)], &[c(2.4)], &eigs, 20)
            .unwrap()
            .tail_estimate;
        assert!(t20 <= t10);
    }
}
