//! Cross-oracle agreement between the three independent evaluation
//! routes: Schur-expansion series, deterministic eigenvalue quadrature,
//! and Monte Carlo in the eigenvalue/Haar parametrization.

use num_complex::Complex64;
use radon_integrals::checks::{mc_gauss_2f1, mc_kummer_1f1};
use radon_integrals::gammar::euler_prefactor;
use radon_integrals::quad::{eig_quadrature, EigWeight};
use radon_integrals::{hgf_series_1f1, hgf_series_2f1, HermMatrix};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

// For a scalar argument X = ξ·1_r the Euler integrand is unitarily
// invariant, so the deterministic quadrature evaluates the integral to
// near machine precision; with the calibrated gamma prefactor it must
// reproduce the series.
#[test]
fn series_matches_quadrature_scalar_argument() {
    for r in 1..=3usize {
        let rf = r as f64;
        let (a, b, cc) = (c(rf + 0.6), c(1.1), c(2.0 * rf + 1.3));
        let xi = 0.35f64;
        let x = HermMatrix::from_diag(&vec![xi; r]);
        let series = hgf_series_2f1(a, b, cc, &x, 90).unwrap().value;
        let quad = eig_quadrature(
            &|l: &[f64]| {
                let mut prod = Complex64::new(1.0, 0.0);
                for &li in l {
                    prod *= Complex64::new(1.0 - xi * li, 0.0).powc(-b);
                }
                prod
            },
            EigWeight::Beta {
                a: (a - rf).re,
                b: (cc - a - rf).re,
            },
            r,
            64,
        )
        .unwrap()
        .value;
        let pref = euler_prefactor(a, cc, r).unwrap();
        let integral = pref * quad;
        let rel = (integral - series).norm() / series.norm();
        assert!(
            rel < 1e-8,
            "r={r}: quadrature {integral} vs series {series} (rel {rel:.3e})"
        );
    }
}

#[test]
fn series_matches_quadrature_confluent_scalar_argument() {
    for r in 1..=3usize {
        let rf = r as f64;
        let (a, cc) = (c(rf + 0.4), c(2.0 * rf + 0.9));
        let xi = -0.6f64;
        let x = HermMatrix::from_diag(&vec![xi; r]);
        let series = hgf_series_1f1(a, cc, &x, 90).unwrap().value;
        let quad = eig_quadrature(
            &|l: &[f64]| {
                let s: f64 = l.iter().map(|&li| xi * li).sum();
                Complex64::new(s.exp(), 0.0)
            },
            EigWeight::Beta {
                a: (a - rf).re,
                b: (cc - a - rf).re,
            },
            r,
            64,
        )
        .unwrap()
        .value;
        let pref = euler_prefactor(a, cc, r).unwrap();
        let integral = pref * quad;
        let rel = (integral - series).norm() / series.norm();
        assert!(
            rel < 1e-8,
            "r={r}: quadrature {integral} vs series {series} (rel {rel:.3e})"
        );
    }
}

// Monte Carlo agrees with the series for genuinely matrix (non-scalar)
// arguments within statistical error.
#[test]
fn mc_agrees_with_series_matrix_argument() {
    let x = HermMatrix::from_diag(&[0.15, 0.4]);
    let (a, b, cc) = (c(1.5), c(0.9), c(3.7));
    let series = hgf_series_2f1(a, b, cc, &x, 60).unwrap().value;
    let mc = mc_gauss_2f1(a, b, cc, &x, 400_000, 21, 4).unwrap();
    let sigma = (mc.value - series).norm() / mc.stderr;
    assert!(sigma < 5.0, "sigma {sigma}");

    let (ka, kc) = (c(1.8), c(3.6));
    let series = hgf_series_1f1(ka, kc, &x, 60).unwrap().value;
    let mc = mc_kummer_1f1(ka, kc, &x, 400_000, 22, 4).unwrap();
    let sigma = (mc.value - series).norm() / mc.stderr;
    assert!(sigma < 5.0, "sigma {sigma}");
}

// Cross-oracle agreement at a small spectrum: X = diag(0.1, 0.2), r = 2,
// normalized integral against the series to 1e-3.
#[test]
fn mc_matches_series_at_small_spectrum() {
    let x = HermMatrix::from_diag(&[0.1, 0.2]);
    let (a, b, cc) = (c(1.4), c(0.8), c(3.2));
    let series = hgf_series_2f1(a, b, cc, &x, 60).unwrap().value;
    let mc = mc_gauss_2f1(a, b, cc, &x, 600_000, 33, 4).unwrap();
    let rel = (mc.value - series).norm() / series.norm();
    assert!(rel < 1e-3, "relative deviation {rel:.3e}");
}

// Monte Carlo estimates of a unitarily invariant integrand are
// statistically invariant under conjugating the argument by a fixed
// unitary.
#[test]
fn mc_unitary_invariance() {
    use radon_integrals::sampling::{chunk_rng, haar_unitary};
    use radon_core::Mat;
    let r = 2usize;
    let eigs = [0.15, 0.4];
    let x0 = HermMatrix::from_diag(&eigs);
    let mut rng = chunk_rng(77, 0);
    let v = haar_unitary(r, &mut rng);
    let vh = Mat::from_fn(r, r, |i, j| v[(j, i)].conj());
    let rotated = HermMatrix::hermitize(&v.mul(x0.mat()).unwrap().mul(&vh).unwrap()).unwrap();

    let (a, b, cc) = (c(1.5), c(0.9), c(3.7));
    let e0 = mc_gauss_2f1(a, b, cc, &x0, 300_000, 5, 2).unwrap();
    let e1 = mc_gauss_2f1(a, b, cc, &rotated, 300_000, 6, 2).unwrap();
    let sigma = (e0.value - e1.value).norm() / e0.stderr.hypot(e1.stderr);
    assert!(sigma < 3.0, "sigma {sigma}");
    // The series value is exactly spectrum-determined.
    let s0 = hgf_series_2f1(a, b, cc, &x0, 50).unwrap().value;
    let s1 = hgf_series_2f1(a, b, cc, &rotated, 50).unwrap().value;
    assert!((s0 - s1).norm() < 1e-9);
}
