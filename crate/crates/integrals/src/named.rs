//! Numeric evaluation of the confluent rows beyond the Euler family:
//! the cone integral with an inverse term, the Gaussian-weight integral,
//! and the cubic (rotated-contour) integral, with classical oracles for
//! the r = 1 reductions.

use crate::domain::Domain;
use crate::estimate::{IntegralEstimate, Method};
use crate::gammar::gamma_fn;
use crate::herm::{HermMatrix, IntError};
use crate::mc::{mc_integral, McConfig};
use crate::sampling::Proposal;
use num_complex::Complex64;
use radon_core::CharacterParams;

/// Budget knobs shared by the numeric evaluators.
#[derive(Debug, Clone, Copy)]
pub struct EvalBudget {
    pub mc_samples: u64,
    pub seed: u64,
    pub threads: usize,
}

impl Default for EvalBudget {
    fn default() -> Self {
        Self {
            mc_samples: 200_000,
            seed: 1,
            threads: 1,
        }
    }
}

/// Evaluate the (2,2) / (3,1) / (4) rows at the given normal-form block.
/// Policies: the cone row needs x negative definite; the Gaussian row
/// needs the determinant power to be a nonnegative integer; the cubic row
/// is evaluated on the rotated contour and only at r = 1.
pub fn bessel_hermite_airy_eval(
    alpha: &CharacterParams,
    x: &HermMatrix,
    budget: &EvalBudget,
) -> Result<IntegralEstimate, IntError> {
    let r = alpha.spec().r();
    if x.r() != r {
        return Err(IntError::Dimension("x must be r×r".into()));
    }
    let a = alpha.flat();
    let is = |z: Complex64, w: f64| (z - Complex64::new(w, 0.0)).norm() < 1e-12;
    match alpha.spec().parts() {
        [2, 2] => {
            if !is(a[1], 1.0) || !is(a[3], 1.0) {
                return Err(IntError::Unsupported(
                    "the cone row is evaluated at the normalized parameters (α₀, 1, α₂, 1)".into(),
                ));
            }
            let a2 = a[2];
            let eigs = x.eigenvalues();
            if eigs.iter().any(|&e| e >= -1e-9) {
                return Err(IntError::Domain(
                    "the cone row needs x negative definite".into(),
                ));
            }
            if r == 1 {
                // ∫₀^∞ e^{xu - 1/u} u^{a2} du by a double-exponential
                // substitution u = e^t.
                let xv = eigs[0];
                let f = |t: f64| {
                    let u = t.exp();
                    ((xv * u - 1.0 / u) + (a2.re + 1.0) * t).exp()
                        * Complex64::new((a2.im * t).cos(), (a2.im * t).sin())
                };
                let v = simpson(&f, -7.0, 9.0, 4000);
                Ok(IntegralEstimate::deterministic(v, Method::EigQuad))
            } else {
                let xm = x.mat().clone();
                let log_f = move |u: &HermMatrix| {
                    let um = u.mat();
                    let ux = um.mul(&xm).expect("r×r");
                    match um.inverse() {
                        Ok(uinv) => {
                            let mut t = Complex64::new(0.0, 0.0);
                            for i in 0..um.rows() {
                                t += ux[(i, i)] - uinv[(i, i)];
                            }
                            t + a2 * um.det().unwrap().ln()
                        }
                        Err(_) => Complex64::new(f64::NEG_INFINITY, 0.0),
                    }
                };
                let scale = 1.0 / eigs.iter().fold(f64::INFINITY, |m, e| m.min(e.abs()));
                let cfg = McConfig::new(
                    r,
                    budget.mc_samples,
                    budget.seed,
                    Proposal::GammaProduct {
                        shape: 1.0,
                        scale: scale.min(5.0),
                    },
                )
                .with_threads(budget.threads);
                mc_integral(&log_f, Domain::PositiveCone, &cfg)
            }
        }
        [3, 1] => {
            if !is(a[1], 0.0) || !is(a[2], 1.0) {
                return Err(IntError::Unsupported(
                    "the Gaussian row is evaluated at the normalized parameters (α₀, 0, 1, α₃)"
                        .into(),
                ));
            }
            let a3 = a[3];
            if a3.im != 0.0 || a3.re < 0.0 || a3.re.fract() != 0.0 {
                return Err(IntError::Unsupported(
                    "the Gaussian row is evaluated only for nonnegative integer determinant powers"
                        .into(),
                ));
            }
            let k = a3.re as i32;
            if r == 1 {
                let xv = x.eigenvalues()[0];
                let f = |u: f64| {
                    Complex64::new((xv * u - 0.5 * u * u).exp() * u.powi(k), 0.0)
                };
                let v = simpson(&f, xv - 14.0, xv + 14.0, 6000);
                Ok(IntegralEstimate::deterministic(v, Method::EigQuad))
            } else {
                let xm = x.mat().clone();
                let log_f = move |u: &HermMatrix| {
                    let um = u.mat();
                    let ux = um.mul(&xm).expect("r×r");
                    let u2 = um.mul(um).expect("square");
                    let mut t = Complex64::new(0.0, 0.0);
                    for i in 0..um.rows() {
                        t += ux[(i, i)] - 0.5 * u2[(i, i)];
                    }
                    t + um.det().unwrap().ln() * (k as f64)
                };
                let cfg = McConfig::new(r, budget.mc_samples, budget.seed, Proposal::GaussProduct)
                    .with_threads(budget.threads);
                mc_integral(&log_f, Domain::FullSpace, &cfg)
            }
        }
        [4] => {
            if !is(a[1], 0.0) || !is(a[2], 0.0) || !is(a[3], 1.0) {
                return Err(IntError::Unsupported(
                    "the cubic row is evaluated at the normalized parameters (-2r, 0, 0, 1)".into(),
                ));
            }
            if r != 1 {
                return Err(IntError::Unsupported(
                    "the cubic row is numerically supported only at r = 1; the rotated matrix contour is not specified"
                        .into(),
                ));
            }
            let xv = x.eigenvalues()[0];
            Ok(IntegralEstimate::deterministic(
                airy_contour_integral(xv),
                Method::EigQuad,
            ))
        }
        other => Err(IntError::Unsupported(format!(
            "no confluent-row evaluator for partition {other:?}"
        ))),
    }
}

/// ∫ e^{i(t³/3 + x t)} dt over the rotated V contour through the decay
/// sectors (arms at angles π/6 and 5π/6); equals 2π·Ai(x) for real x.
pub fn airy_contour_integral(x: f64) -> Complex64 {
    let arm = |omega: Complex64| -> Complex64 {
        let i = Complex64::new(0.0, 1.0);
        let f = |s: f64| {
            let t = omega * s;
            (i * (t * t * t / 3.0 + t * x)).exp()
        };
        simpson(&f, 0.0, 8.0, 6000)
    };
    let w1 = Complex64::from_polar(1.0, std::f64::consts::PI / 6.0);
    let w2 = Complex64::from_polar(1.0, 5.0 * std::f64::consts::PI / 6.0);
    w1 * arm(w1) - w2 * arm(w2)
}

/// Composite Simpson for complex integrands on a finite interval.
pub fn simpson(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, n: usize) -> Complex64 {
    let n = if n.is_multiple_of(2) { n } else { n + 1 };
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        s += f(a + k as f64 * h) * w;
    }
    s * (h / 3.0)
}

// ---------------------------------------------------------------------------
// Classical oracles.
// ---------------------------------------------------------------------------

/// Ai(x) from its convergent Maclaurin series.
pub fn airy_ai(x: f64) -> f64 {
    let c1 = 1.0 / (3f64.powf(2.0 / 3.0) * gamma_fn(Complex64::new(2.0 / 3.0, 0.0)).re);
    let c2 = 1.0 / (3f64.powf(1.0 / 3.0) * gamma_fn(Complex64::new(1.0 / 3.0, 0.0)).re);
    // f(x) = Σ x^{3k} ∏_{j≤k}(3j-2)/(3k)!, g(x) = Σ x^{3k+1} ∏(3j-1)/(3k+1)!.
    let mut f_term = 1.0;
    let mut g_term = x;
    let mut f_sum = f_term;
    let mut g_sum = g_term;
    for k in 1..60 {
        let kf = k as f64;
        f_term *= (3.0 * kf - 2.0) * x.powi(3)
            / ((3.0 * kf) * (3.0 * kf - 1.0) * (3.0 * kf - 2.0));
        g_term *= (3.0 * kf - 1.0) * x.powi(3)
            / ((3.0 * kf + 1.0) * (3.0 * kf) * (3.0 * kf - 1.0));
        f_sum += f_term;
        g_sum += g_term;
        if f_term.abs() + g_term.abs() < 1e-18 {
            break;
        }
    }
    c1 * f_sum - c2 * g_sum
}

/// Modified Bessel K_ν(z) via its cosh integral representation.
pub fn bessel_k(nu: f64, z: f64) -> f64 {
    let f = |t: f64| Complex64::new((-z * t.cosh()).exp() * (nu * t).cosh(), 0.0);
    simpson(&f, 0.0, 9.0, 6000).re
}

#[cfg(test)]
mod tests {
    use super::*;
    use radon_core::PartitionSpec;

    fn params(parts: Vec<usize>, r: usize, alpha: &[f64]) -> CharacterParams {
        let spec = PartitionSpec::new(r, parts).unwrap();
        let flat: Vec<Complex64> = alpha.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        CharacterParams::from_flat(spec, &flat, 2 * r).unwrap()
    }

    #[test]
    fn airy_point() {
        // ∫ e^{-u³/3} over the rotated contour = 2π·Ai(0).
        let got = airy_contour_integral(0.0);
        let want = 2.0 * std::f64::consts::PI * airy_ai(0.0);
        assert!((got.re - want).abs() < 1e-10, "{got} vs {want}");
        assert!(got.im.abs() < 1e-10);
        // And at a nonzero point.
        let got = airy_contour_integral(1.0);
        let want = 2.0 * std::f64::consts::PI * airy_ai(1.0);
        assert!((got.re - want).abs() < 1e-9, "{got} vs {want}");
    }

    #[test]
    fn gaussian_point() {
        // (3,1) at r=1, k=0, x=0: √(2π).
        let p = params(vec![3, 1], 1, &[-2.0, 0.0, 1.0, 0.0]);
        let x = HermMatrix::zero(1);
        let e = bessel_hermite_airy_eval(&p, &x, &EvalBudget::default()).unwrap();
        assert!((e.value.re - (2.0 * std::f64::consts::PI).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn bessel_point() {
        // (2,2) at r=1, x=-1, a2=0: ∫ e^{-u-1/u} du = 2K₁(2).
        let p = params(vec![2, 2], 1, &[-2.0, 1.0, 0.0, 1.0]);
        let x = HermMatrix::from_diag(&[-1.0]);
        let e = bessel_hermite_airy_eval(&p, &x, &EvalBudget::default()).unwrap();
        let want = 2.0 * bessel_k(1.0, 2.0);
        assert!((e.value.re - want).abs() < 1e-9, "{} vs {want}", e.value.re);
    }

    #[test]
    fn policy_rejections() {
        // Positive x rejected on the cone row.
        let p = params(vec![2, 2], 1, &[-2.0, 1.0, 0.0, 1.0]);
        let x = HermMatrix::from_diag(&[0.5]);
        assert!(bessel_hermite_airy_eval(&p, &x, &EvalBudget::default()).is_err());
        // Fractional determinant power rejected on the Gaussian row.
        let p = params(vec![3, 1], 1, &[-2.0, 0.0, 1.0, 0.5]);
        let x = HermMatrix::zero(1);
        assert!(bessel_hermite_airy_eval(&p, &x, &EvalBudget::default()).is_err());
        // r ≥ 2 rejected on the cubic row.
        let p = params(vec![4], 2, &[-4.0, 0.0, 0.0, 1.0]);
        let x = HermMatrix::zero(2);
        assert!(bessel_hermite_airy_eval(&p, &x, &EvalBudget::default()).is_err());
    }

    #[test]
    fn bessel_k_oracle_sanity() {
        // K_{1/2}(z) = sqrt(π/(2z))·e^{-z}.
        let z = 2.0f64;
        let want = (std::f64::consts::PI / (2.0 * z)).sqrt() * (-z).exp();
        assert!((bessel_k(0.5, z) - want).abs() < 1e-12);
    }
}
