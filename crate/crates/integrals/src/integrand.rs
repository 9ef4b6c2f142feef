//! Integrands of the named Hermitian matrix integrals: the tabulated
//! affine-chart rows for the normal forms, the character route for a
//! general variable matrix, and the integrand-level covariance check.

use crate::herm::{HermMatrix, IntError};
use crate::sampling::{chunk_rng, conjugated_diag, haar_unitary};
use num_complex::Complex64;
use radon_core::character::log_character;
use radon_core::scalar::ToComplex;
use radon_core::{CharacterParams, HLambdaElement, Mat, ZMatrix};
use rand::Rng;

fn ld(m: &Mat<Complex64>) -> Complex64 {
    m.det().map(|d| d.ln()).unwrap_or(Complex64::new(f64::NEG_INFINITY, 0.0))
}

fn tr(m: &Mat<Complex64>) -> Complex64 {
    let mut t = Complex64::new(0.0, 0.0);
    for i in 0..m.rows() {
        t += m[(i, i)];
    }
    t
}

/// The log-integrand of the tabulated affine-chart row for the given
/// partition, free block x and parameters α. In the cubic case the chart
/// is taken with u ↦ -u, matching the classical orientation of the row
/// etr(ux - u³/3).
#[allow(clippy::type_complexity)]
pub fn radon_log_integrand(
    alpha: &CharacterParams,
    x: &Mat<Complex64>,
) -> Result<Box<dyn Fn(&HermMatrix) -> Complex64 + Sync>, IntError> {
    let r = alpha.spec().r();
    if x.rows() != r || x.cols() != r {
        return Err(IntError::Dimension("free block x must be r×r".into()));
    }
    let a = alpha.flat();
    let x = x.clone();
    let id = Mat::<Complex64>::identity(r);
    let parts = alpha.spec().parts().to_vec();
    let f: Box<dyn Fn(&HermMatrix) -> Complex64 + Sync> = match parts.as_slice() {
        [1, 1, 1] => {
            let (a1, a2) = (a[1], a[2]);
            Box::new(move |u| {
                let um = u.mat();
                let one_minus = id.sub(um).expect("same shape");
                a1 * ld(um) + a2 * ld(&one_minus)
            })
        }
        [2, 1] => {
            let (a1, a2) = (a[1], a[2]);
            Box::new(move |u| a1 * tr(u.mat()) + a2 * ld(u.mat()))
        }
        [3] => {
            let (a1, a2) = (a[1], a[2]);
            Box::new(move |u| {
                let u2 = u.mat().mul(u.mat()).expect("square");
                a1 * tr(u.mat()) - a2 * tr(&u2) * 0.5
            })
        }
        [1, 1, 1, 1] => {
            let (a1, a2, a3) = (a[1], a[2], a[3]);
            Box::new(move |u| {
                let um = u.mat();
                let one_minus = id.sub(um).expect("same shape");
                let ux = um.mul(&x).expect("r×r");
                let one_minus_ux = id.sub(&ux).expect("same shape");
                a1 * ld(um) + a2 * ld(&one_minus) + a3 * ld(&one_minus_ux)
            })
        }
        [2, 1, 1] => {
            let (a1, a2, a3) = (a[1], a[2], a[3]);
            Box::new(move |u| {
                let um = u.mat();
                let ux = um.mul(&x).expect("r×r");
                let one_minus = id.sub(um).expect("same shape");
                a1 * tr(&ux) + a2 * ld(um) + a3 * ld(&one_minus)
            })
        }
        [2, 2] => {
            let (a1, a2, a3) = (a[1], a[2], a[3]);
            Box::new(move |u| {
                let um = u.mat();
                let ux = um.mul(&x).expect("r×r");
                match um.inverse() {
                    Ok(uinv) => a1 * tr(&ux) + a2 * ld(um) - a3 * tr(&uinv),
                    Err(_) => Complex64::new(f64::NEG_INFINITY, 0.0),
                }
            })
        }
        [3, 1] => {
            let (a1, a2, a3) = (a[1], a[2], a[3]);
            Box::new(move |u| {
                let um = u.mat();
                let ux = um.mul(&x).expect("r×r");
                let u2 = um.mul(um).expect("square");
                a1 * tr(um) + a2 * (tr(&ux) - tr(&u2) * 0.5) + a3 * ld(um)
            })
        }
        [4] => {
            let (a1, a2, a3) = (a[1], a[2], a[3]);
            Box::new(move |u| {
                let um = u.mat();
                let ux = um.mul(&x).expect("r×r");
                let u2 = um.mul(um).expect("square");
                let u3 = u2.mul(um).expect("square");
                -a1 * tr(um) - a2 * tr(&u2) * 0.5 + a3 * (tr(&ux) - tr(&u3) / 3.0)
            })
        }
        other => {
            return Err(IntError::Unsupported(format!(
                "no tabulated integrand for partition {other:?}"
            )))
        }
    };
    Ok(f)
}

/// log χ(ι⁻¹(ūz); α) for a general complex variable matrix z, evaluated
/// at ū = (1_r, u). This is the integrand of the defining transform in
/// the affine chart, with the principal branch per determinant factor.
pub fn char_route_log_integrand(
    z: &Mat<Complex64>,
    alpha: &CharacterParams,
    u: &HermMatrix,
) -> Result<Complex64, IntError> {
    let spec = alpha.spec();
    let r = spec.r();
    if z.rows() != 2 * r || z.cols() != spec.big_n() {
        return Err(IntError::Dimension(format!(
            "z must be {}x{}",
            2 * r,
            spec.big_n()
        )));
    }
    let mut ubar = Mat::zeros(r, 2 * r);
    ubar.set_block(0, 0, &Mat::identity(r));
    ubar.set_block(0, r, u.mat());
    let tz = ubar.mul(z)?;
    let h = HLambdaElement::from_iota(spec, &tz)?;
    let v = log_character(&h, alpha)?;
    Ok(v.value)
}

/// Max pointwise covariance residual over sampled chart points:
/// sup_u | log I(u; z·h) - log I(u; z) - log χ(h; α) |.
/// Only h with positive scalar leading blocks are accepted; those keep
/// every integration domain fixed and the principal branch additive.
pub fn covariance_check_integrand(
    z: &ZMatrix,
    h: &HLambdaElement<radon_core::Rat>,
    alpha: &CharacterParams,
    n_samples: usize,
    seed: u64,
) -> Result<f64, IntError> {
    let spec = alpha.spec().clone();
    if z.spec() != &spec || h.spec() != &spec {
        return Err(IntError::Invalid("partition mismatch".into()));
    }
    let r = spec.r();
    for (k, f) in h.factors().iter().enumerate() {
        let lead = f.coeff(0);
        let s = lead[(0, 0)].clone();
        if *lead != Mat::scalar(r, &s) || s.to_c64().re <= 0.0 || s.to_c64().im != 0.0 {
            return Err(IntError::Domain(format!(
                "factor {k}: leading block must be a positive scalar, h moves the domain"
            )));
        }
    }
    let chi = log_character(h, alpha)?.value;
    let zc = z.data().map(|e| e.to_c64());
    let hc = h.embed().map(|e| e.to_c64());
    let zhc = zc.mul(&hc)?;

    let mut rng = chunk_rng(seed, 0xc0de);
    let mut worst = 0.0f64;
    let mut used = 0usize;
    while used < n_samples {
        let lambda: Vec<f64> = (0..r).map(|_| 0.05 + 0.9 * rng.random::<f64>()).collect();
        let v = haar_unitary(r, &mut rng);
        let u = HermMatrix::hermitize(&conjugated_diag(&v, &lambda))?;
        let lhs = char_route_log_integrand(&zhc, alpha, &u)?;
        let rhs = char_route_log_integrand(&zc, alpha, &u)?;
        let res = (lhs - rhs - chi).norm();
        if !res.is_finite() {
            continue;
        }
        worst = worst.max(res);
        used += 1;
    }
    Ok(worst)
}
