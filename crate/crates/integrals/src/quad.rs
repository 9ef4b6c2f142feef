//! Deterministic eigenvalue quadrature: Gauss rules from the three-term
//! recurrences (Golub-Welsch), tensored over eigenvalues against the
//! squared Vandermonde density.

use crate::estimate::{IntegralEstimate, Method};
use crate::herm::{jacobi_symmetric, IntError};
use crate::sampling::ln_gamma_real;
use num_complex::Complex64;

/// Per-eigenvalue weight of the reduced integral.
#[derive(Debug, Clone, Copy)]
pub enum EigWeight {
    /// x^a (1-x)^b on (0,1); endpoint-integrable powers a, b > -1.
    Beta { a: f64, b: f64 },
    /// x^a e^{-x} on (0,∞); a > -1.
    Gamma { a: f64 },
    /// e^{-x²/2} on ℝ.
    Gauss,
}

/// Nodes and weights of an n-point Gauss rule for the weight.
pub fn gauss_rule(weight: EigWeight, n: usize) -> Result<(Vec<f64>, Vec<f64>), IntError> {
    if n == 0 {
        return Err(IntError::Invalid("need at least one node".into()));
    }
    // Jacobi-matrix recurrence coefficients: diagonal a_k, off-diagonal
    // sqrt(b_k), plus the total mass beta0 of the weight.
    let (diag, off, beta0): (Vec<f64>, Vec<f64>, f64) = match weight {
        EigWeight::Beta { a: pa, b: pb } => {
            // Gauss-Jacobi on [-1,1] with weight (1-t)^b (1+t)^a, then
            // mapped to [0,1] with x = (1+t)/2.
            let (al, be) = (pb, pa);
            if al <= -1.0 || be <= -1.0 {
                return Err(IntError::Unsupported(
                    "beta weight exponents must exceed -1".into(),
                ));
            }
            let mut diag = Vec::with_capacity(n);
            let mut off = Vec::with_capacity(n.saturating_sub(1));
            let s = al + be;
            for k in 0..n {
                let kf = k as f64;
                let d = if k == 0 {
                    (be - al) / (s + 2.0)
                } else {
                    (be * be - al * al) / ((2.0 * kf + s) * (2.0 * kf + s + 2.0))
                };
                diag.push(d);
                if k + 1 < n {
                    let k1 = kf + 1.0;
                    let num = 4.0 * k1 * (k1 + al) * (k1 + be) * (k1 + s);
                    let den = (2.0 * k1 + s).powi(2) * (2.0 * k1 + s + 1.0) * (2.0 * k1 + s - 1.0);
                    off.push((num / den).sqrt());
                }
            }
            let lnb0 = (s + 1.0) * 2f64.ln() + ln_gamma_real(al + 1.0) + ln_gamma_real(be + 1.0)
                - ln_gamma_real(s + 2.0);
            (diag, off, lnb0.exp())
        }
        EigWeight::Gamma { a } => {
            if a <= -1.0 {
                return Err(IntError::Unsupported(
                    "gamma weight exponent must exceed -1".into(),
                ));
            }
            let diag = (0..n).map(|k| 2.0 * k as f64 + a + 1.0).collect();
            let off = (1..n).map(|k| (k as f64 * (k as f64 + a)).sqrt()).collect();
            (diag, off, ln_gamma_real(a + 1.0).exp())
        }
        EigWeight::Gauss => {
            // Hermite weight e^{-t²} rescaled to e^{-x²/2} via x = √2 t.
            let diag = vec![0.0; n];
            let off = (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect();
            (diag, off, std::f64::consts::PI.sqrt())
        }
    };

    // Golub-Welsch: eigenvalues of the symmetric tridiagonal matrix are
    // the nodes; weights come from the first eigenvector components.
    let mut m = vec![0.0f64; n * n];
    for k in 0..n {
        m[k * n + k] = diag[k];
        if k + 1 < n {
            m[k * n + (k + 1)] = off[k];
            m[(k + 1) * n + k] = off[k];
        }
    }
    let mut vecs = vec![0.0f64; n * n];
    for k in 0..n {
        vecs[k * n + k] = 1.0;
    }
    {
        let mut holder = Some(&mut vecs[..]);
        jacobi_symmetric(&mut m, n, &mut holder);
    }
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|k| (m[k * n + k], beta0 * vecs[k] * vecs[k]))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (mut nodes, mut weights): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();

    // Map to the target coordinates.
    match weight {
        EigWeight::Beta { .. } => {
            let EigWeight::Beta { a: pa, b: pb } = weight else {
                unreachable!()
            };
            let scale = 0.5f64.powf(pa + pb + 1.0);
            for x in nodes.iter_mut() {
                *x = (1.0 + *x) / 2.0;
            }
            for w in weights.iter_mut() {
                *w *= scale;
            }
        }
        EigWeight::Gauss => {
            let s = 2f64.sqrt();
            for x in nodes.iter_mut() {
                *x *= s;
            }
            for w in weights.iter_mut() {
                *w *= s;
            }
        }
        EigWeight::Gamma { .. } => {}
    }
    Ok((nodes, weights))
}

/// Deterministic evaluation of
/// ∫ ∏ w(λ_i) · smooth(λ) · Δ(λ)² dλ
/// over the eigenvalue region, by an n-point tensor rule per eigenvalue.
/// Exact (up to rounding) whenever smooth·Δ² is polynomial of degree
/// < 2n per variable; r is capped at 3.
pub fn eig_quadrature(
    smooth: &dyn Fn(&[f64]) -> Complex64,
    weight: EigWeight,
    r: usize,
    n_nodes: usize,
) -> Result<IntegralEstimate, IntError> {
    if r == 0 || r > 3 {
        return Err(IntError::Unsupported(format!(
            "eigenvalue quadrature supports 1 ≤ r ≤ 3, got {r}"
        )));
    }
    let (nodes, weights) = gauss_rule(weight, n_nodes)?;
    let mut idx = vec![0usize; r];
    let mut total = Complex64::new(0.0, 0.0);
    let mut lambda = vec![0.0f64; r];
    loop {
        let mut w = 1.0f64;
        for (k, &i) in idx.iter().enumerate() {
            lambda[k] = nodes[i];
            w *= weights[i];
        }
        let mut vdm = 1.0f64;
        for i in 0..r {
            for j in i + 1..r {
                let d = lambda[i] - lambda[j];
                vdm *= d * d;
            }
        }
        if vdm != 0.0 {
            total += smooth(&lambda) * (w * vdm);
        }
        // Advance the multi-index.
        let mut k = 0;
        loop {
            if k == r {
                return Ok(IntegralEstimate::deterministic(total, Method::EigQuad));
            }
            idx[k] += 1;
            if idx[k] < nodes.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Matrix beta integral over eigenvalues:
/// B̃_r(a,b) = ∫ ∏ λ^{a-r}(1-λ)^{b-r} Δ² dλ over (0,1)^r.
pub fn beta_r_quad(a: f64, b: f64, r: usize, n_nodes: usize) -> Result<Complex64, IntError> {
    if a - (r as f64) <= -1.0 || b - (r as f64) <= -1.0 {
        return Err(IntError::Unsupported(
            "beta integral diverges for these exponents".into(),
        ));
    }
    let est = eig_quadrature(
        &|_l| Complex64::new(1.0, 0.0),
        EigWeight::Beta {
            a: a - r as f64,
            b: b - r as f64,
        },
        r,
        n_nodes,
    )?;
    Ok(est.value)
}

/// Matrix gamma integral over eigenvalues:
/// Γ̃_r(a) = ∫ ∏ λ^{a-r} e^{-λ} Δ² dλ over (0,∞)^r. Real a > r-1.
pub fn gamma_r_quad(a: f64, r: usize, n_nodes: usize) -> Result<Complex64, IntError> {
    if a - (r as f64) <= -1.0 {
        return Err(IntError::Unsupported(
            "gamma integral diverges for this exponent".into(),
        ));
    }
    let est = eig_quadrature(
        &|_l| Complex64::new(1.0, 0.0),
        EigWeight::Gamma { a: a - r as f64 },
        r,
        n_nodes,
    )?;
    Ok(est.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    // r = 1 reduces to classical rules: B(2,3) = 1/12, Γ(5) = 24,
    // ∫ e^{-x²/2} = √(2π).
    #[test]
    fn classical_one_dimensional_values() {
        let b = beta_r_quad(2.0, 3.0, 1, 24).unwrap();
        assert!((b.re - 1.0 / 12.0).abs() < 1e-14, "{b}");
        let g = gamma_r_quad(5.0, 1, 24).unwrap();
        assert!((g.re - 24.0).abs() < 1e-10, "{g}");
        let h = eig_quadrature(&|_l| Complex64::new(1.0, 0.0), EigWeight::Gauss, 1, 24).unwrap();
        assert!((h.value.re - (2.0 * std::f64::consts::PI).sqrt()).abs() < 1e-12);
    }

    // Fractional exponents: B(2.5, 3.5) against the lgamma closed form.
    #[test]
    fn fractional_beta() {
        let b = beta_r_quad(2.5, 3.5, 1, 32).unwrap();
        let want =
            (ln_gamma_real(2.5) + ln_gamma_real(3.5) - ln_gamma_real(6.0)).exp();
        assert!((b.re - want).abs() < 1e-12 * want);
    }

    // Laguerre-type Selberg value: ∫∫ e^{-λ1-λ2} Δ² = 2.
    #[test]
    fn selberg_laguerre_r2() {
        let g = gamma_r_quad(2.0, 2, 16).unwrap();
        assert!((g.re - 2.0).abs() < 1e-10, "{g}");
    }

    // Full Selberg product formula for the box at γ = 1:
    // ∫_{(0,1)^r} ∏ t^{α-1}(1-t)^{β-1} Δ² dt
    //   = ∏_{j=0}^{r-1} Γ(α+j)Γ(β+j)Γ(2+j) / Γ(α+β+r+j-1) / Γ(2)-ish form.
    #[test]
    fn selberg_box_matches_product_formula() {
        for r in 1..=3usize {
            let (alpha, beta) = (1.3f64, 2.1f64);
            let got = eig_quadrature(
                &|_l| Complex64::new(1.0, 0.0),
                EigWeight::Beta {
                    a: alpha - 1.0,
                    b: beta - 1.0,
                },
                r,
                32,
            )
            .unwrap()
            .value
            .re;
            let mut ln_want = 0.0;
            for j in 0..r {
                let jf = j as f64;
                ln_want += ln_gamma_real(alpha + jf) + ln_gamma_real(beta + jf)
                    + ln_gamma_real(2.0 + jf)
                    - ln_gamma_real(alpha + beta + (r as f64) + jf - 1.0);
            }
            let want = ln_want.exp();
            assert!(
                (got - want).abs() < 1e-9 * want.abs(),
                "r={r}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn rejects_large_r_and_bad_exponents() {
        assert!(eig_quadrature(
            &|_l| Complex64::new(1.0, 0.0),
            EigWeight::Gauss,
            4,
            8
        )
        .is_err());
        assert!(beta_r_quad(0.5, 3.0, 2, 8).is_err());
    }
}
