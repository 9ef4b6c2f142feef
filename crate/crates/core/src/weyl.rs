//! The Weyl group of H_λ: block-scalar μ matrices per Jordan factor, a
//! block permutation per multiplicity class, the Lie-criterion normalizer
//! test, the constructive normalizer decomposition, and the induced action
//! on character parameters.

use crate::hlambda::HLambdaElement;
use crate::jet::Jet;
use crate::matrix::Mat;
use crate::mu::MuVector;
use crate::partition::PartitionSpec;
use crate::perm::{perm_block_matrix, Perm};
use crate::scalar::{CoreError, Rat, Ring, ToComplex};
use crate::CharacterParams;
use num_complex::Complex64;

/// An element of W_λ: one μ vector of order n_i per factor slot, plus a
/// permutation of the equal-size factors in each multiplicity class.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylElement<T> {
    spec: PartitionSpec,
    mus: Vec<Vec<MuVector<T>>>,
    sigma: Vec<Perm>,
}

impl<T: Ring> WeylElement<T> {
    pub fn new(
        spec: PartitionSpec,
        mus: Vec<Vec<MuVector<T>>>,
        sigma: Vec<Perm>,
    ) -> Result<Self, CoreError> {
        let classes = spec.classes();
        if mus.len() != classes.len() || sigma.len() != classes.len() {
            return Err(CoreError::SpecMismatch(format!(
                "expected {} multiplicity classes",
                classes.len()
            )));
        }
        for (i, class) in classes.iter().enumerate() {
            if mus[i].len() != class.count {
                return Err(CoreError::SpecMismatch(format!(
                    "class {} needs {} mu vectors",
                    i, class.count
                )));
            }
            if sigma[i].n() != class.count {
                return Err(CoreError::SpecMismatch(format!(
                    "class {} permutation must act on {} slots",
                    i, class.count
                )));
            }
            for m in &mus[i] {
                if m.p() != class.part {
                    return Err(CoreError::SpecMismatch(format!(
                        "class {} mu vectors must have order {}",
                        i, class.part
                    )));
                }
                if !m.is_group_element() {
                    return Err(CoreError::DegenerateMu);
                }
            }
        }
        Ok(Self { spec, mus, sigma })
    }

    pub fn identity(spec: PartitionSpec) -> Self {
        let classes = spec.classes();
        let mus = classes
            .iter()
            .map(|c| vec![MuVector::identity(c.part); c.count])
            .collect();
        let sigma = classes.iter().map(|c| Perm::identity(c.count)).collect();
        Self { spec, mus, sigma }
    }

    pub fn spec(&self) -> &PartitionSpec {
        &self.spec
    }

    pub fn mus(&self) -> &[Vec<MuVector<T>>] {
        &self.mus
    }

    pub fn sigma(&self) -> &[Perm] {
        &self.sigma
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U + Copy) -> WeylElement<U> {
        WeylElement {
            spec: self.spec.clone(),
            mus: self
                .mus
                .iter()
                .map(|class| {
                    class
                        .iter()
                        .map(|m| {
                            MuVector::new(m.p(), m.coeffs().iter().map(f).collect())
                                .expect("same shape")
                        })
                        .collect()
                })
                .collect(),
            sigma: self.sigma.clone(),
        }
    }

    /// The N×N matrix: per class, diag(μ(c^{(1)}), …, μ(c^{(p_i)})) · P_σ
    /// with every μ entry inflated to a scalar r×r block.
    pub fn matrix(&self) -> Mat<T> {
        let r = self.spec.r();
        let classes = self.spec.classes();
        let mut class_blocks = Vec::new();
        for (i, class) in classes.iter().enumerate() {
            let factor_mats: Vec<Mat<T>> = self.mus[i]
                .iter()
                .map(|m| inflate(&m.mu_matrix(), r))
                .collect();
            let d = Mat::block_diag(&factor_mats);
            let p = perm_block_matrix(&self.sigma[i], class.part * r);
            class_blocks.push(d.mul(&p).expect("square"));
        }
        Mat::block_diag(&class_blocks)
    }

    /// The n×n scalar compression ρ: the same matrix with r = 1.
    pub fn rho(&self) -> Mat<T> {
        let classes = self.spec.classes();
        let mut class_blocks = Vec::new();
        for (i, class) in classes.iter().enumerate() {
            let factor_mats: Vec<Mat<T>> =
                self.mus[i].iter().map(|m| m.mu_matrix()).collect();
            let d = Mat::block_diag(&factor_mats);
            let p = perm_block_matrix(&self.sigma[i], class.part);
            class_blocks.push(d.mul(&p).expect("square"));
        }
        Mat::block_diag(&class_blocks)
    }

    /// Group law, matching matrix multiplication of [`Self::matrix`].
    pub fn compose(&self, rhs: &Self) -> Result<Self, CoreError> {
        if self.spec != rhs.spec {
            return Err(CoreError::SpecMismatch("Weyl elements over different λ".into()));
        }
        let mut mus = Vec::new();
        let mut sigma = Vec::new();
        for i in 0..self.mus.len() {
            let sa = &self.sigma[i];
            let sa_inv = sa.inverse();
            let mut class = Vec::new();
            for k in 0..self.mus[i].len() {
                class.push(self.mus[i][k].compose(&rhs.mus[i][sa_inv.apply(k)])?);
            }
            mus.push(class);
            sigma.push(sa.compose(&rhs.sigma[i]));
        }
        Self::new(self.spec.clone(), mus, sigma)
    }

    pub fn inverse(&self) -> Result<Self, CoreError> {
        let mut mus = Vec::new();
        let mut sigma = Vec::new();
        for i in 0..self.mus.len() {
            let s = &self.sigma[i];
            let mut class = Vec::new();
            for k in 0..self.mus[i].len() {
                class.push(self.mus[i][s.apply(k)].inverse()?);
            }
            mus.push(class);
            sigma.push(s.inverse());
        }
        Self::new(self.spec.clone(), mus, sigma)
    }
}

/// Inflate a scalar grid into block form: entry (i,j) becomes m[i][j]·1_r.
fn inflate<T: Ring>(m: &Mat<T>, r: usize) -> Mat<T> {
    let mut out = Mat::zeros(m.rows() * r, m.cols() * r);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                out.set_block(i * r, j * r, &Mat::scalar(r, &m[(i, j)]));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Parameter transport: β = α·ᵗρ(g), i.e. β_i = Σ_j α_j ρ(g)_{i,j}.
// ---------------------------------------------------------------------------

/// Transport character parameters along a Weyl element.
pub fn act_on_params(
    alpha: &CharacterParams,
    w: &WeylElement<Complex64>,
) -> Result<CharacterParams, CoreError> {
    if alpha.spec() != w.spec() {
        return Err(CoreError::SpecMismatch(
            "parameters and Weyl element over different λ".into(),
        ));
    }
    let rho = w.rho();
    let a = alpha.flat();
    let n = a.len();
    let mut b = vec![Complex64::new(0.0, 0.0); n];
    for (i, bi) in b.iter_mut().enumerate() {
        for (j, aj) in a.iter().enumerate() {
            *bi += *aj * rho[(i, j)];
        }
    }
    CharacterParams::from_flat(alpha.spec().clone(), &b, alpha.m())
}

/// Rational convenience wrapper for exact Weyl elements.
pub fn act_on_params_rat(
    alpha: &CharacterParams,
    w: &WeylElement<Rat>,
) -> Result<CharacterParams, CoreError> {
    act_on_params(alpha, &w.map(|x| x.to_c64()))
}

/// Bring every parameter block to the shape (α₀, 0, …, 0, 1) using the
/// continuous Weyl part. Per block of order n the root c₁ is the principal
/// (n-1)-th root of 1/α_{n-1}; the remaining c_j come from a triangular
/// solve. Blocks of order 1 are untouched.
#[allow(clippy::needless_range_loop)]
pub fn normalize_params(
    alpha: &CharacterParams,
) -> Result<(CharacterParams, WeylElement<Complex64>), CoreError> {
    let spec = alpha.spec().clone();
    let classes = spec.classes();
    let mut mus: Vec<Vec<MuVector<Complex64>>> = Vec::new();
    let mut beta_blocks: Vec<Vec<Complex64>> = vec![Vec::new(); spec.len()];
    for (i, class) in classes.iter().enumerate() {
        let n = class.part;
        let mut class_mus = Vec::new();
        for k in 0..class.count {
            let factor = spec.class_factor_index(i, k);
            let block = &alpha.alpha()[factor];
            if n == 1 {
                class_mus.push(MuVector::identity(1));
                beta_blocks[factor] = block.clone();
                continue;
            }
            let top = block[n - 1];
            if top.norm() == 0.0 {
                return Err(CoreError::Invalid(format!(
                    "block {factor}: top coefficient vanishes, cannot normalize"
                )));
            }
            let c1 = principal_root(Complex64::new(1.0, 0.0) / top, n - 1);
            let mut c = vec![Complex64::new(0.0, 0.0); n - 1];
            c[0] = c1;
            // For i = n-2 .. 1, β_i = Σ_j α_j μ_{i,j}(c) is linear in
            // c_{n-i} with coefficient α_{n-1}·i·c₁^{i-1}.
            for row in (1..=n.saturating_sub(2)).rev() {
                let partial = MuVector::new(n, c.clone())?;
                let mut s = Complex64::new(0.0, 0.0);
                for j in row..n {
                    s += block[j] * partial.mu_eval(row, j)?;
                }
                let coeff = top * Complex64::new(row as f64, 0.0) * c1.powu((row - 1) as u32);
                c[n - 1 - row] = -s / coeff;
            }
            let mut beta = vec![Complex64::new(0.0, 0.0); n];
            beta[0] = block[0];
            beta[n - 1] = Complex64::new(1.0, 0.0);
            beta_blocks[factor] = beta;
            class_mus.push(MuVector::new(n, c)?);
        }
        mus.push(class_mus);
    }
    let sigma = classes.iter().map(|c| Perm::identity(c.count)).collect();
    let w = WeylElement::new(spec.clone(), mus, sigma)?;
    let beta = CharacterParams::new(spec, beta_blocks, alpha.m())?;
    Ok((beta, w))
}

/// Principal k-th root: argument of the result lies in (-π/k, π/k].
fn principal_root(z: Complex64, k: usize) -> Complex64 {
    if k == 1 {
        return z;
    }
    (z.ln() / k as f64).exp()
}

// ---------------------------------------------------------------------------
// Normalizer membership (Lie criterion) and constructive decomposition.
// ---------------------------------------------------------------------------

/// Check that M lies in the linear span of the H_λ block pattern:
/// zero outside the factor diagonal, block-Toeplitz upper-triangular
/// inside each factor. Returns the first offending position.
fn h_pattern_check(m: &Mat<Rat>, spec: &PartitionSpec) -> Result<(), String> {
    let r = spec.r();
    let parts = spec.parts();
    // Off-diagonal factor superblocks must vanish.
    for (a, &pa) in parts.iter().enumerate() {
        for (b, &pb) in parts.iter().enumerate() {
            if a == b {
                continue;
            }
            let sub = m.submatrix(spec.factor_offset(a), spec.factor_offset(b), pa * r, pb * r);
            if !sub.is_zero() {
                return Err(format!("factor block ({a},{b}) is nonzero"));
            }
        }
    }
    // Inside each factor: upper-triangular and Toeplitz in r-blocks.
    for (a, &pa) in parts.iter().enumerate() {
        let off = spec.factor_offset(a);
        let sub = m.submatrix(off, off, pa * r, pa * r);
        for i in 0..pa {
            for j in 0..pa {
                let blk = sub.block(i, j, r);
                if j < i {
                    if !blk.is_zero() {
                        return Err(format!("factor {a}: block ({i},{j}) below diagonal"));
                    }
                } else if blk != sub.block(0, j - i, r) {
                    return Err(format!("factor {a}: block ({i},{j}) breaks Toeplitz"));
                }
            }
        }
    }
    Ok(())
}

/// Conjugate the sparse Lie-basis element e_{ab}⊗Λ^i of factor `k` and
/// return X·E·X⁻¹.
fn conjugate_basis(
    x: &Mat<Rat>,
    x_inv: &Mat<Rat>,
    spec: &PartitionSpec,
    factor: usize,
    shift: usize,
    a: usize,
    b: usize,
) -> Mat<Rat> {
    let r = spec.r();
    let off = spec.factor_offset(factor);
    let nk = spec.parts()[factor];
    let n = x.rows();
    let mut m = Mat::zeros(n, n);
    for j in 0..nk - shift {
        let col = off + j * r + a;
        let row = off + (j + shift) * r + b;
        for u in 0..n {
            let xu = x[(u, col)].clone();
            if xu.is_zero() {
                continue;
            }
            for v in 0..n {
                let add = &xu * &x_inv[(row, v)];
                m[(u, v)] = &m[(u, v)] + add;
            }
        }
    }
    m
}

/// Lie-criterion normalizer test: X·E·X⁻¹ must stay in the H_λ pattern for
/// every basis element E of Lie(H_λ). Exact; sound for the group because
/// H_λ is connected.
pub fn normalizer_test(x: &Mat<Rat>, spec: &PartitionSpec) -> Result<bool, CoreError> {
    let n = spec.big_n();
    if x.rows() != n || x.cols() != n {
        return Err(CoreError::DimensionMismatch(format!("expected {n}x{n}")));
    }
    let x_inv = x.inverse()?;
    let r = spec.r();
    for (factor, &p) in spec.parts().iter().enumerate() {
        for shift in 0..p {
            for a in 0..r {
                for b in 0..r {
                    let m = conjugate_basis(x, &x_inv, spec, factor, shift, a, b);
                    if h_pattern_check(&m, spec).is_err() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Distinct rational Jordan-cell probe: factor f gets leading block
/// (f+1)·1_r and, when the part has order ≥ 2, first shift block 1_r.
fn probe_element(spec: &PartitionSpec) -> HLambdaElement<Rat> {
    let r = spec.r();
    let factors = spec
        .parts()
        .iter()
        .enumerate()
        .map(|(f, &p)| {
            let mut coeffs = vec![Mat::zeros(r, r); p];
            coeffs[0] = Mat::scalar(r, &Rat::from_i64(f as i64 + 1));
            if p >= 2 {
                coeffs[1] = Mat::identity(r);
            }
            Jet::new(r, p, coeffs).expect("well-formed probe")
        })
        .collect();
    HLambdaElement::new(spec.clone(), factors).expect("probe matches spec")
}

/// Split X = embed(h)·W(w) for a normalizer element X, following the
/// constructive reduction: detect the block permutation with a
/// distinct-eigenvalue probe, then per factor recover h₀ from a similarity,
/// strip the first block row, and read the μ coefficients off the second.
pub fn normalizer_decompose(
    x: &Mat<Rat>,
    spec: &PartitionSpec,
) -> Result<(HLambdaElement<Rat>, WeylElement<Rat>), CoreError> {
    let n = spec.big_n();
    if x.rows() != n || x.cols() != n {
        return Err(CoreError::DimensionMismatch(format!("expected {n}x{n}")));
    }
    let r = spec.r();
    let x_inv = x.inverse()?;

    // Step 1: conjugate the probe; the image must stay in the H pattern.
    let probe = probe_element(spec);
    let b = x.mul(&probe.embed())?.mul(&x_inv)?;
    h_pattern_check(&b, spec)
        .map_err(|e| CoreError::NotNormalizer(format!("probe conjugate: {e}")))?;

    // Step 2: read the per-class permutation from the probe eigenvalues.
    let classes = spec.classes();
    let mut sigma = Vec::new();
    for (i, class) in classes.iter().enumerate() {
        let mut source = Vec::new();
        for k in 0..class.count {
            let f = spec.class_factor_index(i, k);
            let off = spec.factor_offset(f);
            let lead = b.submatrix(off, off, r, r);
            let tr = lead.trace()?;
            let eig = tr / Rat::from_i64(r as i64);
            let kk = (0..class.count).find(|&kk| {
                let g = spec.class_factor_index(i, kk);
                eig == Rat::from_i64(g as i64 + 1)
            });
            let Some(kk) = kk else {
                return Err(CoreError::NotNormalizer(format!(
                    "factor {f}: probe eigenvalue {eig} not from this class"
                )));
            };
            source.push(kk);
        }
        let source = Perm::new(source).map_err(|_| {
            CoreError::NotNormalizer(format!("class {i}: probe eigenvalues not permuted"))
        })?;
        sigma.push(source.inverse());
    }

    // Step 3: strip the permutation; the rest must be factor-diagonal.
    let p_full: Mat<Rat> = Mat::block_diag(
        &classes
            .iter()
            .zip(&sigma)
            .map(|(c, s)| perm_block_matrix(s, c.part * r))
            .collect::<Vec<_>>(),
    );
    let xd = x.mul(&p_full.transpose())?; // P_σ⁻¹ = ᵗP_σ
    for a in 0..spec.len() {
        for c in 0..spec.len() {
            if a == c {
                continue;
            }
            let sub = xd.submatrix(
                spec.factor_offset(a),
                spec.factor_offset(c),
                spec.parts()[a] * r,
                spec.parts()[c] * r,
            );
            if !sub.is_zero() {
                return Err(CoreError::NotNormalizer(format!(
                    "after removing the permutation, factor block ({a},{c}) is nonzero"
                )));
            }
        }
    }

    // Step 4: per-factor reduction inside N(J_r(n)).
    let mut h_factors = Vec::new();
    let mut cs: Vec<MuVector<Rat>> = Vec::new();
    for (f, &p) in spec.parts().iter().enumerate() {
        let off = spec.factor_offset(f);
        let xf = xd.submatrix(off, off, p * r, p * r);
        let (h, c) = decompose_jordan_factor(&xf, r, p)
            .map_err(|e| CoreError::NotNormalizer(format!("factor {f}: {e}")))?;
        h_factors.push(h);
        cs.push(c);
    }

    // Step 5: regroup μ vectors by class (slot order follows the factors).
    let mut mus = Vec::new();
    let mut it = cs.into_iter();
    for class in &classes {
        mus.push((0..class.count).map(|_| it.next().unwrap()).collect());
    }

    let h = HLambdaElement::new(spec.clone(), h_factors)?;
    let w = WeylElement::new(spec.clone(), mus, sigma)?;
    Ok((h, w))
}

/// Reduce one factor X ∈ N(GL(pr))(J_r(p)) to X = embed(h)·(μ_{i,j}(c)1_r).
#[allow(clippy::needless_range_loop)]
fn decompose_jordan_factor(
    xf: &Mat<Rat>,
    r: usize,
    p: usize,
) -> Result<(Jet<Rat>, MuVector<Rat>), String> {
    if p == 1 {
        // N(GL(r)) = GL(r): everything is the h part.
        let h = Jet::constant(xf.clone(), 1);
        return Ok((h, MuVector::identity(1)));
    }
    let xf_inv = xf.inverse().map_err(|_| "factor block is singular".to_string())?;

    // Probe with distinct diagonal leading block and identity shift block.
    let a0 = Mat::from_fn(r, r, |i, j| {
        if i == j {
            Rat::from_i64(i as i64 + 1)
        } else {
            Rat::from_i64(0)
        }
    });
    let mut probe_coeffs = vec![Mat::zeros(r, r); p];
    probe_coeffs[0] = a0.clone();
    probe_coeffs[1] = Mat::identity(r);
    let probe = Jet::new(r, p, probe_coeffs).expect("probe");
    let b = xf
        .mul(&probe.embed())
        .and_then(|m| m.mul(&xf_inv))
        .map_err(|e| e.to_string())?;
    let bjet = Jet::extract(&b, r, p).map_err(|_| "probe conjugate left the Jordan group")?;

    // Recover h₀ from B₀ = h₀ A₀ h₀⁻¹ by exact eigenvectors at 1..r.
    let b0 = bjet.coeff(0).clone();
    let mut h0 = Mat::zeros(r, r);
    for e in 0..r {
        let shifted = b0
            .sub(&Mat::scalar(r, &Rat::from_i64(e as i64 + 1)))
            .expect("same shape");
        let ker = shifted.kernel();
        if ker.len() != 1 {
            return Err(format!(
                "probe eigenvalue {} has a {}-dimensional eigenspace",
                e + 1,
                ker.len()
            ));
        }
        for i in 0..r {
            h0[(i, e)] = ker[0][i].clone();
        }
    }
    let h0_inv = h0
        .inverse()
        .map_err(|_| "eigenvector matrix is singular".to_string())?;

    // Y = diag(h₀)⁻¹ X must be block upper triangular with diagonal
    // diagonal blocks.
    let h0_big = Mat::block_diag(&vec![h0_inv.clone(); p]);
    let y = h0_big.mul(xf).map_err(|e| e.to_string())?;
    for i in 0..p {
        for j in 0..i {
            if !y.block(i, j, r).is_zero() {
                return Err(format!("block ({i},{j}) below the diagonal is nonzero"));
            }
        }
        let d = y.block(i, i, r);
        for a in 0..r {
            for b2 in 0..r {
                if a != b2 && !d[(a, b2)].is_zero() {
                    return Err(format!("diagonal block {i} is not a diagonal matrix"));
                }
            }
        }
    }

    // Normalize the (0,0) block to the identity.
    let y00 = y.block(0, 0, r);
    let y00_inv = y00
        .inverse()
        .map_err(|_| "leading diagonal block is singular".to_string())?;
    let xpp = Mat::block_diag(&vec![y00_inv; p]).mul(&y).map_err(|e| e.to_string())?;

    // Strip the first block row with a unipotent left factor
    // u = 1 + Σ u_k⊗Λ^k, chosen so (u·X'')_{0,j} = 0 for j ≥ 1.
    let mut u_coeffs = vec![Mat::zeros(r, r); p];
    u_coeffs[0] = Mat::identity(r);
    for j in 1..p {
        let mut acc = xpp.block(0, j, r);
        for k in 1..j {
            acc = acc
                .add(&u_coeffs[k].mul(&xpp.block(k, j, r)).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
        }
        let djj = xpp.block(j, j, r);
        let djj_inv = djj
            .inverse()
            .map_err(|_| format!("diagonal block {j} is singular"))?;
        u_coeffs[j] = acc.neg().mul(&djj_inv).map_err(|e| e.to_string())?;
    }
    let u = Jet::new(r, p, u_coeffs).expect("unipotent");
    let y_final = u.embed().mul(&xpp).map_err(|e| e.to_string())?;

    // Read c off the second block row and verify the whole μ pattern.
    let mut c = Vec::with_capacity(p - 1);
    for j in 1..p {
        let blk = y_final.block(1, j, r);
        c.push(blk[(0, 0)].clone());
    }
    if c[0].is_zero() {
        return Err("recovered c₁ = 0".into());
    }
    let mu = MuVector::new(p, c).map_err(|e| e.to_string())?;
    let want = inflate(&mu.mu_matrix(), r);
    if y_final != want {
        return Err("reduced matrix does not match the μ pattern".into());
    }

    // X = H·μ(c) with H = diag(h₀)·diag(Y₀₀)·u⁻¹, a Jordan element.
    let h_mat = xf
        .mul(&want.inverse().map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let h = Jet::extract(&h_mat, r, p).map_err(|_| "h part is not a Jordan element")?;
    Ok((h, mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::Stream;
    use crate::scalar::rat;

    fn random_weyl(st: &mut Stream, spec: &PartitionSpec) -> WeylElement<Rat> {
        let classes = spec.classes();
        let mus = classes
            .iter()
            .map(|c| {
                (0..c.count)
                    .map(|_| {
                        let mut v = Vec::new();
                        if c.part >= 2 {
                            v.push(st.rat_nonzero(2));
                            for _ in 2..c.part {
                                v.push(st.rat_small(2));
                            }
                        }
                        MuVector::new(c.part, v).unwrap()
                    })
                    .collect()
            })
            .collect();
        let sigma = classes
            .iter()
            .map(|c| Perm::new(st.perm(c.count)).unwrap())
            .collect();
        WeylElement::new(spec.clone(), mus, sigma).unwrap()
    }

    fn random_h(st: &mut Stream, spec: &PartitionSpec) -> HLambdaElement<Rat> {
        let factors = spec
            .parts()
            .iter()
            .map(|&p| st.unit_jet(spec.r(), p, 2))
            .collect();
        HLambdaElement::new(spec.clone(), factors).unwrap()
    }

    #[test]
    fn identity_maps_to_identity_matrix() {
        let spec = PartitionSpec::new(2, vec![2, 2, 1]).unwrap();
        let w: WeylElement<Rat> = WeylElement::identity(spec);
        assert!(w.matrix().is_identity());
        assert!(w.rho().is_identity());
    }

    // r=1, λ=(3): the matrix of c = (c₁,c₂) is [[1,0,0],[0,c₁,c₂],[0,0,c₁²]].
    #[test]
    fn single_factor_matrix_shape() {
        let spec = PartitionSpec::new(1, vec![3]).unwrap();
        let w = WeylElement::new(
            spec,
            vec![vec![MuVector::new(3, vec![rat(2, 1), rat(5, 1)]).unwrap()]],
            vec![Perm::identity(1)],
        )
        .unwrap();
        let m = w.matrix();
        let want = Mat::from_vec(
            3,
            3,
            [1, 0, 0, 0, 2, 5, 0, 0, 4].iter().map(|&v| rat(v, 1)).collect(),
        )
        .unwrap();
        assert_eq!(m, want);
    }

    #[test]
    fn compose_matches_matrix_product() {
        let mut st = Stream::new(31);
        for spec in [
            PartitionSpec::new(2, vec![2, 2]).unwrap(),
            PartitionSpec::new(1, vec![3, 1, 1]).unwrap(),
            PartitionSpec::new(2, vec![2, 1, 1]).unwrap(),
        ] {
            for _ in 0..6 {
                let a = random_weyl(&mut st, &spec);
                let b = random_weyl(&mut st, &spec);
                let ab = a.compose(&b).unwrap();
                assert_eq!(a.matrix().mul(&b.matrix()).unwrap(), ab.matrix());
                assert_eq!(a.rho().mul(&b.rho()).unwrap(), ab.rho());
                let inv = a.inverse().unwrap();
                assert!(a.matrix().mul(&inv.matrix()).unwrap().is_identity());
            }
        }
    }

    // Pure permutations on λ=(l,…,l) compress to the block permutation
    // (δ_{i,σ(j)}·1_l).
    #[test]
    fn rho_of_pure_permutation() {
        let spec = PartitionSpec::new(3, vec![2, 2, 2]).unwrap();
        let sigma = Perm::new(vec![1, 2, 0]).unwrap();
        let w: WeylElement<Rat> = WeylElement::new(
            spec,
            vec![vec![MuVector::identity(2); 3]],
            vec![sigma.clone()],
        )
        .unwrap();
        let want: Mat<Rat> = perm_block_matrix(&sigma, 2);
        assert_eq!(w.rho(), want);
    }

    #[test]
    fn normalizer_test_basics() {
        let spec = PartitionSpec::new(1, vec![2]).unwrap();
        // Jordan elements normalize.
        let h = Mat::from_vec(2, 2, vec![rat(2, 1), rat(3, 1), rat(0, 1), rat(2, 1)]).unwrap();
        assert!(normalizer_test(&h, &spec).unwrap());
        // Lower-triangular X does not.
        let x = Mat::from_vec(2, 2, vec![rat(1, 1), rat(0, 1), rat(1, 1), rat(1, 1)]).unwrap();
        assert!(!normalizer_test(&x, &spec).unwrap());
    }

    #[test]
    fn weyl_matrices_pass_normalizer_test() {
        let mut st = Stream::new(63);
        for spec in [
            PartitionSpec::new(2, vec![2, 1]).unwrap(),
            PartitionSpec::new(1, vec![3, 3]).unwrap(),
            PartitionSpec::new(2, vec![1, 1, 1]).unwrap(),
        ] {
            for _ in 0..4 {
                let w = random_weyl(&mut st, &spec);
                assert!(normalizer_test(&w.matrix(), &spec).unwrap());
                let h = random_h(&mut st, &spec);
                assert!(normalizer_test(&h.embed(), &spec).unwrap());
                let x = h.embed().mul(&w.matrix()).unwrap();
                assert!(normalizer_test(&x, &spec).unwrap());
            }
        }
    }

    // r=1, n=2, X=[[2,3],[0,10]]: h = (2, 3/5), c = (5).
    #[test]
    fn decompose_hand_example() {
        let spec = PartitionSpec::new(1, vec![2]).unwrap();
        let x = Mat::from_vec(2, 2, vec![rat(2, 1), rat(3, 1), rat(0, 1), rat(10, 1)]).unwrap();
        let (h, w) = normalizer_decompose(&x, &spec).unwrap();
        assert_eq!(h.factor(0).coeff(0)[(0, 0)], rat(2, 1));
        assert_eq!(h.factor(0).coeff(1)[(0, 0)], rat(3, 5));
        assert_eq!(w.mus()[0][0].coeffs(), &[rat(5, 1)]);
        assert_eq!(h.embed().mul(&w.matrix()).unwrap(), x);
    }

    #[test]
    fn decompose_roundtrip_random() {
        let mut st = Stream::new(404);
        let specs = [
            PartitionSpec::new(1, vec![2]).unwrap(),
            PartitionSpec::new(2, vec![2]).unwrap(),
            PartitionSpec::new(1, vec![2, 2]).unwrap(),
            PartitionSpec::new(2, vec![2, 1, 1]).unwrap(),
            PartitionSpec::new(1, vec![1, 1, 1, 1]).unwrap(),
            PartitionSpec::new(3, vec![3, 1]).unwrap(),
        ];
        for spec in &specs {
            for _ in 0..4 {
                let h = random_h(&mut st, spec);
                let w = random_weyl(&mut st, spec);
                let x = h.embed().mul(&w.matrix()).unwrap();
                let (h2, w2) = normalizer_decompose(&x, spec).unwrap();
                assert_eq!(h2, h, "h mismatch for λ={spec}");
                assert_eq!(w2, w, "w mismatch for λ={spec}");
            }
        }
    }

    // λ=(1,…,1): every normalizer element is diag·P_σ and the Weyl part
    // is a pure permutation.
    #[test]
    fn nonconfluent_case_gives_symmetric_group() {
        let spec = PartitionSpec::new(2, vec![1, 1, 1]).unwrap();
        let mut st = Stream::new(505);
        for _ in 0..5 {
            let h = random_h(&mut st, &spec);
            let sigma = Perm::new(st.perm(3)).unwrap();
            let w: WeylElement<Rat> = WeylElement::new(
                spec.clone(),
                vec![vec![MuVector::identity(1); 3]],
                vec![sigma.clone()],
            )
            .unwrap();
            let x = h.embed().mul(&w.matrix()).unwrap();
            let (h2, w2) = normalizer_decompose(&x, &spec).unwrap();
            assert_eq!(h2, h);
            assert_eq!(w2.sigma()[0], sigma);
        }
    }

    #[test]
    fn decompose_rejects_non_normalizer() {
        let spec = PartitionSpec::new(1, vec![2]).unwrap();
        let x = Mat::from_vec(2, 2, vec![rat(1, 1), rat(0, 1), rat(1, 1), rat(1, 1)]).unwrap();
        assert!(matches!(
            normalizer_decompose(&x, &spec),
            Err(CoreError::NotNormalizer(_))
        ));
    }

    // β_i = Σ_j α_j μ_{i,j}(c) for a single factor.
    #[test]
    fn act_on_params_single_factor() {
        let spec = PartitionSpec::new(1, vec![3]).unwrap();
        let alpha = CharacterParams::new(
            spec.clone(),
            vec![vec![
                Complex64::new(-2.0, 0.0),
                Complex64::new(2.0, 0.0),
                Complex64::new(3.0, 0.0),
            ]],
            2,
        )
        .unwrap();
        let c = MuVector::new(3, vec![rat(2, 1), rat(1, 2)]).unwrap();
        let w = WeylElement::new(spec, vec![vec![c.clone()]], vec![Perm::identity(1)]).unwrap();
        let beta = act_on_params_rat(&alpha, &w).unwrap();
        let a = alpha.flat();
        for i in 0..3 {
            let mut want = Complex64::new(0.0, 0.0);
            for (j, aj) in a.iter().enumerate() {
                want += aj * crate::scalar::ToComplex::to_c64(&c.mu_eval(i, j).unwrap());
            }
            assert!((beta.flat()[i] - want).norm() < 1e-14);
        }
    }

    // σ = (0 1) on λ=(1,1,1,1) shuffles α blockwise.
    #[test]
    fn act_on_params_transposition() {
        let spec = PartitionSpec::new(2, vec![1, 1, 1, 1]).unwrap();
        let a = [0.3, -1.7, 0.9, -3.5];
        let alpha = CharacterParams::new(
            spec.clone(),
            a.iter().map(|&x| vec![Complex64::new(x, 0.1)]).collect(),
            4,
        )
        .unwrap();
        let sigma = Perm::transposition(4, 0, 1).unwrap();
        let w: WeylElement<Rat> = WeylElement::new(
            spec,
            vec![vec![MuVector::identity(1); 4]],
            vec![sigma],
        )
        .unwrap();
        let beta = act_on_params_rat(&alpha, &w).unwrap();
        let bf = beta.flat();
        assert_eq!(bf[0], alpha.flat()[1]);
        assert_eq!(bf[1], alpha.flat()[0]);
        assert_eq!(bf[2], alpha.flat()[2]);
        assert_eq!(bf[3], alpha.flat()[3]);
    }

    #[test]
    fn normalize_params_three_block() {
        // λ=(3), r=1, α=(−2,2,3): c₁ = 3^{-1/2}, c₂ = −2/(3√3), β = (−2,0,1).
        let spec = PartitionSpec::new(1, vec![3]).unwrap();
        let alpha = CharacterParams::new(
            spec.clone(),
            vec![vec![
                Complex64::new(-2.0, 0.0),
                Complex64::new(2.0, 0.0),
                Complex64::new(3.0, 0.0),
            ]],
            2,
        )
        .unwrap();
        let (beta, w) = normalize_params(&alpha).unwrap();
        let c = &w.mus()[0][0];
        let s3 = 3f64.sqrt();
        assert!((c.coeffs()[0] - Complex64::new(1.0 / s3, 0.0)).norm() < 1e-12);
        assert!((c.coeffs()[1] - Complex64::new(-2.0 / (3.0 * s3), 0.0)).norm() < 1e-12);
        assert_eq!(beta.flat()[1], Complex64::new(0.0, 0.0));
        assert_eq!(beta.flat()[2], Complex64::new(1.0, 0.0));
        // act_on_params reproduces β.
        let got = act_on_params(&alpha, &w).unwrap();
        for (x, y) in got.flat().iter().zip(beta.flat()) {
            assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn normalize_params_errors_on_zero_top() {
        let spec = PartitionSpec::new(1, vec![2]).unwrap();
        let alpha = CharacterParams::new(
            spec,
            vec![vec![Complex64::new(-2.0, 0.0), Complex64::new(0.0, 0.0)]],
            2,
        )
        .unwrap();
        assert!(normalize_params(&alpha).is_err());
    }

    #[test]
    fn length_one_blocks_untouched() {
        let spec = PartitionSpec::new(1, vec![1, 1]).unwrap();
        let alpha = CharacterParams::new(
            spec,
            vec![vec![Complex64::new(-0.4, 0.0)], vec![Complex64::new(-1.6, 0.0)]],
            2,
        )
        .unwrap();
        let (beta, w) = normalize_params(&alpha).unwrap();
        assert_eq!(beta, alpha);
        assert!(w.matrix().is_identity());
    }
}
