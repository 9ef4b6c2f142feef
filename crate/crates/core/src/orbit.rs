//! Z_λ membership, the two-sided normal-form reduction for partitions of
//! 3 and 4, and the finite Weyl action on the free block of the normal
//! form (the transposition table and its compositions).

use crate::hlambda::HLambdaElement;
use crate::jet::Jet;
use crate::matrix::Mat;
use crate::partition::PartitionSpec;
use crate::perm::{perm_block_matrix, Perm};
use crate::scalar::{rat_to_f64, CoreError, Rat, Ring};
use num_complex::Complex64;

/// Variable matrix z ∈ Mat(2r, nr) split per partition block; m = 2r rows
/// are implied throughout.
#[derive(Debug, Clone, PartialEq)]
pub struct ZMatrix {
    spec: PartitionSpec,
    data: Mat<Rat>,
}

/// A weight-2 subdiagram of λ: two distinct parts, or twice one part with
/// n_i ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubdiagramMu {
    Pair(usize, usize),
    Double(usize),
}

impl std::fmt::Display for SubdiagramMu {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SubdiagramMu::Pair(i, j) => write!(f, "(z0^({i}), z0^({j}))"),
            SubdiagramMu::Double(i) => write!(f, "(z0^({i}), z1^({i}))"),
        }
    }
}

/// Orbit witness: the certified relation is x = g⁻¹·z·h.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitWitness {
    pub g: Mat<Rat>,
    pub h: HLambdaElement<Rat>,
}

impl ZMatrix {
    pub fn new(spec: PartitionSpec, data: Mat<Rat>) -> Result<Self, CoreError> {
        if data.rows() != 2 * spec.r() || data.cols() != spec.big_n() {
            return Err(CoreError::DimensionMismatch(format!(
                "z must be {}x{}",
                2 * spec.r(),
                spec.big_n()
            )));
        }
        Ok(Self { spec, data })
    }

    pub fn spec(&self) -> &PartitionSpec {
        &self.spec
    }

    pub fn data(&self) -> &Mat<Rat> {
        &self.data
    }

    /// Column block z_k^{(j)} ∈ Mat(2r, r).
    pub fn block(&self, factor: usize, k: usize) -> Mat<Rat> {
        let r = self.spec.r();
        let off = self.spec.factor_offset(factor) + k * r;
        self.data.submatrix(0, off, 2 * r, r)
    }

    /// All weight-2 subdiagrams of λ.
    pub fn subdiagrams(spec: &PartitionSpec) -> Vec<SubdiagramMu> {
        let mut out = Vec::new();
        let l = spec.len();
        for i in 0..l {
            if spec.parts()[i] >= 2 {
                out.push(SubdiagramMu::Double(i));
            }
            for j in i + 1..l {
                out.push(SubdiagramMu::Pair(i, j));
            }
        }
        out
    }

    /// Exact membership test: every weight-2 subdiagram must give an
    /// invertible 2r×2r matrix. Returns the failing subdiagrams.
    pub fn membership(&self) -> (bool, Vec<SubdiagramMu>) {
        let mut failing = Vec::new();
        for mu in Self::subdiagrams(&self.spec) {
            let m = match mu {
                SubdiagramMu::Pair(i, j) => {
                    Mat::hstack(&[self.block(i, 0), self.block(j, 0)]).expect("2r rows")
                }
                SubdiagramMu::Double(i) => {
                    Mat::hstack(&[self.block(i, 0), self.block(i, 1)]).expect("2r rows")
                }
            };
            if m.det().expect("square").is_zero() {
                failing.push(mu);
            }
        }
        (failing.is_empty(), failing)
    }
}

// ---------------------------------------------------------------------------
// Normal-form tables for n = 3 and n = 4.
// ---------------------------------------------------------------------------

/// Build the tabulated normal form for the given partition. Partitions of
/// 3 have no free block (pass the identity); partitions of 4 carry one
/// free block x ∈ Mat(r).
pub fn normal_form_table(spec: &PartitionSpec, x: &Mat<Rat>) -> Result<ZMatrix, CoreError> {
    let r = spec.r();
    if x.rows() != r || x.cols() != r {
        return Err(CoreError::DimensionMismatch("x must be r×r".into()));
    }
    let id = Mat::identity(r);
    let zero = Mat::zeros(r, r);
    let cols: Vec<(Mat<Rat>, Mat<Rat>)> = match spec.parts() {
        [1, 1, 1] => vec![
            (id.clone(), zero.clone()),
            (zero.clone(), id.clone()),
            (id.clone(), id.neg()),
        ],
        [2, 1] => vec![
            (id.clone(), zero.clone()),
            (zero.clone(), id.clone()),
            (zero.clone(), id.clone()),
        ],
        [3] => vec![
            (id.clone(), zero.clone()),
            (zero.clone(), id.clone()),
            (zero.clone(), zero.clone()),
        ],
        [1, 1, 1, 1] => vec![
            (id.clone(), zero.clone()),
            (zero.clone(), id.clone()),
            (id.clone(), id.neg()),
            (id.clone(), x.neg()),
        ],
        [2, 1, 1] => vec![
            (id.clone(), zero.clone()),
            (zero.clone(), x.clone()),
            (zero.clone(), id.clone()),
            (id.clone(), id.neg()),
        ],
        [2, 2] => vec![
            (id.clone(), zero.clone()),
            (zero.clone(), x.clone()),
            (zero.clone(), id.clone()),
            (id.neg(), zero.clone()),
        ],
        [3, 1] => vec![
            (id.clone(), zero.clone()),
            (zero.clone(), id.clone()),
            (zero.clone(), x.clone()),
            (zero.clone(), id.clone()),
        ],
        [4] => vec![
            (id.clone(), zero.clone()),
            (zero.clone(), id.clone()),
            (zero.clone(), zero.clone()),
            (zero.clone(), x.neg()),
        ],
        _ => {
            return Err(CoreError::UnsupportedPartition(format!(
                "normal form table covers partitions of 3 and 4, not {spec}"
            )))
        }
    };
    let stacked: Vec<Mat<Rat>> = cols
        .into_iter()
        .map(|(top, bot)| {
            let mut m = Mat::zeros(2 * r, r);
            m.set_block(0, 0, &top);
            m.set_block(r, 0, &bot);
            m
        })
        .collect();
    ZMatrix::new(spec.clone(), Mat::hstack(&stacked)?)
}

/// Where the free block sits in the reduced matrix: (factor, k, negated).
fn free_block_position(parts: &[usize]) -> Option<(usize, usize, bool)> {
    match parts {
        [1, 1, 1, 1] => Some((3, 0, true)),
        [2, 1, 1] => Some((0, 1, false)),
        [2, 2] => Some((0, 1, false)),
        [3, 1] => Some((0, 2, false)),
        [4] => Some((0, 3, true)),
        _ => None,
    }
}

/// Extract the free block x from a matrix in table shape.
pub fn free_block(z: &ZMatrix) -> Result<Mat<Rat>, CoreError> {
    let r = z.spec().r();
    match free_block_position(z.spec().parts()) {
        Some((factor, k, neg)) => {
            let b = z.block(factor, k).submatrix(r, 0, r, r);
            Ok(if neg { b.neg() } else { b })
        }
        None => Ok(Mat::identity(r)),
    }
}

// ---------------------------------------------------------------------------
// Reduction machinery.
// ---------------------------------------------------------------------------

struct Reducer {
    spec: PartitionSpec,
    z: Mat<Rat>,
    g: Mat<Rat>,
    h: HLambdaElement<Rat>,
}

impl Reducer {
    fn new(z: &ZMatrix) -> Self {
        Self {
            spec: z.spec.clone(),
            z: z.data.clone(),
            g: Mat::identity(2 * z.spec.r()),
            h: HLambdaElement::identity(z.spec.clone()),
        }
    }

    fn r(&self) -> usize {
        self.spec.r()
    }

    fn col(&self, factor: usize, k: usize) -> Mat<Rat> {
        let r = self.r();
        let off = self.spec.factor_offset(factor) + k * r;
        self.z.submatrix(0, off, 2 * r, r)
    }

    fn top(&self, factor: usize, k: usize) -> Mat<Rat> {
        let r = self.r();
        self.col(factor, k).submatrix(0, 0, r, r)
    }

    fn bot(&self, factor: usize, k: usize) -> Mat<Rat> {
        let r = self.r();
        self.col(factor, k).submatrix(r, 0, r, r)
    }

    /// z ← g_step⁻¹·z, accumulating g ← g·g_step.
    fn left(&mut self, g_step: &Mat<Rat>, what: &str) -> Result<(), CoreError> {
        let inv = g_step
            .inverse()
            .map_err(|_| CoreError::Singular(format!("pivot inversion failed: {what}")))?;
        self.z = inv.mul(&self.z)?;
        self.g = self.g.mul(g_step)?;
        Ok(())
    }

    /// Right-multiply one Jordan factor: z^{(f)}_j ← Σ_{i≤j} z^{(f)}_i q_{j-i}.
    #[allow(clippy::needless_range_loop)]
    fn right(&mut self, factor: usize, q: Jet<Rat>) -> Result<(), CoreError> {
        let r = self.r();
        let p = self.spec.parts()[factor];
        let old: Vec<Mat<Rat>> = (0..p).map(|k| self.col(factor, k)).collect();
        for j in 0..p {
            let mut acc = Mat::zeros(2 * r, r);
            for i in 0..=j {
                acc = acc.add(&old[i].mul(q.coeff(j - i))?)?;
            }
            let off = self.spec.factor_offset(factor) + j * r;
            self.z.set_block(0, off, &acc);
        }
        let mut factors: Vec<Jet<Rat>> = self.h.factors().to_vec();
        factors[factor] = factors[factor].mul(&q)?;
        self.h = HLambdaElement::new(self.spec.clone(), factors)?;
        Ok(())
    }

    fn right_const(&mut self, factor: usize, m: Mat<Rat>) -> Result<(), CoreError> {
        let p = self.spec.parts()[factor];
        self.right(factor, Jet::constant(m, p))
    }

    /// Left-multiply by diag(p_block, q_block).
    fn left_diag(&mut self, pb: &Mat<Rat>, qb: &Mat<Rat>, what: &str) -> Result<(), CoreError> {
        let g = Mat::block_diag(&[pb.clone(), qb.clone()]);
        self.left(&g, what)
    }

    /// Left-multiply by [[1, s],[0, 1]].
    fn left_shear(&mut self, s: &Mat<Rat>) -> Result<(), CoreError> {
        let r = self.r();
        let mut g = Mat::identity(2 * r);
        g.set_block(0, r, s);
        self.left(&g, "upper shear")
    }

    fn inv(&self, m: &Mat<Rat>, what: &str) -> Result<Mat<Rat>, CoreError> {
        m.inverse()
            .map_err(|_| CoreError::Singular(format!("pivot inversion failed: {what}")))
    }

    fn finish(self) -> (ZMatrix, OrbitWitness) {
        (
            ZMatrix {
                spec: self.spec,
                data: self.z,
            },
            OrbitWitness {
                g: self.g,
                h: self.h,
            },
        )
    }
}

/// Reduce z ∈ Z_λ (n ∈ {3,4}) to the tabulated normal form by explicit
/// block Gaussian steps; returns the form and the witness with
/// x = g⁻¹·z·h exact.
pub fn normal_form(z: &ZMatrix) -> Result<(ZMatrix, OrbitWitness), CoreError> {
    let (ok, failing) = z.membership();
    if !ok {
        let list: Vec<String> = failing.iter().map(|f| f.to_string()).collect();
        return Err(CoreError::Membership(format!(
            "z is outside Z_λ: singular {}",
            list.join(", ")
        )));
    }
    let spec = z.spec().clone();
    let r = spec.r();
    let id = Mat::identity(r);
    let mut red = Reducer::new(z);

    match spec.parts() {
        [1, 1, 1] => {
            let g1 = Mat::hstack(&[red.col(0, 0), red.col(1, 0)])?;
            red.left(&g1, "det(z0^(0), z0^(1))")?;
            let a = red.top(2, 0);
            let b = red.bot(2, 0);
            let a_inv = red.inv(&a, "top block of z^(2)")?;
            red.right_const(2, a_inv.clone())?;
            let q = b.mul(&a_inv)?.neg();
            red.left_diag(&id, &q, "lower rescale")?;
            red.right_const(1, q.clone())?;
        }
        [2, 1] => {
            let g1 = Mat::hstack(&[red.col(0, 0), red.col(0, 1)])?;
            red.left(&g1, "det(z0^(0), z1^(0))")?;
            let a = red.top(1, 0);
            let b = red.bot(1, 0);
            let b_inv = red.inv(&b, "bottom block of z^(1)")?;
            red.left_shear(&a.mul(&b_inv)?)?;
            // Restore the first factor pair with a Jordan jet (1, a·b⁻¹).
            let q = Jet::new(r, 2, vec![id.clone(), a.mul(&b_inv)?])?;
            red.right(0, q)?;
            red.right_const(1, b_inv)?;
        }
        [3] => {
            let g1 = Mat::hstack(&[red.col(0, 0), red.col(0, 1)])?;
            red.left(&g1, "det(z0, z1)")?;
            let a = red.top(0, 2);
            let b = red.bot(0, 2);
            red.left_shear(&b.neg())?;
            // After the shear the second column is (b, 1); the Jordan jet
            // (1, -b, -a) clears both remaining columns.
            let q = Jet::new(r, 3, vec![id.clone(), b.neg(), a.neg()])?;
            red.right(0, q)?;
        }
        [1, 1, 1, 1] => {
            let g1 = Mat::hstack(&[red.col(0, 0), red.col(1, 0)])?;
            red.left(&g1, "det(z^(0), z^(1))")?;
            let a = red.top(2, 0);
            let b = red.bot(2, 0);
            let a_inv = red.inv(&a, "top block of z^(2)")?;
            red.right_const(2, a_inv.clone())?;
            let q = b.mul(&a_inv)?.neg();
            red.left_diag(&id, &q, "lower rescale")?;
            red.right_const(1, q.clone())?;
            let c = red.top(3, 0);
            red.right_const(3, red.inv(&c, "top block of z^(3)")?)?;
        }
        [2, 1, 1] => {
            let g1 = Mat::hstack(&[red.col(0, 0), red.col(1, 0)])?;
            red.left(&g1, "det(z0^(0), z^(1))")?;
            let a = red.top(0, 1);
            let q0 = Jet::new(r, 2, vec![id.clone(), a.neg()])?;
            red.right(0, q0)?;
            let c = red.top(2, 0);
            let d = red.bot(2, 0);
            let c_inv = red.inv(&c, "top block of z^(2)")?;
            red.right_const(2, c_inv.clone())?;
            let q = d.mul(&c_inv)?.neg();
            red.left_diag(&id, &q, "lower rescale")?;
            red.right_const(1, q.clone())?;
        }
        [2, 2] => {
            let g1 = Mat::hstack(&[red.col(0, 0), red.col(1, 0)])?;
            red.left(&g1, "det(z0^(0), z0^(1))")?;
            let a = red.top(0, 1);
            red.right(0, Jet::new(r, 2, vec![id.clone(), a.neg()])?)?;
            let c = red.top(1, 1);
            let d = red.bot(1, 1);
            let k0 = red.inv(&c, "top block of z1^(1)")?.neg();
            let k1 = d.mul(&k0)?.neg();
            red.right(1, Jet::new(r, 2, vec![k0.clone(), k1])?)?;
            red.left_diag(&id, &k0, "lower rescale")?;
        }
        [3, 1] => {
            let g1 = Mat::hstack(&[red.col(0, 0), red.col(0, 1)])?;
            red.left(&g1, "det(z0^(0), z1^(0))")?;
            let c = red.top(1, 0);
            let d = red.bot(1, 0);
            let d_inv = red.inv(&d, "bottom block of z^(1)")?;
            let s = c.mul(&d_inv)?;
            red.left_shear(&s)?;
            // After the shear the third column is (a', b); the jet
            // (1, s, s² - a') zeroes its top and leaves the free bottom.
            let a_sheared = red.top(0, 2);
            let q2 = s.mul(&s)?.sub(&a_sheared)?;
            let q = Jet::new(r, 3, vec![id.clone(), s.clone(), q2])?;
            red.right(0, q)?;
            red.right_const(1, d_inv)?;
        }
        [4] => {
            let g1 = Mat::hstack(&[red.col(0, 0), red.col(0, 1)])?;
            red.left(&g1, "det(z0, z1)")?;
            let a = red.top(0, 2);
            let b = red.bot(0, 2);
            let c = red.top(0, 3);
            let d = red.bot(0, 3);
            red.left_shear(&b.neg())?;
            // q₁ = -b, q₂ = -a, q₃ = ba + ab + b³ - c - bd (order matters).
            let q3 = b
                .mul(&a)?
                .add(&a.mul(&b)?)?
                .add(&b.mul(&b)?.mul(&b)?)?
                .sub(&c)?
                .sub(&b.mul(&d)?)?;
            let q = Jet::new(r, 4, vec![id.clone(), b.neg(), a.neg(), q3])?;
            red.right(0, q)?;
        }
        _ => {
            return Err(CoreError::UnsupportedPartition(format!(
                "normal form reduction covers partitions of 3 and 4, not {spec}"
            )))
        }
    }

    let (out, witness) = red.finish();
    // The reduced matrix must match the table bit-exactly.
    let x = free_block(&out)?;
    let want = normal_form_table(&spec, &x)?;
    if out != want {
        return Err(CoreError::Invalid(
            "reduction finished outside the tabulated shape".into(),
        ));
    }
    Ok((out, witness))
}

/// Validate a witness: g⁻¹·z·h = x exactly.
pub fn witness_check(z: &ZMatrix, x: &ZMatrix, w: &OrbitWitness) -> Result<bool, CoreError> {
    let lhs = w.g.inverse()?.mul(&z.data)?.mul(&w.h.embed())?;
    Ok(lhs == x.data)
}

// ---------------------------------------------------------------------------
// The finite Weyl action on the free block for λ = (1,1,1,1).
// ---------------------------------------------------------------------------

/// Result of letting a permutation act on the Gauss-family normal form.
#[derive(Debug, Clone)]
pub struct SigmaAction {
    /// The transformed free block.
    pub x_new: Mat<Rat>,
    /// Parameter shuffle: entry k of the new α is α_{perm[k]}.
    pub alpha_perm: Vec<usize>,
    /// Signed Jacobian of the induced affine map on Hermitian matrices,
    /// when the witness is affine (block upper-triangular g); the
    /// orientation of genuinely fractional maps is not modeled.
    pub sign: Option<f64>,
    /// Witness for x̄(x)·P_σ → x̄(x_new).
    pub witness: OrbitWitness,
}

/// Act by P_σ on the λ=(1,1,1,1) normal form with free block x and reduce
/// back to table shape. The free-block maps reproduce the transposition
/// table: (0,1) ↦ x⁻¹, (0,2) ↦ 1-x, (0,3) ↦ x(x-1)⁻¹ and so on, with the
/// Klein four-group acting trivially.
pub fn sigma_action_x(sigma: &Perm, x: &Mat<Rat>) -> Result<SigmaAction, CoreError> {
    if sigma.n() != 4 {
        return Err(CoreError::InvalidPermutation(
            "the transposition table lives on S₄".into(),
        ));
    }
    let r = x.rows();
    let spec = PartitionSpec::new(r, vec![1, 1, 1, 1])?;
    let base = normal_form_table(&spec, x)?;
    let p: Mat<Rat> = perm_block_matrix(sigma, r);
    let moved = ZMatrix::new(spec.clone(), base.data.mul(&p)?)?;
    let (nf, witness) = normal_form(&moved)?;
    let x_new = free_block(&nf)?;
    let alpha_perm = (0..4).map(|k| sigma.apply(k)).collect();
    let sign = affine_jacobian_sign(&witness.g, r);
    Ok(SigmaAction {
        x_new,
        alpha_perm,
        sign,
        witness,
    })
}

/// For block upper-triangular g = [[A,B],[0,D]] the induced chart map
/// u ↦ A⁻¹(B + uD) is affine; return the sign of its Jacobian on the real
/// vector space of Hermitian matrices, computed numerically.
fn affine_jacobian_sign(g: &Mat<Rat>, r: usize) -> Option<f64> {
    let c_block = g.submatrix(r, 0, r, r);
    if !c_block.is_zero() {
        return None;
    }
    let a = g.submatrix(0, 0, r, r).map(|e| Complex64::new(rat_to_f64(e), 0.0));
    let d = g.submatrix(r, r, r, r).map(|e| Complex64::new(rat_to_f64(e), 0.0));
    let a_inv = a.inverse().ok()?;
    // Real basis of Herm(r): E_kk, E_kl + E_lk, i(E_kl - E_lk).
    let mut basis: Vec<Mat<Complex64>> = Vec::new();
    for k in 0..r {
        let mut m = Mat::zeros(r, r);
        m[(k, k)] = Complex64::new(1.0, 0.0);
        basis.push(m);
    }
    for k in 0..r {
        for l in k + 1..r {
            let mut m1 = Mat::zeros(r, r);
            m1[(k, l)] = Complex64::new(1.0, 0.0);
            m1[(l, k)] = Complex64::new(1.0, 0.0);
            basis.push(m1);
            let mut m2 = Mat::zeros(r, r);
            m2[(k, l)] = Complex64::new(0.0, 1.0);
            m2[(l, k)] = Complex64::new(0.0, -1.0);
            basis.push(m2);
        }
    }
    let dim = r * r;
    let mut jac = vec![0.0f64; dim * dim];
    for (col, e) in basis.iter().enumerate() {
        let img = a_inv.mul(&e.mul(&d).ok()?).ok()?;
        // The image must stay Hermitian for the sign to mean anything.
        for i in 0..r {
            for j in 0..r {
                if (img[(i, j)] - img[(j, i)].conj()).norm() > 1e-9 {
                    return None;
                }
            }
        }
        let mut row = 0;
        for k in 0..r {
            jac[row * dim + col] = img[(k, k)].re;
            row += 1;
        }
        for k in 0..r {
            for l in k + 1..r {
                jac[row * dim + col] = img[(k, l)].re;
                row += 1;
                jac[row * dim + col] = img[(k, l)].im;
                row += 1;
            }
        }
    }
    // Sign of det via partial-pivot elimination.
    let mut sign = 1.0f64;
    for k in 0..dim {
        let (p, mag) = (k..dim)
            .map(|i| (i, jac[i * dim + k].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if mag < 1e-12 {
            return None;
        }
        if p != k {
            for j in 0..dim {
                jac.swap(k * dim + j, p * dim + j);
            }
            sign = -sign;
        }
        if jac[k * dim + k] < 0.0 {
            sign = -sign;
        }
        for i in k + 1..dim {
            let f = jac[i * dim + k] / jac[k * dim + k];
            for j in k..dim {
                jac[i * dim + j] -= f * jac[k * dim + j];
            }
        }
    }
    Some(sign)
}

// ---------------------------------------------------------------------------
// The Kummer flip witness for λ = (2,1,1).
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct KummerWitness {
    pub x_new: Mat<Rat>,
    pub witness: OrbitWitness,
    /// Tr(x): the logged factor carried out of the character when the
    /// unipotent shift h₁ = -x is moved across.
    pub chi_factor: Rat,
}

/// The explicit reduction of x̄·P_{(2,3)} for λ = (2,1,1): the free block
/// flips sign and the character contributes etr(x).
pub fn kummer_sigma_witness(x: &Mat<Rat>) -> Result<KummerWitness, CoreError> {
    let r = x.rows();
    if x.cols() != r {
        return Err(CoreError::DimensionMismatch("x must be square".into()));
    }
    let spec = PartitionSpec::new(r, vec![2, 1, 1])?;
    let id = Mat::identity(r);

    // g = [[1, 1],[0, -1]] and h carries the single shift h₁ = -x.
    let mut g = Mat::zeros(2 * r, 2 * r);
    g.set_block(0, 0, &id);
    g.set_block(0, r, &id);
    g.set_block(r, r, &id.neg());
    let h = HLambdaElement::new(
        spec.clone(),
        vec![
            Jet::new(r, 2, vec![id.clone(), x.neg()])?,
            Jet::identity(r, 1),
            Jet::identity(r, 1),
        ],
    )?;

    let base = normal_form_table(&spec, x)?;
    let sigma = Perm::transposition(4, 2, 3)?;
    let p: Mat<Rat> = perm_block_matrix(&sigma, r);
    let moved = base.data.mul(&p)?;
    let reduced = g.inverse()?.mul(&moved)?.mul(&h.embed())?;
    let want = normal_form_table(&spec, &x.neg())?;
    if reduced != want.data {
        return Err(CoreError::Invalid(
            "Kummer witness failed to reproduce the flipped normal form".into(),
        ));
    }
    Ok(KummerWitness {
        x_new: x.neg(),
        witness: OrbitWitness { g, h },
        chi_factor: x.trace()?,
    })
}
