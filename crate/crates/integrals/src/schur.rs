//! Partitions, hook products, Schur polynomials (Jacobi-Trudi) and the
//! generalized Pochhammer symbol — the combinatorial layer under the
//! matrix-argument hypergeometric series.

use num_complex::Complex64;

/// Integer partition κ = (κ₁ ≥ κ₂ ≥ …), trailing zeros dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kappa(pub Vec<usize>);

impl Kappa {
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Kappa {
        let max = self.0.first().copied().unwrap_or(0);
        Kappa(
            (1..=max)
                .map(|j| self.0.iter().filter(|&&k| k >= j).count())
                .collect(),
        )
    }

    /// Product of hook lengths H(κ).
    pub fn hook_product(&self) -> f64 {
        let conj = self.conjugate();
        let mut h = 1.0f64;
        for (i, &ki) in self.0.iter().enumerate() {
            for j in 0..ki {
                let arm = ki - 1 - j;
                let leg = conj.0[j] - 1 - i;
                h *= (arm + leg + 1) as f64;
            }
        }
        h
    }

    /// Generalized Pochhammer [a]_κ = ∏_i (a - i + 1)_{κ_i}.
    pub fn pochhammer(&self, a: Complex64) -> Complex64 {
        let mut p = Complex64::new(1.0, 0.0);
        for (i, &ki) in self.0.iter().enumerate() {
            let base = a - Complex64::new(i as f64, 0.0);
            for m in 0..ki {
                p *= base + Complex64::new(m as f64, 0.0);
            }
        }
        p
    }
}

/// All partitions of `weight` with at most `max_len` parts.
pub fn partitions_of(weight: usize, max_len: usize) -> Vec<Kappa> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        remaining: usize,
        max_part: usize,
        slots: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Kappa>,
    ) {
        if remaining == 0 {
            out.push(Kappa(current.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, slots - 1, current, out);
            current.pop();
        }
    }
    rec(weight, weight.max(1), max_len, &mut current, &mut out);
    out
}

/// Complete homogeneous symmetric polynomials h_0..h_max of the given
/// (real) eigenvalues, via the inverse of the elementary generating
/// function.
pub fn homogeneous_syms(eigs: &[f64], max: usize) -> Vec<f64> {
    let r = eigs.len();
    // e(t) = ∏ (1 - x_i t), coefficients e[0..=r] with signs included.
    let mut e = vec![0.0f64; r + 1];
    e[0] = 1.0;
    for &x in eigs {
        for j in (1..=r).rev() {
            e[j] -= x * e[j - 1];
        }
    }
    // H(t)·E(t) = 1 → h_k = -Σ_{j=1..min(k,r)} e_j h_{k-j}.
    let mut h = vec![0.0f64; max + 1];
    h[0] = 1.0;
    for k in 1..=max {
        let mut s = 0.0;
        for j in 1..=k.min(r) {
            s += e[j] * h[k - j];
        }
        h[k] = -s;
    }
    h
}

/// Schur polynomial s_κ at the eigenvalues, by the Jacobi-Trudi
/// determinant det(h_{κ_i - i + j}).
pub fn schur(kappa: &Kappa, h: &[f64]) -> f64 {
    let l = kappa.len();
    if l == 0 {
        return 1.0;
    }
    let get = |k: isize| -> f64 {
        if k < 0 {
            0.0
        } else {
            h.get(k as usize).copied().unwrap_or(0.0)
        }
    };
    match l {
        1 => get(kappa.0[0] as isize),
        2 => {
            let a = |i: usize, j: usize| get(kappa.0[i] as isize - i as isize + j as isize);
            a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)
        }
        3 => {
            let a = |i: usize, j: usize| get(kappa.0[i] as isize - i as isize + j as isize);
            a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
                - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
                + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
        }
        _ => {
            // General Laplace expansion; partitions here never exceed the
            // matrix size, which is capped at 3 in practice.
            let n = l;
            let mut m = vec![0.0f64; n * n];
            for i in 0..n {
                for j in 0..n {
                    m[i * n + j] = get(kappa.0[i] as isize - i as isize + j as isize);
                }
            }
            det_dense(&mut m, n)
        }
    }
}

fn det_dense(m: &mut [f64], n: usize) -> f64 {
    let mut det = 1.0;
    for k in 0..n {
        let (p, mag) = (k..n)
            .map(|i| (i, m[i * n + k].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if mag == 0.0 {
            return 0.0;
        }
        if p != k {
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        det *= m[k * n + k];
        for i in k + 1..n {
            let f = m[i * n + k] / m[k * n + k];
            for j in k..n {
                m[i * n + j] -= f * m[k * n + j];
            }
        }
    }
    det
}
