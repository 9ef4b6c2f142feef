//! Log-characters of H̃_λ: determinant powers on the leading blocks plus
//! trace coefficients of the jet logarithm on the unipotent parts.
//!
//! The θ_k coefficients are always taken from the jet logarithm; the short
//! closed forms (θ₂ = h₂ - ½h₁² and so on) appear only as test vectors.

use crate::hlambda::HLambdaElement;
use crate::jet::{Jet, MatInverse};
use crate::matrix::Mat;
use crate::scalar::{CoreError, Ring, ToComplex};
use crate::CharacterParams;
use num_complex::Complex64;

/// θ₁(h), …, θ_{p-1}(h): the w-coefficients of log h for unipotent h.
pub fn theta_coeffs<T: Ring>(h: &Jet<T>) -> Result<Vec<Mat<T>>, CoreError> {
    let lg = h.log()?;
    Ok(lg.coeffs()[1..].to_vec())
}

/// Unipotent part h̲ of a unit jet, h = h₀·h̲.
pub fn underline<T: Ring>(h: &Jet<T>) -> Result<Jet<T>, CoreError>
where
    Mat<T>: MatInverse<T>,
{
    h.underline()
}

/// Tr θ_i(h̲) for i = 1..p-1, exact over the scalar ring of the jet.
pub fn tr_theta<T: Ring>(h: &Jet<T>) -> Result<Vec<T>, CoreError>
where
    Mat<T>: MatInverse<T>,
{
    let u = h.underline()?;
    theta_coeffs(&u)?.iter().map(|m| m.trace()).collect()
}

/// Value of log χ_λ(h; α) with the principal branch for every det-power.
#[derive(Debug, Clone, PartialEq)]
pub struct LogCharacterValue {
    pub value: Complex64,
    /// Winding offset applied to each det-log term; always zero under the
    /// principal-branch policy, recorded so that a different policy stays
    /// representable.
    pub branch_note: Vec<i64>,
}

/// log χ_λ(h; α) = Σ_k [ α₀^{(k)} log det h₀^{(k)} + Σ_i α_i^{(k)} Tr θ_i(h̲^{(k)}) ].
pub fn log_character<T: Ring + ToComplex>(
    h: &HLambdaElement<T>,
    params: &CharacterParams,
) -> Result<LogCharacterValue, CoreError>
where
    Mat<T>: MatInverse<T>,
{
    if h.spec() != params.spec() {
        return Err(CoreError::SpecMismatch(
            "character parameters belong to a different λ".into(),
        ));
    }
    let mut value = Complex64::new(0.0, 0.0);
    let mut branch_note = Vec::with_capacity(h.factors().len());
    for (k, factor) in h.factors().iter().enumerate() {
        let alpha = &params.alpha()[k];
        let det0 = factor
            .coeff(0)
            .map(|e| e.to_c64())
            .det()
            .map_err(|_| CoreError::Singular(format!("factor {k} has singular h₀")))?;
        if det0.norm() == 0.0 {
            return Err(CoreError::Singular(format!("factor {k} has singular h₀")));
        }
        value += alpha[0] * det0.ln();
        branch_note.push(0);
        if factor.p() > 1 {
            let traces = tr_theta(factor)?;
            for (i, t) in traces.iter().enumerate() {
                value += alpha[i + 1] * t.to_c64();
            }
        }
    }
    Ok(LogCharacterValue { value, branch_note })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::PartitionSpec;
    use crate::sampler::Stream;
    use crate::scalar::{rat, Rat};

    fn theta_of(h: &Jet<Rat>) -> Vec<Mat<Rat>> {
        theta_coeffs(h).unwrap()
    }

    // The displayed closed forms for θ₁..θ₄ against the jet-log route.
    #[test]
    fn theta_closed_forms() {
        let mut st = Stream::new(21);
        for _ in 0..10 {
            let r = 1 + st.below(3) as usize;
            let h = st.unipotent_jet(r, 5, 2);
            let h1 = h.coeff(1).clone();
            let h2 = h.coeff(2).clone();
            let h3 = h.coeff(3).clone();
            let h4 = h.coeff(4).clone();
            let th = theta_of(&h);
            assert_eq!(th[0], h1);

            let half = rat(1, 2);
            let third = rat(1, 3);
            let quarter = rat(1, 4);
            let h1h1 = h1.mul(&h1).unwrap();
            let want2 = h2.sub(&h1h1.scale(&half)).unwrap();
            assert_eq!(th[1], want2);

            let sym12 = h1.mul(&h2).unwrap().add(&h2.mul(&h1).unwrap()).unwrap();
            let h1c = h1h1.mul(&h1).unwrap();
            let want3 = h3
                .sub(&sym12.scale(&half))
                .unwrap()
                .add(&h1c.scale(&third))
                .unwrap();
            assert_eq!(th[2], want3);

            let sym13 = h1
                .mul(&h3)
                .unwrap()
                .add(&h2.mul(&h2).unwrap())
                .unwrap()
                .add(&h3.mul(&h1).unwrap())
                .unwrap();
            let deg3 = h1h1
                .mul(&h2)
                .unwrap()
                .add(&h1.mul(&h2).unwrap().mul(&h1).unwrap())
                .unwrap()
                .add(&h2.mul(&h1h1).unwrap())
                .unwrap();
            let h1q = h1c.mul(&h1).unwrap();
            let want4 = h4
                .sub(&sym13.scale(&half))
                .unwrap()
                .add(&deg3.scale(&third))
                .unwrap()
                .sub(&h1q.scale(&quarter))
                .unwrap();
            assert_eq!(th[3], want4);
        }
    }

    // h with only h₂ ≠ 0 and p = 4: log(1 + h₂w²) = h₂w² mod w⁴.
    #[test]
    fn theta_sparse_tail() {
        let mut st = Stream::new(33);
        let h2 = st.rat_mat(2, 2, 3);
        let mut coeffs = vec![Mat::identity(2), Mat::zeros(2, 2), h2.clone(), Mat::zeros(2, 2)];
        let h = Jet::new(2, 4, std::mem::take(&mut coeffs)).unwrap();
        let th = theta_of(&h);
        assert!(th[0].is_zero());
        assert_eq!(th[1], h2);
        assert!(th[2].is_zero());
    }

    // θ_k is graded of weight k: h_i ↦ t^i h_i scales θ_k by t^k.
    #[test]
    fn theta_graded_weights() {
        let mut st = Stream::new(55);
        let t = rat(2, 1);
        for _ in 0..8 {
            let r = 1 + st.below(3) as usize;
            let p = 2 + st.below(4) as usize;
            let h = st.unipotent_jet(r, p, 2);
            let mut tpow = Rat::from_i64(1);
            let scaled_coeffs: Vec<Mat<Rat>> = h
                .coeffs()
                .iter()
                .map(|c| {
                    let out = c.scale(&tpow);
                    tpow = tpow.mul(&t);
                    out
                })
                .collect();
            let hs = Jet::new(r, p, scaled_coeffs).unwrap();
            let th = theta_of(&h);
            let ths = theta_of(&hs);
            let mut tk = t.clone();
            for (a, b) in th.iter().zip(&ths) {
                assert_eq!(&a.scale(&tk), b);
                tk = tk.mul(&t);
            }
        }
    }

    // Tr θ_i(h·h') = Tr θ_i(h) + Tr θ_i(h') on the unipotent subgroup.
    #[test]
    fn trace_theta_additive() {
        let mut st = Stream::new(77);
        for _ in 0..15 {
            let r = 1 + st.below(3) as usize;
            let p = 2 + st.below(5) as usize;
            let a = st.unipotent_jet(r, p, 2);
            let b = st.unipotent_jet(r, p, 2);
            let ta = tr_theta(&a).unwrap();
            let tb = tr_theta(&b).unwrap();
            let tab = tr_theta(&a.mul(&b).unwrap()).unwrap();
            for i in 0..ta.len() {
                assert_eq!(tab[i], ta[i].add(&tb[i]));
            }
        }
    }

    #[test]
    fn log_character_identity_is_zero() {
        let spec = PartitionSpec::new(2, vec![2, 1]).unwrap();
        let h: HLambdaElement<Rat> = HLambdaElement::identity(spec.clone());
        let params = CharacterParams::new(
            spec,
            vec![
                vec![Complex64::new(-1.3, 0.2), Complex64::new(2.0, 0.0)],
                vec![Complex64::new(-2.7, -0.2)],
            ],
            4,
        )
        .unwrap();
        let v = log_character(&h, &params).unwrap();
        assert_eq!(v.value, Complex64::new(0.0, 0.0));
    }

    // For λ = (1,…,1) the character collapses to Σ α^{(k)} log det h^{(k)}.
    #[test]
    fn log_character_nonconfluent_case() {
        let spec = PartitionSpec::new(2, vec![1, 1, 1]).unwrap();
        let mut st = Stream::new(101);
        let factors: Vec<Jet<Rat>> = (0..3).map(|_| st.unit_jet(2, 1, 3)).collect();
        let h = HLambdaElement::new(spec.clone(), factors.clone()).unwrap();
        let alpha = vec![
            vec![Complex64::new(-1.1, 0.3)],
            vec![Complex64::new(-2.2, -0.1)],
            vec![Complex64::new(-0.7, 0.0)],
        ];
        let params = CharacterParams::new(spec, alpha.clone(), 4).unwrap();
        let got = log_character(&h, &params).unwrap().value;
        let mut want = Complex64::new(0.0, 0.0);
        for (k, f) in factors.iter().enumerate() {
            let det = f.coeff(0).map(|e| e.to_c64()).det().unwrap();
            want += alpha[k][0] * det.ln();
        }
        assert!((got - want).norm() < 1e-12);
    }

    // Principal-branch additivity for positive-leading-determinant input:
    // the discrepancy of log χ under multiplication is exactly the exact
    // rational Tr-θ part, and the det parts add with no winding.
    #[test]
    fn log_character_additive_on_positive_branch() {
        let spec = PartitionSpec::new(1, vec![2]).unwrap();
        let mut st = Stream::new(202);
        let params = CharacterParams::new(
            spec.clone(),
            vec![vec![Complex64::new(-1.4, 0.0), Complex64::new(0.9, 0.0)]],
            2,
        )
        .unwrap();
        for _ in 0..10 {
            // Positive 1x1 leading blocks keep the principal branch additive.
            let mk = |st: &mut Stream| {
                let lead = Mat::from_vec(1, 1, vec![st.rat_nonzero(3) * st.rat_nonzero(3)]).unwrap();
                let lead = if lead[(0, 0)] < rat(0, 1) {
                    lead.neg()
                } else {
                    lead
                };
                let tail = st.rat_mat(1, 1, 3);
                HLambdaElement::new(
                    spec.clone(),
                    vec![Jet::new(1, 2, vec![lead, tail]).unwrap()],
                )
                .unwrap()
            };
            let a = mk(&mut st);
            let b = mk(&mut st);
            let ab = a.mul(&b).unwrap();
            let la = log_character(&a, &params).unwrap().value;
            let lb = log_character(&b, &params).unwrap().value;
            let lab = log_character(&ab, &params).unwrap().value;
            assert!((lab - la - lb).norm() < 1e-10);
        }
    }
}
