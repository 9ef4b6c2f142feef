//! Numeric side of the build: Hermitian matrix integrals by Monte Carlo
//! in the eigenvalue/Haar parametrization, deterministic eigenvalue
//! quadrature, matrix-argument hypergeometric series, and the identity
//! checks that tie them together.
//!
//! Normalization policy: the unitary-volume constant of the eigenvalue
//! parametrization is never derived. Every check is either a
//! constant-cancelling ratio or normalized through the matrix gamma
//! function, whose per-size constant is calibrated once against the
//! quadrature at a reference point.

pub mod checks;
pub mod domain;
pub mod estimate;
pub mod gammar;
pub mod herm;
pub mod integrand;
pub mod mc;
pub mod named;
pub mod quad;
pub mod sampling;
pub mod schur;
pub mod series;

pub use checks::{
    check_beta_symmetry, check_conjecture, check_kummer, check_pfaff, CheckBudget, CheckReport,
};
pub use domain::Domain;
pub use estimate::{IntegralEstimate, Method};
pub use herm::{HermMatrix, IntError};
pub use mc::{mc_integral, McConfig};
pub use named::{bessel_hermite_airy_eval, EvalBudget};
pub use quad::{eig_quadrature, EigWeight};
pub use sampling::Proposal;
pub use series::{hgf_series_1f1, hgf_series_2f1};
