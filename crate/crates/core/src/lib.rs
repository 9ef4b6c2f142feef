//! Exact structural algebra for block Jordan subgroups of `GL(N)`.
//!
//! Everything in this crate is computed over arbitrary-precision rationals
//! (or, where a group element genuinely lives over the complex numbers,
//! over complex doubles), so the group-theoretic identities checked by the
//! test suite hold bit-exactly rather than up to a floating tolerance.

pub mod block;
pub mod character;
pub mod charparams;
pub mod hlambda;
pub mod jet;
pub mod json;
pub mod matrix;
pub mod mu;
pub mod orbit;
pub mod partition;
pub mod perm;
pub mod sampler;
pub mod scalar;
pub mod weyl;

pub use block::BlockView;
pub use character::{log_character, theta_coeffs, underline, LogCharacterValue};
pub use charparams::{check_assumption, AssumptionReport, CharacterParams};
pub use hlambda::HLambdaElement;
pub use jet::Jet;
pub use matrix::Mat;
pub use mu::MuVector;
pub use orbit::{OrbitWitness, ZMatrix};
pub use partition::PartitionSpec;
pub use perm::Perm;
pub use scalar::{CoreError, Rat, Ring, Scalar};
pub use weyl::WeylElement;
