//! Library surface of the verification binary: the report model and the
//! acceptance-criteria runners, shared by `radon-weyl verify-all` and the
//! acceptance test target.

pub mod report;
pub mod suite;
