//! The three concrete integration domains and their membership tests.

use crate::herm::HermMatrix;

const DOMAIN_TOL: f64 = 1e-12;

/// Integration domain inside the space of Hermitian matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// 0 < U < 1.
    BetaBox,
    /// U > 0.
    PositiveCone,
    /// All of Herm(r).
    FullSpace,
}

impl Domain {
    pub fn contains(&self, u: &HermMatrix) -> bool {
        match self {
            Domain::FullSpace => true,
            Domain::PositiveCone => u.eigenvalues().iter().all(|&l| l > DOMAIN_TOL),
            Domain::BetaBox => u
                .eigenvalues()
                .iter()
                .all(|&l| l > DOMAIN_TOL && l < 1.0 - DOMAIN_TOL),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Domain::BetaBox => "beta-box",
            Domain::PositiveCone => "positive-cone",
            Domain::FullSpace => "full-space",
        }
    }
}

impl std::str::FromStr for Domain {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "beta-box" | "box" => Ok(Domain::BetaBox),
            "positive-cone" | "cone" => Ok(Domain::PositiveCone),
            "full-space" | "full" => Ok(Domain::FullSpace),
            other => Err(format!("unknown domain {other:?}")),
        }
    }
}
