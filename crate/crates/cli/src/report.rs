//! Machine-readable run reports with a stable field order.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A conjectural identity that agreed numerically; never upgraded to
    /// a plain pass.
    ConjectureConsistent,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    /// The identity or guarantee the check exercises, quoted as a formula.
    pub anchor: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub residual: f64,
    pub tolerance: f64,
    pub runtime_ms: u128,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::ConjectureConsistent)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub seed: u64,
    pub samples: u64,
    pub trunc: usize,
    pub threads: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub checks: Vec<CheckOutcome>,
    pub status: Status,
}

impl Report {
    pub fn new(config: RunConfig, checks: Vec<CheckOutcome>) -> Self {
        let status = if checks.iter().all(|c| c.passed()) {
            if checks
                .iter()
                .any(|c| c.status == Status::ConjectureConsistent)
                && checks.iter().all(|c| c.status != Status::Fail)
                && checks.iter().any(|c| c.status == Status::Pass)
            {
                Status::Pass
            } else if checks
                .iter()
                .all(|c| c.status == Status::ConjectureConsistent)
                && !checks.is_empty()
            {
                Status::ConjectureConsistent
            } else {
                Status::Pass
            }
        } else {
            Status::Fail
        };
        Self {
            config,
            checks,
            status,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.status == Status::Fail {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with timing fields zeroed, for determinism comparisons.
    pub fn normalized_json(&self) -> String {
        let mut clone = self.clone();
        for c in &mut clone.checks {
            c.runtime_ms = 0;
        }
        serde_json::to_string_pretty(&clone).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::ConjectureConsistent => "CONJECTURE-CONSISTENT",
            };
            out.push_str(&format!(
                "[{}] {} — {} | residual {:.3e} (tol {:.1e}) | {} ms\n",
                tag, c.name, c.anchor, c.residual, c.tolerance, c.runtime_ms
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            match self.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::ConjectureConsistent => "conjecture-consistent",
            }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(status: Status) -> CheckOutcome {
        CheckOutcome {
            name: "x".into(),
            anchor: "y".into(),
            status,
            lhs: "1".into(),
            rhs: "1".into(),
            residual: 0.0,
            tolerance: 1e-12,
            runtime_ms: 3,
        }
    }

    #[test]
    fn empty_run_passes() {
        let r = Report::new(
            RunConfig {
                command: "t".into(),
                seed: 0,
                samples: 0,
                trunc: 0,
                threads: 1,
            },
            vec![],
        );
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn failing_check_fails_run() {
        let r = Report::new(
            RunConfig {
                command: "t".into(),
                seed: 0,
                samples: 0,
                trunc: 0,
                threads: 1,
            },
            vec![outcome(Status::Pass), outcome(Status::Fail)],
        );
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn conjecture_never_plain_pass() {
        let r = Report::new(
            RunConfig {
                command: "t".into(),
                seed: 0,
                samples: 0,
                trunc: 0,
                threads: 1,
            },
            vec![outcome(Status::ConjectureConsistent)],
        );
        assert_eq!(r.status, Status::ConjectureConsistent);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn normalized_json_strips_timings() {
        let mut o = outcome(Status::Pass);
        o.runtime_ms = 777;
        let r = Report::new(
            RunConfig {
                command: "t".into(),
                seed: 0,
                samples: 0,
                trunc: 0,
                threads: 1,
            },
            vec![o],
        );
        assert!(!r.normalized_json().contains("777"));
    }
}
