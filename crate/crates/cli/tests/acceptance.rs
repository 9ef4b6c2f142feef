//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line with its residual and pinned tolerance. The same runners back
//! `radon-weyl verify-all`.

use radon_weyl::report::CheckOutcome;
use radon_weyl::suite;

const SEED: u64 = 7;

fn assert_outcome(outcome: &CheckOutcome) {
    let status = if outcome.passed() { "PASS" } else { "FAIL" };
    println!(
        "[{status}] {} — {} | residual {:.3e} (tol {:.1e}) | {} ms",
        outcome.name, outcome.anchor, outcome.residual, outcome.tolerance, outcome.runtime_ms
    );
    assert!(
        outcome.passed(),
        "{} failed: residual {:.3e} > tolerance {:.1e} ({} / {})",
        outcome.name,
        outcome.residual,
        outcome.tolerance,
        outcome.lhs,
        outcome.rhs
    );
}

fn budget() -> suite::NumericBudget {
    suite::NumericBudget {
        mc_samples: 1_000_000,
        seed: SEED,
        threads: 4,
    }
}

#[test]
fn criterion_01_mu_group_law() {
    assert_outcome(&suite::c01_mu_group_law(SEED));
}

#[test]
fn criterion_02_normalizer_decomposition_roundtrip() {
    assert_outcome(&suite::c02_normalizer_decomposition(SEED));
}

#[test]
fn criterion_03_lie_criterion_soundness() {
    assert_outcome(&suite::c03_lie_criterion_soundness(SEED));
}

#[test]
fn criterion_04_character_equivariance() {
    assert_outcome(&suite::c04_character_equivariance(SEED));
}

#[test]
fn criterion_05_parameter_normalization() {
    assert_outcome(&suite::c05_parameter_normalization(SEED));
}

#[test]
fn criterion_06_normal_form_tables() {
    assert_outcome(&suite::c06_normal_form_tables(SEED));
}

#[test]
fn criterion_07_transposition_table() {
    assert_outcome(&suite::c07_transposition_table(SEED));
}

#[test]
fn criterion_08_beta_symmetry() {
    assert_outcome(&suite::c08_beta_symmetry(SEED));
}

#[test]
fn criterion_09_kummer_transformation() {
    assert_outcome(&suite::c09_kummer_transformation(&budget()));
}

#[test]
fn criterion_10_pfaff_transformation() {
    assert_outcome(&suite::c10_pfaff_transformation(&budget()));
}

#[test]
fn criterion_11_conjecture_evidence() {
    let outcome = suite::c11_conjecture_evidence(&budget());
    // Conjectural identities may agree numerically but are never plain
    // passes.
    assert_ne!(
        outcome.status,
        radon_weyl::report::Status::Pass,
        "conjecture checks must not report a plain pass"
    );
    assert_outcome(&outcome);
}

#[test]
fn criterion_12_classical_reductions() {
    assert_outcome(&suite::c12_classical_reductions(&budget()));
}

#[test]
fn criterion_13_determinism() {
    assert_outcome(&suite::c13_determinism(&budget()));
}
