//! The acceptance gate: every documented claim about the bundled worked
//! example must verify. One test — and one printed pass/fail line — per
//! claim; run with `--nocapture` to see the transcript.

use agemo::config::Config;
use agemo::verify::run_claim;

fn check(index: usize) {
    let cfg = Config::default();
    let outcome = run_claim(index, &cfg);
    println!("{}", outcome.render());
    assert!(outcome.passed(), "{}", outcome.render());
}

#[test]
fn claim_01_catalog_algebras() {
    check(1);
}

#[test]
fn claim_02_ideal_sweep() {
    check(2);
}

#[test]
fn claim_03_kernel_of_mq() {
    check(3);
}

#[test]
fn claim_04_rigid_orbit() {
    check(4);
}

#[test]
fn claim_05_double_dual() {
    check(5);
}

#[test]
fn claim_06_gorenstein_independence() {
    check(6);
}

#[test]
fn claim_07_tr_profiles() {
    check(7);
}

#[test]
fn claim_08_q_minus_one() {
    check(8);
}

#[test]
fn claim_09_components() {
    check(9);
}

#[test]
fn claim_10_corpus_identities() {
    check(10);
}

#[test]
fn claim_11_horizon_honesty() {
    check(11);
}
