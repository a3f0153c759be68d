//! Acceptance gate: one test per criterion, each printing a pass/fail line.
//! Every tolerance is exact zero; a criterion passes only if every residual
//! coefficient normalizes to the zero element.

use yosp::suites::{run_suite, Context, Report, Status};

fn summarize(name: &str, reports: &[&Report]) -> bool {
    let pass = reports.iter().all(|r| r.all_passed());
    let checks: usize = reports.iter().map(|r| r.totals.checks).sum();
    let millis: u64 = reports.iter().map(|r| r.totals.millis).sum();
    println!(
        "{}: {} ({} checks, {} ms)",
        name,
        if pass { "PASS" } else { "FAIL" },
        checks,
        millis
    );
    for r in reports {
        for c in &r.checks {
            if c.status == Status::Fail {
                println!("  failing: {} {:?} residual_terms={}", c.id, c.indices, c.residual_terms);
            }
        }
    }
    pass
}

#[test]
fn criterion_1_rank_one_presentation_relations() {
    // every relation of the rank-one presentation with corner generators,
    // plus the proof-chain identities, at m = 1, order 5
    let report = run_suite("thm-odp", 1, 5, 2, 0).unwrap();
    assert!(summarize("criterion 1 (thm-odp, m=1, D=5)", &[&report]));
}

#[test]
fn criterion_2_rank_one_yangian_presentations() {
    let odpy = run_suite("cor-odpy", 1, 5, 2, 0).unwrap();
    let serre = run_suite("cor-serre", 1, 5, 2, 0).unwrap();
    assert!(summarize(
        "criterion 2 (cor-odpy + cor-serre, m=1, D=5)",
        &[&odpy, &serre]
    ));
}

#[test]
fn criterion_3_rank_two_presentations() {
    let ctx = Context::build(2, 3, 0);
    let ospl4 = yosp::suites::run_suite_in(&ctx, "ospl4", 2).unwrap();
    let dp = yosp::suites::run_suite_in(&ctx, "thm-dp", 2).unwrap();
    let modpy = yosp::suites::run_suite_in(&ctx, "cor-modpy", 2).unwrap();
    assert!(summarize(
        "criterion 3 (ospl4 + thm-dp + cor-modpy, m=2, D=3)",
        &[&ospl4, &dp, &modpy]
    ));
}

#[test]
fn criterion_4_gauss_core_both_ranks() {
    let rank1 = run_suite("gauss-core", 1, 4, 2, 0).unwrap();
    let rank2 = run_suite("gauss-core", 2, 3, 2, 0).unwrap();
    assert!(summarize(
        "criterion 4 (gauss-core, m=1 D=4 and m=2 D=3)",
        &[&rank1, &rank2]
    ));
}

#[test]
fn criterion_5_pbw_counts_and_independence() {
    let rank1 = run_suite("pbw", 1, 4, 2, 0).unwrap();
    let rank2 = run_suite("pbw", 2, 3, 2, 0).unwrap();
    let pass = summarize("criterion 5 (pbw, m=1 and m=2)", &[&rank1, &rank2]);
    // the pinned dimensions at rank one
    let engine = yosp::suites::engine_for(1);
    assert_eq!(engine.enumerate_normal_words(1).len(), 6);
    assert_eq!(engine.enumerate_normal_words(2).len(), 25);
    assert_eq!(engine.pbw_series_count(1), 6);
    assert_eq!(engine.pbw_series_count(2), 25);
    // exact ranks of the Gaussian monomial expansions
    let ctx = Context::build(1, 2, 0);
    assert_eq!(yosp::suites::pbw::gaussian_rank(&ctx, 0), (1, 1));
    assert_eq!(yosp::suites::pbw::gaussian_rank(&ctx, 1), (6, 6));
    assert_eq!(yosp::suites::pbw::gaussian_rank(&ctx, 2), (25, 25));
    assert!(pass);
}

#[test]
fn criterion_6_morphisms() {
    // fourth powers, relation preservation to r+s <= 5, the flip action on
    // the rank-one generators to order 5, scaling invariance at three samples
    let morphisms = run_suite("morphisms", 1, 5, 2, 0).unwrap();
    let sigauss = run_suite("lem-sigauss", 1, 5, 2, 0).unwrap();
    assert!(summarize(
        "criterion 6 (morphisms + lem-sigauss, m=1, D=5)",
        &[&morphisms, &sigauss]
    ));
}

#[test]
fn criterion_7_coproduct() {
    // relation residues to r+s <= 4 map to zero in the tensor square; the
    // explicit images of the simple-root series match to order 3
    let report = run_suite("prop-copr", 1, 3, 2, 0).unwrap();
    assert!(summarize("criterion 7 (prop-copr, m=1, D=3)", &[&report]));
}

#[test]
fn criterion_8_engine_properties_and_negative_controls() {
    let sanity = run_suite("rtt-sanity", 1, 4, 2, 0).unwrap();
    let pass = summarize("criterion 8a (rtt-sanity, m=1, D=4)", &[&sanity]);
    // negative controls must all fail, and the binary must exit 1 on them
    let negative = run_suite("negative-control", 1, 3, 1, 0).unwrap();
    let all_fail = negative.checks.iter().all(|c| c.status == Status::Fail);
    println!(
        "criterion 8b (negative controls all fail): {}",
        if all_fail { "PASS" } else { "FAIL" }
    );
    let status = std::process::Command::new(env!("CARGO_BIN_EXE_yosp"))
        .args([
            "verify",
            "--m",
            "1",
            "--order",
            "3",
            "--suite",
            "negative-control",
            "--format",
            "json",
            "--out",
        ])
        .arg(std::env::temp_dir().join("yosp-negative-control.json"))
        .status()
        .expect("binary runs");
    println!(
        "criterion 8c (negative-control exit code 1): {}",
        if status.code() == Some(1) { "PASS" } else { "FAIL" }
    );
    assert!(pass);
    assert!(all_fail);
    assert_eq!(status.code(), Some(1));
}
