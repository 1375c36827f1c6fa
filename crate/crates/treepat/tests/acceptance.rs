//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Scales follow the stated requirements; everything is exact (tolerance 0).
//!
//! Run with `cargo test -p treepat --test acceptance` (add `--release` or
//! rely on the optimized test profile; the table reproduction enumerates all
//! 208012 twelve-vertex trees).

use treepat::verify;

fn run(criterion: &str, report: verify::Report) {
    let status = if report.passed() { "pass" } else { "FAIL" };
    println!(
        "criterion {criterion}: {status} ({} checks, suite {} at n={})",
        report.checks, report.suite, report.n
    );
    assert!(
        report.passed(),
        "criterion {criterion} failed: {:?}",
        report.failures
    );
}

#[test]
fn criterion_01_table_reproduction() {
    run("1 table reproduction n=1..12", verify::tables(12));
}

#[test]
fn criterion_02_gray_code_exactness() {
    run("2a greedy generator vs brute force at n=9", verify::algo_s_vs_brute(9));
    run("2b history-free equals greedy at n=9", verify::algo_h_vs_algo_s(9));
}

#[test]
fn criterion_03_mesh_correspondence() {
    run("3 mesh correspondence for all patterns, n<=8", verify::thm_bijection(8));
}

#[test]
fn criterion_04_coincidence() {
    run("4 mesh coincidence under 231, n<=8", verify::exchange(8));
}

#[test]
fn criterion_05_tameness() {
    run("5 tameness of reduced mesh patterns", verify::friendly_tame());
}

#[test]
fn criterion_06_e_equality() {
    run("6 edge-flip equality for all table hyphens, n<=9", verify::e_equality(9));
}

#[test]
fn criterion_07_bijection_suite() {
    run(
        "7a bijection round trips and images, n<=10 (catastrophes n<=8)",
        verify::bijection_suite(10, 8),
    );
    run("7b staggered partition correspondences, n<=9", verify::staggered(9));
}

#[test]
fn criterion_08_recurrence() {
    run("8 closed recurrence vs brute counts, n<=12", verify::recurrence_12435(12));
}

#[test]
fn criterion_09_wilf_transforms() {
    run("9 explicit transforms bijective at n=9", verify::wilf_transforms(9));
}

#[test]
fn criterion_10_baseline_gray_code() {
    run("10 unrestricted rotation code at n=4", verify::baseline_gray(4));
}
