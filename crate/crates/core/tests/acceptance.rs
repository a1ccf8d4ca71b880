//! The reproduction gate: every headline result recomputed from scratch, one
//! pass/fail line per criterion.  Run with `--nocapture` to see the lines.

use nla_core::verify::{all_checks, property_suites};

const PROPERTY_CASES: usize = 1000;
const PROPERTY_SEED: u64 = 0x6e6c61;

#[test]
fn acceptance() {
    let checks = all_checks();
    let mut ok = true;
    for (i, c) in checks.iter().enumerate() {
        println!("criterion {}: {}", i + 1, c.line());
        ok &= c.passed;
    }
    let suites = property_suites(PROPERTY_CASES, PROPERTY_SEED);
    let all = suites.iter().all(|c| c.passed);
    let tag = if all { "PASS" } else { "FAIL" };
    println!(
        "criterion 9: {tag}  property-suites          {} suites x {PROPERTY_CASES} cases",
        suites.len()
    );
    for c in &suites {
        println!("             {}", c.line());
    }
    ok &= all;
    assert!(ok, "some acceptance criteria failed; see the lines above");
}
