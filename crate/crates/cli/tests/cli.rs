//! End-to-end tests for the `nla` binary: spec'd exit codes, the frozen
//! examples for each subcommand, and the JSON report shape.

use std::process::{Command, Output};

fn nla(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nla"))
        .args(args)
        .env_remove("NLA_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// The line starting with `key` ends with `value` (fields are padded).
fn line_is(text: &str, key: &str, value: &str) -> bool {
    text.lines()
        .any(|l| l.starts_with(key) && l.trim_end().ends_with(value))
}

#[test]
fn info_builtin_matches_frozen_row() {
    let out = nla(&["info", "f1"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "ascending", "(3,5,8)"), "{s}");
    assert!(line_is(&s, "descending", "(8,3,1)"), "{s}");
    assert!(line_is(&s, "betti", "(5,12,19,22)"), "{s}");
    assert!(line_is(&s, "n_d", "2"), "{s}");
    assert!(line_is(&s, "n_I", "4"), "{s}");
}

#[test]
fn info_accepts_structure_tuples() {
    let out = nla(&["info", "(0,0,0,2.13)"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "step", "2"), "{s}");
    assert!(line_is(&s, "betti", "(3,4,3,1)"), "{s}");
}

#[test]
fn info_jacobi_violation_exits_3() {
    let out = nla(&["info", "(0,0,12,13+24)"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("Jacobi"));
}

#[test]
fn info_parse_error_exits_2() {
    let out = nla(&["info", "(0,0,0,2x13)"]);
    assert_eq!(out.status.code(), Some(2));
    let out = nla(&["info", "not-an-algebra"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn info_json_carries_fingerprint() {
    let out = nla(&["info", "f6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["algebra"], "f6");
    assert_eq!(doc["step"], 5);
    assert_eq!(doc["fingerprint"]["n_I"], 4);
    assert_eq!(doc["fingerprint"]["betti"], serde_json::json!([2, 3, 6, 8]));
}

#[test]
fn table2_matches_the_frozen_copy() {
    let out = nla(&["table2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("11/11 rows match"));
}

#[test]
fn table2_inject_hook_reports_one_cell() {
    let out = nla(&["table2", "--inject-wrong-cell"]);
    assert_eq!(out.status.code(), Some(1));
    let s = stdout(&out);
    let mismatches: Vec<&str> = s.lines().filter(|l| l.starts_with("mismatch:")).collect();
    assert_eq!(mismatches.len(), 1, "{s}");
    assert!(mismatches[0].contains("f1: n_d computed 2, expected 3"), "{s}");
}

#[test]
fn table2_json_rows() {
    let out = nla(&["table2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["matches"], true);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 11);
    assert_eq!(doc["rows"][0]["label"], "f1");
    assert_eq!(doc["rows"][10]["n_d"], 3);
}

#[test]
fn classify_wnn_series_dims() {
    let out = nla(&["classify", "wnn(0,1,1,1,0)"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "type", "weakly non-nilpotent"), "{s}");
    assert!(line_is(&s, "a-series dims", "[2, 2]"), "{s}");
    assert!(s.contains("dw2 = w13 + w1~3"), "{s}");
}

#[test]
fn classify_snn_and_torus() {
    let out = nla(&["classify", "snn1(1,0,0,1,0)"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "type", "strongly non-nilpotent"), "{s}");
    assert!(line_is(&s, "a-series dims", "[0]"), "{s}");

    let out = nla(&["classify", "torus"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "type", "nilpotent"), "{s}");
    assert!(line_is(&s, "a-series dims", "[8]"), "{s}");
}

#[test]
fn classify_explicit_j_matrix() {
    let j4 = "0,-1,0,0;1,0,0,0;0,0,0,-1;0,0,1,0";
    let out = nla(&["classify", "(0,0,0,12)", "--j-matrix", j4]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "type", " nilpotent"), "{s}");
    assert!(line_is(&s, "integrable", "yes"), "{s}");
}

#[test]
fn classify_bad_tuple_exits_2() {
    let out = nla(&["classify", "wnn(0,2,1,1,0)"]);
    assert_eq!(out.status.code(), Some(2));
    let out = nla(&["classify", "wnn(0,1,0,1,0)"]);
    // nu=0 forces a in {0,1} and B constrained; a=1, B=0 is fine
    assert_eq!(out.status.code(), Some(0));
    let out = nla(&["classify", "wnn(0,1,0,5,0)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pk_wnn_witness_and_geometry() {
    let out = nla(&["pk", "wnn(0,1,1,1,0)"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "kernel dim", "4"), "{s}");
    assert!(line_is(&s, "pk metric", "exists"), "{s}");
    assert!(line_is(&s, "signature", "(4,4)"), "{s}");
    assert!(line_is(&s, "ricci zero", "yes"), "{s}");
    assert!(line_is(&s, "flat", "no"), "{s}");
    assert!(line_is(&s, "parallel vol", "yes"), "{s}");
}

#[test]
fn pk_off_branch_and_snn1_have_certificates() {
    for reference in ["wnn(1,1,1,1,0)", "wnn(0,1,0,1,0)", "snn1(1,0,1,1,1)"] {
        let out = nla(&["pk", reference]);
        assert_eq!(out.status.code(), Some(0), "{reference}");
        let s = stdout(&out);
        assert!(line_is(&s, "pk metric", "none"), "{reference}: {s}");
        assert!(s.contains("F^4 vanishes identically"), "{reference}: {s}");
    }
}

#[test]
fn pk_json_report_schema() {
    let out = nla(&["pk", "wnn(0,1,1,1,0)", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in [
        "algebra",
        "J_params",
        "pk_exists",
        "kernel_dim",
        "witness",
        "signature",
        "ricci_flat",
        "flat",
        "complex_symplectic",
    ] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["algebra"], "f7^0");
    assert_eq!(doc["pk_exists"], true);
    assert_eq!(doc["kernel_dim"], 4);
    assert_eq!(doc["signature"], serde_json::json!([4, 4]));
    assert_eq!(doc["ricci_flat"], true);
    assert_eq!(doc["flat"], false);
    assert_eq!(doc["complex_symplectic"], false);
}

#[test]
fn pk_rejects_non_integrable_pair() {
    // canonical J is not integrable in the catalog coordinates of f5^0
    let j8 = "0,-1,0,0,0,0,0,0;1,0,0,0,0,0,0,0;0,0,0,-1,0,0,0,0;0,0,1,0,0,0,0,0;\
              0,0,0,0,0,-1,0,0;0,0,0,0,1,0,0,0;0,0,0,0,0,0,0,-1;0,0,0,0,0,0,1,0";
    let out = nla(&["pk", "f5^0", "--j-matrix", j8]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not integrable"));
}

#[test]
fn sympl_wnn_none_with_forced_coords() {
    let out = nla(&["sympl", "wnn(1,1,1,1,0)"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "complex symplectic", "none"), "{s}");
    for name in ["tau", "theta", "xi"] {
        assert!(s.contains(name), "{name} missing: {s}");
    }
}

#[test]
fn sympl_torus_witness() {
    let out = nla(&["sympl", "torus"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "closed (2,0) dim", "6"), "{s}");
    assert!(s.contains("exists"), "{s}");
    assert!(s.contains("w12") && s.contains("w34"), "{s}");
}

#[test]
fn sympl_snn_families_none() {
    for reference in ["snn1(1,0,0,1,0)", "snn2(1,0,0,0,0)"] {
        let out = nla(&["sympl", reference]);
        assert_eq!(out.status.code(), Some(0), "{reference}");
        assert!(line_is(&stdout(&out), "complex symplectic", "none"), "{reference}");
    }
}

#[test]
fn reduce_pythagorean_tuple() {
    let out = nla(&["reduce", "gen(0,1,0,3+4i,0)"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "normal form", "wnn(0,1,0,1,0)"), "{s}");
    assert!(s.contains("3/25-4/25i"), "{s}");
}

#[test]
fn reduce_is_identity_on_normal_labels() {
    let out = nla(&["reduce", "wnn(0,1,1,1,0)"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "normal form", "wnn(0,1,1,1,0)"), "{s}");
    assert!(s.contains("[1, 0, 0, 0]"), "{s}");
}

#[test]
fn reduce_irrational_rotation_exits_2() {
    let out = nla(&["reduce", "gen(1,1,1,1+i,0)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not Gaussian rational"));
}

#[test]
fn equiv_check_same_normal_form() {
    let out = nla(&["equiv-check", "gen(0,1,0,3+4i,0)", "gen(0,1,0,5,0)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(line_is(&stdout(&out), "verdict", "equivalent"));
}

#[test]
fn equiv_check_different_exits_1() {
    let out = nla(&["equiv-check", "wnn(0,1,1,1,0)", "wnn(1,1,1,1,0)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(line_is(&stdout(&out), "verdict", "not equivalent"));
}

#[test]
fn quotient_hits_the_six_dim_target() {
    let out = nla(&["quotient", "wnn(0,1,1,1,0)"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(line_is(&s, "a1 dim", "2"), "{s}");
    assert!(line_is(&s, "quotient J type", "strongly non-nilpotent"), "{s}");
    assert!(s.contains("epsilon=0, delta=1: yes"), "{s}");
}

#[test]
fn quotient_rejects_non_wnn_input() {
    let out = nla(&["quotient", "snn1(1,0,0,1,0)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("expects a wnn"));
}

#[test]
fn tex_output_rows() {
    let out = nla(&["info", "f1", "--tex"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "f1 & (3,5,8) & (8,3,1) & 5 & 12 & 19 & 22 & 2 \\\\"
    );
    let out = nla(&["classify", "wnn(0,1,1,1,0)", "--tex"]);
    assert!(stdout(&out).contains("d\\omega^{2} = \\omega^{13} + \\omega^{1\\bar{3}}"));
}

#[test]
fn reproduce_all_smoke() {
    let out = nla(&["reproduce-all", "--cases", "2", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    for i in 1..=9 {
        assert!(s.contains(&format!("criterion {i}: PASS")), "criterion {i}: {s}");
    }
    assert!(s.contains("seed 7, 2 cases per property suite"), "{s}");
}
