//! End-to-end runs of the `octomax` binary: exit codes, text output, and
//! the JSON report shape.

use std::process::Command;

use octomax::report::{Report, Status};
use serde_json::Value;

fn octomax(args: &str) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_octomax"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &str) -> (i32, Value) {
    let (code, stdout, _) = octomax(&format!("{args} --format json"));
    (code, serde_json::from_str(&stdout).expect("valid json"))
}

fn check<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn table_split_and_octonion() {
    let (code, out, _) = octomax("table --algebra split");
    assert_eq!(code, 0);
    assert!(out.contains("norm signature (4,4)"));
    assert!(out.contains("   e3   -e7  -e5   +1"));
    let (code, out, _) = octomax("table --algebra octonion");
    assert_eq!(code, 0);
    assert!(out.contains("norm signature (8,0)"));
    assert!(out.contains("   e3   -e7  -e5   -1"));
}

#[test]
fn table_flip_sign_fails() {
    let (code, out, _) = octomax("table --algebra octonion --flip-sign 2,5");
    assert_eq!(code, 1);
    assert!(out.contains("[FAIL] anticommutativity"));
    let (_, v) = json("table --flip-sign 2,5");
    assert_eq!(check(&v, "anticommutativity")["status"], "fail");
}

#[test]
fn identities_pass_and_associativity_fails() {
    for algebra in ["split", "octonion"] {
        let (code, v) = json(&format!("identities --algebra {algebra} --trials 200"));
        assert_eq!(code, 0, "{algebra}");
        for name in ["left_alternativity", "right_alternativity", "moufang", "norm_multiplicativity"] {
            assert_eq!(check(&v, name)["status"], "pass");
        }
    }
    let (code, out, _) = octomax("identities --expect-associativity --trials 50");
    assert_eq!(code, 1);
    assert!(out.contains("[FAIL] associativity: [e1, e2, e3] = (-2)e6"), "{out}");
}

#[test]
fn split_identities_report_zero_divisors() {
    let (_, v) = json("identities --algebra split --trials 10");
    assert_eq!(check(&v, "zero_divisors")["status"], "pass");
}

#[test]
fn usage_errors_exit_2() {
    for args in ["identities --trials 0", "table --algebra foo", "planewave --k 0,0,1 --eps 0,0,1", "frobnicate"] {
        let (code, _, err) = octomax(args);
        assert_eq!(code, 2, "{args}");
        assert!(!err.is_empty(), "{args}");
    }
    let (_, _, err) = octomax("planewave --k 0,0,1 --eps 0,0,1");
    assert!(err.contains("not transverse"), "{err}");
}

#[test]
fn expand_variants() {
    let (code, out, _) = octomax("expand --algebra split");
    assert_eq!(code, 0);
    assert!(out.contains("q_vec.x = +d_y(Ez) - d_z(Ey) + d_t(Bx)"));

    let (code, out, _) = octomax("expand --algebra octonion");
    assert_eq!(code, 0, "expansion matches its own expectation in both algebras");
    assert!(out.contains("q_vec.x = +d_y(Ez) - d_z(Ey) - d_t(Bx)"));
    assert!(out.contains("NOT Faraday's law"));

    let (code, out, _) = octomax("expand --algebra split --with-S");
    assert_eq!(code, 0);
    assert!(out.contains("scalar = -d_x(Ex) - d_y(Ey) - d_z(Ez) + d_t(S)"));
    assert!(out.contains("rho = d_t S"));

    let (code, out, _) = octomax("expand --algebra split --with-S --with-F0");
    assert_eq!(code, 0);
    assert!(out.contains("e7_part = +d_x(Bx) + d_y(By) + d_z(Bz) + d_t(F0)"));
    assert!(out.contains("derived extension"));
}

#[test]
fn expand_json_terms() {
    let (_, v) = json("expand --algebra split");
    let terms = v["decomposition"]["computed"]["q_vec.x"].as_array().unwrap();
    let last = terms.last().unwrap();
    assert_eq!((last["sign"].as_str(), last["var"].as_str(), last["field"].as_str()), (Some("+"), Some("t"), Some("Bx")));
    assert_eq!(v["decomposition"]["computed"], v["decomposition"]["expected"]);
}

#[test]
fn planewave_default() {
    let (code, v) = json("planewave --points 200");
    assert_eq!(code, 0);
    for group in ["scalar", "q_vec", "e7q_vec", "e7_part"] {
        assert!(v["residuals"]["split"]["max_abs"][group].as_f64().unwrap() <= 1e-10);
    }
    assert!(v["residuals"]["octonion"]["max_abs"]["q_vec"].as_f64().unwrap() > 0.1);
    assert_eq!(v["residuals"]["split"]["points_evaluated"], 200);
}

#[test]
fn planewave_zero_field() {
    let (code, out, _) = octomax("planewave --zero-field --points 50");
    assert_eq!(code, 0);
    assert!(out.contains("[SKIP] octonion discrimination"));
}

#[test]
fn planewave_finite_difference() {
    let (code, v) = json("planewave --finite-difference --points 50");
    assert_eq!(code, 0);
    assert!(v["residuals"]["split"]["richardson_estimate"].is_number());
}

#[test]
fn derivations_report_basis() {
    for algebra in ["split", "octonion"] {
        let (code, v) = json(&format!("derivations --algebra {algebra}"));
        assert_eq!(code, 0);
        assert_eq!(v["dimension"], 14);
        let basis = v["basis"].as_array().unwrap();
        assert_eq!(basis.len(), 14);
        assert!(basis.iter().all(|m| m.as_array().unwrap().len() == 7
            && m.as_array().unwrap().iter().all(|r| r.as_array().unwrap().len() == 7)));
        assert_eq!(check(&v, "e1<->e2 swap rejected")["status"], "pass");
    }
}

#[test]
fn json_round_trips() {
    for args in [
        "table",
        "table --flip-sign 1,2",
        "identities --trials 20",
        "expand --with-S --with-F0",
        "planewave --points 20",
        "planewave --zero-field --points 20",
        "derivations",
    ] {
        let (_, stdout, _) = octomax(&format!("{args} --format json"));
        let report = Report::from_json(&stdout).unwrap_or_else(|e| panic!("{args}: {e}"));
        assert_eq!(report.schema, 1);
        assert_eq!(report.to_json().trim(), stdout.trim(), "{args}");
        let exit = octomax(&format!("{args} --format json")).0;
        let failed = report.checks.iter().any(|c| c.status == Status::Fail);
        assert_eq!(exit, i32::from(failed), "{args}");
    }
}

#[test]
fn runs_are_deterministic() {
    for args in ["identities --trials 30 --seed 7", "planewave --points 30 --seed 7 --format json"] {
        assert_eq!(octomax(args), octomax(args), "{args}");
    }
}

#[test]
fn in_process_runner_matches_binary() {
    let out = octomax::cli::run_args(["octomax", "table", "--algebra", "split"]);
    let (code, stdout, _) = octomax("table --algebra split");
    assert_eq!((out.exit_code, out.stdout), (code, stdout));
}
