use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hopfore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfore"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// C_4 with χ(g) = i and a = g, so s = 4.
fn write_c4(dir: &Path) -> String {
    let powers = ["1", "w", "-1", "-w"];
    let table: Vec<Vec<usize>> = (0..4)
        .map(|a| (0..4).map(|b| (a + b) % 4).collect())
        .collect();
    let simples: Vec<Value> = powers
        .iter()
        .enumerate()
        .map(|(k, v)| serde_json::json!({ "name": format!("c{k}"), "matrices": [[[v]]] }))
        .collect();
    let doc = serde_json::json!({
        "order": 4,
        "table": table,
        "generators": [1],
        "central": 1,
        "chi": powers,
        "simples": simples,
    });
    let path = dir.join("c4.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn algebra_summary() {
    let o = hopfore(&["algebra", "dihedral", "--m", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("s = 2"), "{text}");
    assert!(text.contains("I_0 = {eps, lam, 1}"), "{text}");
    let o = hopfore(&["algebra", "dihedral", "--m", "5", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["s"], 2);
    assert_eq!(v["simples"].as_array().unwrap().len(), 8);
}

#[test]
fn tensor_both_methods() {
    let o = hopfore(&[
        "tensor",
        "--left",
        "V[2](eps)",
        "--right",
        "V[3](eps)",
        "--method",
        "both",
        "--m",
        "3",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        stdout(&o).trim(),
        "closed: {V[4](eps), V[2](chi)}\nmatrix: {V[4](eps), V[2](chi)}\nagree: true"
    );
    let o = hopfore(&["tensor", "--left", "w[1]", "--right", "y[-1]", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["closed"]["total_dim"], 4);
    assert_eq!(v["matrix"]["components"][0]["label"], "V[2](eps)");
}

#[test]
fn ring_mul_views() {
    let run = |args: &[&str]| {
        let o = hopfore(args);
        assert!(o.status.success(), "{}", stderr(&o));
        stdout(&o).trim().to_string()
    };
    assert_eq!(
        run(&[
            "ring",
            "mul",
            "--ring",
            "groth",
            "--expr",
            "x*x",
            "--basis",
            "canonical",
            "--m",
            "3"
        ]),
        "1 + lam + V[1](2)"
    );
    assert_eq!(
        run(&[
            "ring",
            "mul",
            "--ring",
            "groth",
            "--expr",
            "x^3 - 3*x - (1+lam)*chi"
        ]),
        "0"
    );
    assert_eq!(
        run(&["ring", "mul", "--ring", "groth", "--expr", "V[1](3)", "--basis", "x1", "--m", "5"]),
        "x^3 - 3*x"
    );
    assert_eq!(
        run(&["ring", "mul", "--ring", "groth", "--expr", "V[1](2)", "--basis", "x1"]),
        "x^2 - 1 - lam"
    );
    assert_eq!(
        run(&[
            "ring",
            "mul",
            "--ring",
            "green",
            "--expr",
            "y*y - (1+chi)*y"
        ]),
        "0"
    );
    assert_eq!(
        run(&["ring", "mul", "--ring", "green", "--expr", "y*w[2]"]),
        "2*V[1](eps;2)"
    );
}

#[test]
fn usage_errors_exit_2() {
    let o = hopfore(&["ring", "mul", "--ring", "green", "--expr", "V[2](eps;0)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("V[4](eps)"), "{}", stderr(&o));
    assert_eq!(
        hopfore(&["ring", "mul", "--ring", "green", "--expr", "x +"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hopfore(&["ring", "mul", "--ring", "green", "--expr", "x", "--basis", "x1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hopfore(&["ring", "mul", "--ring", "groth", "--expr", "w[1]", "--basis", "x1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hopfore(&["algebra", "dihedral", "--m", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(hopfore(&["tensor", "--left", "x"]).status.code(), Some(2));
    assert_eq!(
        hopfore(&["verify", "presentation", "--m", "3", "--betas", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hopfore(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn disagreement_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_c4(dir.path());
    let args = |range| {
        [
            "tensor",
            "--left",
            "V[10](c0)",
            "--right",
            "V[7](c0)",
            "--algebra",
            &c4,
            "--last-range",
            range,
            "--json",
        ]
    };
    let o = hopfore(&args("p"));
    assert!(o.status.success(), "{}{}", stdout(&o), stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["closed"]["total_dim"], 70);
    let o = hopfore(&args("zero"));
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["closed"]["total_dim"], 112);
    assert_eq!(v["agree"], false);
}

#[test]
fn verify_presentation_report() {
    let o = hopfore(&["verify", "presentation", "--m", "3", "--betas", "1,-1,2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("identities hold"));
    let o = hopfore(&[
        "verify",
        "presentation",
        "--m",
        "3",
        "--betas",
        "1,-1,2",
        "--tmax",
        "2",
        "--suite",
        "groth_H",
        "--json",
    ]);
    let rows: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!rows.is_empty());
    for r in &rows {
        assert_eq!(r["status"], "pass", "{r}");
        for key in ["identity_name", "relation", "lhs", "rhs"] {
            assert!(r[key].is_string(), "{key} missing in {r}");
        }
    }
}

#[test]
fn verify_fusion_grid() {
    let o = hopfore(&[
        "verify",
        "fusion",
        "--m",
        "3",
        "--tmax",
        "2",
        "--eig-tmax",
        "1",
        "--betas",
        "1,-1",
        "--json",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["labels"], 6 * 2 + 3 * 2);
    assert_eq!(v["pairs"], 18 * 18);
    assert_eq!(v["mismatches"], 0);
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_c4(dir.path());
    let o = hopfore(&[
        "verify",
        "fusion",
        "--algebra",
        &c4,
        "--tmax",
        "3",
        "--eig-tmax",
        "1",
        "--betas",
        "1,w",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.starts_with("left\tright\tclosed\tmatrix\tagree\n"));
    assert!(text.trim_end().ends_with("0 mismatches"), "{text}");
}

#[test]
fn module_export_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.json");
    let o = hopfore(&[
        "module",
        "export",
        "--label",
        "V[2](1;1/2)",
        "--out",
        out.to_str().unwrap(),
        "--m",
        "3",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["label"], "V[2](1;1/2)");
    assert_eq!(v["dim"], 8);
    assert_eq!(v["field_order"], 6);
    assert_eq!(v["generators"].as_array().unwrap().len(), 2);
    assert_eq!(v["x_action"].as_array().unwrap().len(), 8);
}

#[test]
fn custom_algebra_summary() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_c4(dir.path());
    let o = hopfore(&["algebra", "custom", "--file", &c4, "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["s"], 4);
    assert_eq!(v["orbit_reps"], serde_json::json!(["c0"]));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"order\": 4}").unwrap();
    assert_eq!(
        hopfore(&["algebra", "custom", "--file", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}
