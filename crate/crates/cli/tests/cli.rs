use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;

fn scenario(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scenarios").join(name)
}

fn semireal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semireal"))
        .args(args)
        .env_remove("SEMIREAL_SEED")
        .output()
        .expect("binary runs")
}

fn run_json(name: &str) -> (Value, String) {
    let out = semireal(&["run", "--json", scenario(name).to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    (serde_json::from_str(&text).unwrap(), text)
}

fn verify_value(dir: &tempfile::TempDir, report: &Value) -> Option<i32> {
    let path = dir.path().join("report.json");
    std::fs::write(&path, serde_json::to_string_pretty(report).unwrap()).unwrap();
    semireal(&["verify", path.to_str().unwrap()]).status.code()
}

fn strs(v: &Value) -> Vec<Vec<&str>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|e| e.as_str().unwrap()).collect())
        .collect()
}

#[test]
fn finite_example_lists_the_swap_conjugator() {
    let (report, _) = run_json("psl2_f2_affine.json");
    let entries = report["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 24);
    let mut matched = 0;
    for e in entries {
        if strs(&e["element"]["linear"]) != [["1", "1"], ["1", "0"]] {
            continue;
        }
        assert_eq!(e["order"], "3");
        assert_eq!(e["rational"], "Rational");
        let v2 = e["element"]["translation"][1].as_str().unwrap();
        let found = e["certificates"].as_array().unwrap().iter().any(|c| {
            c["relation"]["kind"] == "power"
                && c["relation"]["k"] == 2
                && strs(&c["witness"]["linear"]) == [["0", "1"], ["1", "0"]]
                && c["witness"]["translation"] == serde_json::json!([v2, v2])
        });
        assert!(found, "swap conjugator missing for {}", e["element"]);
        matched += 1;
    }
    assert_eq!(matched, 4);
}

#[test]
fn sl2v_example_is_real() {
    let (report, _) = run_json("sl2v_diagonal.json");
    let e = &report["entries"][0];
    assert_eq!(e["real"], "Real");
    let c = &e["certificates"][0];
    assert_eq!(c["relation"]["kind"], "inverse");
    assert_eq!(c["verified"], true);
    assert_eq!(report["entries"][1]["real"], "NotReal");
    assert_eq!(report["entries"][2]["real"], "Real");
}

#[test]
fn empty_element_list() {
    let (report, _) = run_json("empty.json");
    assert!(report["entries"].as_array().unwrap().is_empty());
}

#[test]
fn reports_are_byte_identical() {
    for name in ["sl2v_random.json", "gsp_heisenberg.json", "sl2_f3_affine.json"] {
        assert_eq!(run_json(name).1, run_json(name).1, "{name}");
    }
}

#[test]
fn seed_from_flag_and_environment() {
    let path = scenario("sl2v_random.json");
    let path = path.to_str().unwrap();
    let default = semireal(&["run", path]).stdout;
    let flag = semireal(&["run", "--seed", "7", path]).stdout;
    let env = Command::new(env!("CARGO_BIN_EXE_semireal"))
        .args(["run", path])
        .env("SEMIREAL_SEED", "7")
        .output()
        .unwrap()
        .stdout;
    assert_ne!(default, flag);
    assert_eq!(flag, env);
}

#[test]
fn verify_accepts_fresh_and_rejects_edits() {
    let dir = tempfile::tempdir().unwrap();
    let (report, _) = run_json("affine_three_cycle.json");
    assert_eq!(verify_value(&dir, &report), Some(0));

    let mut witness = report.clone();
    witness["entries"][0]["certificates"][0]["witness"]["linear"][0][0] = Value::String("5".into());
    assert_eq!(verify_value(&dir, &witness), Some(1));

    let mut k = report.clone();
    let cert = k["entries"][0]["certificates"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|c| c["relation"]["kind"] == "power")
        .unwrap();
    cert["relation"]["k"] = serde_json::json!(4);
    assert_eq!(verify_value(&dir, &k), Some(1));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("s.json");
    std::fs::write(&bad, r#"{"schema_version": 1, "kind": "affine", "field": "Q", "elements": [{"x": [["0.5"]], "v": ["1"]}]}"#).unwrap();
    assert_eq!(semireal(&["run", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&bad, r#"{"schema_version": 9, "kind": "affine", "field": "Q"}"#).unwrap();
    assert_eq!(semireal(&["run", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(semireal(&["run", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(semireal(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn text_and_verify_only_modes() {
    let path = scenario("rotation.json");
    let out = semireal(&["run", "--text", path.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("check square law: passed"));
    let out = semireal(&["run", "--verify-only", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("verified 8 certificates"));
}

/// Paths to every scalar leaf of a JSON document.
fn leaves(v: &Value, path: &mut Vec<Value>, out: &mut Vec<Vec<Value>>) {
    match v {
        Value::Object(m) => {
            for (k, child) in m {
                path.push(Value::String(k.clone()));
                leaves(child, path, out);
                path.pop();
            }
        }
        Value::Array(a) => {
            for (i, child) in a.iter().enumerate() {
                path.push(Value::from(i));
                leaves(child, path, out);
                path.pop();
            }
        }
        _ => out.push(path.clone()),
    }
}

fn leaf_mut<'a>(v: &'a mut Value, path: &[Value]) -> &'a mut Value {
    path.iter().fold(v, |node, key| match key {
        Value::String(k) => &mut node[k.as_str()],
        Value::Number(i) => &mut node[i.as_u64().unwrap() as usize],
        _ => unreachable!(),
    })
}

fn perturb(v: &Value, salt: u64) -> Value {
    match v {
        Value::Bool(b) => Value::Bool(!b),
        Value::Number(n) => Value::from(n.as_i64().unwrap_or(0) + 1 + salt as i64),
        Value::String(s) => match s.parse::<i64>() {
            Ok(n) => Value::String((n + 1 + salt as i64).to_string()),
            Err(_) => Value::String(format!("{s}{}", salt % 7)),
        },
        Value::Null => Value::from(salt),
        _ => unreachable!(),
    }
}

fn tamper_corpus() -> Vec<Value> {
    ["psl2_f2_affine.json", "sl2v_diagonal.json", "gsp_heisenberg.json", "rotation.json", "affine_three_cycle.json"]
        .iter()
        .map(|n| run_json(n).0)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn any_single_perturbation_is_rejected(pick in 0usize..5, leaf in any::<prop::sample::Index>(), salt in 0u64..5) {
        thread_local!(static CORPUS: Vec<Value> = tamper_corpus());
        let report = CORPUS.with(|c| c[pick].clone());
        let mut paths = Vec::new();
        leaves(&report, &mut Vec::new(), &mut paths);
        let path = leaf.get(&paths);
        let mut tampered = report.clone();
        let slot = leaf_mut(&mut tampered, path);
        *slot = perturb(slot, salt);
        let dir = tempfile::tempdir().unwrap();
        prop_assert_eq!(verify_value(&dir, &tampered), Some(1), "path {:?}", path);
    }
}
