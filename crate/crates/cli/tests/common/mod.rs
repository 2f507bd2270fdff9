#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", self.stdout))
    }
}

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn fixture(name: &str) -> String {
    root().join("fixtures").join(name).to_string_lossy().into_owned()
}

pub fn tori(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_tori")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Validate `instance` against `#/definitions/<def>` of the shipped schema.
pub fn schema_errors(def: &str, instance: &Value) -> Vec<String> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas/outputs.schema.json");
    let mut schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert!(schema["definitions"].get(def).is_some(), "no schema for {def}");
    schema["$ref"] = Value::String(format!("#/definitions/{def}"));
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    validator.iter_errors(instance).map(|e| format!("{} at {}", e, e.instance_path)).collect()
}

/// `{"vars":[var],"terms":[..]}` from `(exponent, coefficient)` pairs in
/// canonical (descending) order.
pub fn poly_json(var: &str, terms: &[(i64, i64)]) -> Value {
    let mut terms = terms.to_vec();
    terms.sort_by_key(|&(e, _)| std::cmp::Reverse(e));
    serde_json::json!({
        "vars": [var],
        "terms": terms.iter().map(|(e, c)| serde_json::json!({"exp": [e], "coef": c.to_string()})).collect::<Vec<_>>(),
    })
}
