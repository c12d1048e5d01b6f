use std::process::{Command, Output};

fn biquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biquad")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn config(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("biquad-cli-{}-{name}.toml", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn classify_from_config() {
    let path = config("c8", "characteristic = 3\nq = { root_of_unity = 2 }\nmu = 0\n");
    let o = biquad(&["classify", "--config", path.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("tag C8") && out.contains("p 3") && out.contains("n 2"), "{out}");

    let o = biquad(&["--json", "classify", "--config", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tag"], "C8");
    assert_eq!(v["n"], 2);
}

#[test]
fn centre_of_c11_is_verified() {
    let o = biquad(&["--json", "center", "--verify", "--case", "C11"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 5);
    assert!(v["central"].as_array().unwrap().iter().all(|b| b == true));
}

#[test]
fn dims_of_three_factors() {
    let o = biquad(&["--json", "dims", "--n", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for k in ["gk", "krull", "classical_krull", "global"] {
        assert_eq!(v[k], 9);
    }
}

#[test]
fn products_are_normalized() {
    let o = biquad(&["mul", "x2", "x1", "--case", "C4"]);
    assert_eq!(stdout(&o).trim(), "-x1*x2");
    let o = biquad(&["mul", "x1^-1", "x1", "--case", "C4", "--mode", "loc"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn negative_exponent_is_rejected_in_a() {
    let o = biquad(&["mul", "x1^-1", "x1", "--case", "C4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("negative exponent"));
}

#[test]
fn centralizer_agrees_with_oracle() {
    let o = biquad(&["--json", "centralizer", "--degree", "4", "--case", "C8"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["agrees"], true);
}

#[test]
fn swap_images_checked() {
    let o = biquad(&["automorphism-verify", "x2", "x1", "x3", "--case", "C7a"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = biquad(&["automorphism-verify", "x2", "x1", "x3", "--case", "C1"]);
    assert_eq!(stdout(&o).trim(), "false");
}

#[test]
fn strata_routing() {
    let o = biquad(&["--json", "strata", "x2", "--case", "C4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["stratum"], "contains_x2");
    let o = biquad(&["--json", "strata", "x2^2 - 1", "--case", "C4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["branch"], 1);
    let o = biquad(&["strata", "x2^2", "--case", "C4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn simplicity_and_normality() {
    assert!(stdout(&biquad(&["simple", "--case", "C1"])).contains("is simple"));
    assert!(stdout(&biquad(&["simple", "--case", "C4"])).contains("not simple"));
    assert_eq!(stdout(&biquad(&["normal", "x1 + x2", "--case", "C1"])).trim(), "not normal");
}

#[test]
fn missing_parameters_is_a_usage_error() {
    assert_eq!(biquad(&["classify"]).status.code(), Some(2));
}

#[test]
fn verify_all_reports_every_suite() {
    let o = biquad(&["--json", "verify-all", "--degree", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 11);
    let all = reports.iter().all(|r| r["passed"] == true);
    assert_eq!(o.status.success(), all);
    assert_eq!(v["passed"], all);
}
