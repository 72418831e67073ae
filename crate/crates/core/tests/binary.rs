use std::process::Command;

fn hopfkit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfkit")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn eval_prints_normal_form() {
    let (code, out, _) = hopfkit(&["eval", "--algebra", "fq-g1", "x*mu"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "mu*x - 2*i*w*mu");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(hopfkit(&["eval", "B +"]).0, 2);
    assert_eq!(hopfkit(&["verify", "no-such-suite"]).0, 2);
    assert_eq!(hopfkit(&["verify", "jform", "--preset", "other"]).0, 2);
    assert_eq!(hopfkit(&["frobnicate"]).0, 2);
}

#[test]
fn failing_checks_exit_1() {
    let (code, out, _) = hopfkit(&["verify", "pairing", "--preset", "galilei-as-printed", "--degree", "1"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"status\": \"fail\""));
}

#[test]
fn verify_writes_report_and_config() {
    let dir = std::env::temp_dir().join(format!("hopfkit-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.cfg");
    let out = dir.join("report.json");
    std::fs::write(&cfg, format!("window=3\nsuites=relations,jform\noutput={}\n", out.display())).unwrap();
    let (code, stdout, _) = hopfkit(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 0);
    let file = std::fs::read_to_string(&out).unwrap();
    assert_eq!(file.trim(), stdout.trim());
    let v: serde_json::Value = serde_json::from_str(&file).unwrap();
    assert_eq!(v["params"]["relations.window"], "3");
    let (_, again, _) = hopfkit(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(again, stdout);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn pair_and_matrix() {
    assert_eq!(hopfkit(&["pair", "B", "v"]).1.trim(), "i");
    assert_eq!(hopfkit(&["pair", "K", "x", "--convention", "as-printed"]).1.trim(), "w");
    let (code, out, _) = hopfkit(&["matrix", "--op", "K", "--window", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"[["0","0","0"],["1","0","0"],["0","1","0"]]"#);
}

#[test]
fn induce_commands() {
    assert_eq!(hopfkit(&["induce", "--preset", "galilei", "--window", "3", "--suite", "unitarity"]).0, 0);
    assert_eq!(hopfkit(&["induce", "--generic", "--corep", "trivial", "--degree", "2"]).0, 0);
    assert_eq!(hopfkit(&["verify-functional", "--form", "lemma", "--window", "3"]).0, 0);
    let (code, out, _) = hopfkit(&["homogeneous-space", "--degree", "2", "--side", "right"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().collect::<Vec<_>>(), vec!["1", "v", "v^2"]);
}
