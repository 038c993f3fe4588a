use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_frobenius"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn numbers_symbolic_table() {
    let (code, out, _) = run(&["numbers", "--max-n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "H_0 = 1\nH_1 = 1/(-1 + u)\nH_2 = (1 + u)/(1 - 2*u + u^2)\n");
}

#[test]
fn numbers_at_pole_is_an_error() {
    let (code, _, err) = run(&["numbers", "--u", "1", "--max-n", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("pole"), "{err}");
}

#[test]
fn poly_evaluates_euler_value() {
    let (code, out, _) = run(&["poly", "--n", "3", "--u", "-1", "--x", "1/3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "13/108");
}

#[test]
fn lerch_reports_tail() {
    let (code, out, _) = run(&["lerch", "--z", "0.5,0", "--s", "1", "--a", "1", "--tol", "1e-12"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("value = 1.3862943611"), "{out}");
    assert!(out.contains("terms_used"));
    let (code, _, _) = run(&["lerch", "--z", "2,0", "--s", "1", "--a", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_subset_csv() {
    let (code, out, _) = run(&["verify", "--suite", "eq26,corollary4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("identity_id,parameters,"));
    assert!(out.lines().any(|l| l.starts_with("corollary4,m=1,-1/2,-2,3/2,reported")), "{out}");
}

#[test]
fn strict_mode_fails_on_reported_residuals() {
    let (code, _, _) = run(&["verify", "--suite", "corollary4", "--strict"]);
    assert_eq!(code, 1);
}

#[test]
fn bad_config_exits_two_and_lists_problems() {
    let dir = std::env::temp_dir().join(format!("fe-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"u_samples": ["1"], "x_samples": ["3/2"], "fourier_n_schedule": [100]}"#).unwrap();
    let (code, out, err) = run(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert_eq!(err.matches("configuration error").count(), 3, "{err}");
    let (code, _, _) = run(&["verify", "--suite", "no-such-id"]);
    assert_eq!(code, 2);
}

#[test]
fn report_written_to_file() {
    let dir = std::env::temp_dir().join(format!("fe-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.md");
    let (code, out, _) = run(&["verify", "--suite", "theorem3", "--format", "markdown", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("## theorem3\n"));
}
