use std::process::{Command, Output};

fn revcubic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revcubic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn eval_exit_codes() {
    let out = revcubic(&["eval", "--point", "1,0,0"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("value: 0\non-surface"));

    let out = revcubic(&["eval", "--point", "9/7,15/14,23/14"]);
    assert_eq!(code(&out), 0);

    let out = revcubic(&["eval", "--point", "1,1,1"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("value: -1"));

    assert_eq!(code(&revcubic(&["eval", "--point", "1,oops,0"])), 2);
    assert_eq!(code(&revcubic(&["eval", "--point", "1,0"])), 2);
    assert_eq!(code(&revcubic(&["eval"])), 2);
}

#[test]
fn eval_other_rho_and_decimals() {
    // 1^3 + 0 + 0 - rho * 0 = 1 for any rho
    assert_eq!(code(&revcubic(&["eval", "--point", "1.0,0,0", "--rho", "-2"])), 0);
    let out = revcubic(&["eval", "--point", "0.5,0.5,0.5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // 3/8 - 3/8 - 1
    assert_eq!(v["results"]["value"], "-1");
    assert_eq!(v["command"], "eval");
    assert!(v.get("seed").is_some());
}

#[test]
fn mesh_counts_and_determinism() {
    let args = ["mesh", "--n-t", "2", "--n-theta", "3", "--t-min", "1", "--t-max", "4"];
    let a = revcubic(&args);
    assert_eq!(code(&a), 0);
    let text = stdout(&a);
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 6);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 6);
    assert_eq!(a.stdout, revcubic(&args).stdout);
}

#[test]
fn mesh_default_to_file() {
    let dir = std::env::temp_dir().join(format!("revcubic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (p1, p2) = (dir.join("a.obj"), dir.join("b.obj"));
    for p in [&p1, &p2] {
        assert_eq!(code(&revcubic(&["mesh", "-o", p.to_str().unwrap()])), 0);
    }
    let (a, b) = (std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 96 * 96);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 2 * 95 * 96);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn mesh_rejects_bad_grids() {
    assert_eq!(code(&revcubic(&["mesh", "--t-min", "0"])), 2);
    assert_eq!(code(&revcubic(&["mesh", "--n-t", "1"])), 2);
    assert_eq!(code(&revcubic(&["mesh", "--t-min", "5", "--t-max", "2"])), 2);
}

#[test]
fn meridian_and_slice() {
    let out = revcubic(&["meridian", "--n-t", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("t,x,y,z\n"));
    assert_eq!(text.lines().count(), 5);

    let out = revcubic(&["slice", "--t", "3", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"]["center"], serde_json::json!([1.0, 1.0, 1.0]));
    assert_eq!(v["results"]["points"].as_array().unwrap().len(), 8);
    assert_eq!(code(&revcubic(&["slice", "--t", "-1"])), 2);
}

#[test]
fn rotate_surface_point() {
    let out = revcubic(&["rotate", "--t", "2", "--theta", "1", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["results"]["canonical_residual"].as_f64().unwrap().abs() < 1e-12);
    let out = revcubic(&["rotate", "--point", "1,1,1"]);
    assert!(stdout(&out).contains("on the axis"));
    assert_eq!(code(&revcubic(&["rotate"])), 2);
}

#[test]
fn rational_commands() {
    let out = revcubic(&["rational", "gen", "--u", "2", "--r", "1/3"]);
    assert_eq!(stdout(&out).trim(), "9/7,15/14,23/14");
    assert_eq!(code(&revcubic(&["rational", "gen", "--u", "0", "--r", "1"])), 2);

    let out = revcubic(&["rational", "member", "--point", "9/7,15/14,23/14", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"], serde_json::json!({"status": "in-family", "u": "2", "r": "1/3"}));

    let out = revcubic(&["rational", "member", "--point", "18/7,16/7,15/7"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("sum-not-a-rational-square"));

    assert_eq!(code(&revcubic(&["rational", "member", "--point", "1,1,1"])), 1);
}

#[test]
fn rational_enum_outputs() {
    let out = revcubic(&["rational", "enum", "--height", "1"]);
    assert_eq!(stdout(&out), "x,y,z\n0,0,1\n0,1,0\n1,0,0\n");
    let out = revcubic(&["rational", "enum", "--height", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["results"].as_array().unwrap().len() >= 3);
    assert_eq!(code(&revcubic(&["rational", "enum", "--height", "0"])), 2);
    assert_eq!(
        revcubic(&["rational", "enum", "--height", "3", "--with-height"]).stdout,
        revcubic(&["rational", "enum", "--height", "3", "--with-height"]).stdout
    );
}

#[test]
fn analyze_reports() {
    for s in ["hcubic", "canon", "rotated-scaled"] {
        let out = revcubic(&["analyze", "singular", "--surface", s, "--json"]);
        assert_eq!(code(&out), 0, "{s}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["results"]["count"], 3);
        assert!(v["results"]["kinds"].as_array().unwrap().iter().all(|k| k == "binode"));
    }
    assert_eq!(code(&revcubic(&["analyze", "singular", "--surface", "fermat"])), 2);

    let out = revcubic(&["analyze", "lines", "--trials", "50", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["certificates"].as_array().unwrap().len(), 4);
    assert_eq!(v["results"]["finite_gaussian"]["contained"], 0);
}

#[test]
fn revolution_check_exit_codes() {
    assert_eq!(code(&revcubic(&["revolution-check", "--samples", "200"])), 0);
    let out = revcubic(&["revolution-check", "--rho", "0", "--samples", "200", "--json"]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["results"]["max_residual"].as_f64().unwrap() > 1e-3);
    assert!(v["results"]["witness"].is_object());
}

#[test]
fn verify_suite() {
    let out = revcubic(&["verify", "--json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["command", "inputs", "results", "certificates", "seed"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["results"]["failed"], 0);
    for c in v["certificates"].as_array().unwrap() {
        for ch in c["checks"].as_array().unwrap() {
            assert_eq!(ch["status"], "pass");
            assert!(ch.get("name").is_some() && ch.get("witness").is_some());
        }
    }

    let out = revcubic(&["verify", "--rho", "2.999"]);
    assert_eq!(code(&out), 3);
    let text = stdout(&out);
    assert!(text.contains("[FAIL]") && text.contains("max residual"));
}
