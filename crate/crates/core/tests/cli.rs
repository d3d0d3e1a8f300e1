//! End-to-end checks of the command-line interface: exit codes, output
//! shapes, and determinism of the JSON reports.

use std::process::{Command, Output};

fn klein7(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klein7"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn expand_z_prints_the_nine_coefficients() {
    let out = klein7(&["expand", "z", "--order", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in [
        "-1\t1", "0\t4", "1\t2", "2\t8", "3\t-5", "4\t-4", "5\t-10", "6\t12", "7\t-7",
    ] {
        assert!(text.contains(line), "missing {line:?} in:\n{text}");
    }
}

#[test]
fn expand_u_low_order_has_single_term() {
    let out = klein7(&["expand", "u", "--order", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(lines, vec!["1/56\t1"]);
}

#[test]
fn expand_h_order_zero_shows_the_pole() {
    let out = klein7(&["expand", "h", "--order", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(lines, vec!["-1\t1"]);
}

#[test]
fn expand_json_shape() {
    let out = klein7(&["expand", "u", "--order", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["name"], "u");
    assert_eq!(v["series"]["grid"], 168);
    assert_eq!(v["series"]["lead"], 3);
    assert_eq!(v["series"]["coefficients"][0][0], 3);
    assert_eq!(v["series"]["coefficients"][0][1], "1");
}

#[test]
fn expand_unknown_name_exits_2() {
    let out = klein7(&["expand", "nonesuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_id_exit_codes() {
    let out = klein7(&["verify", "--id", "cor1", "--order", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let out = klein7(&["verify", "--id", "nonesuch"]);
    assert_eq!(out.status.code(), Some(2));
    // Klein check ids are addressable too.
    let out = klein7(&["verify", "--id", "klein-T"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_order_below_minimum_exits_2() {
    let out = klein7(&["verify", "--all", "--order", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_json_report_is_deterministic() {
    let dir = std::env::temp_dir();
    let p1 = dir.join("klein7-report-1.json");
    let p2 = dir.join("klein7-report-2.json");
    for p in [&p1, &p2] {
        let out = klein7(&[
            "verify",
            "--all",
            "--order",
            "8",
            "--format",
            "json",
            "--report",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let normalize = |path: &std::path::Path| {
        let v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        let mut v = v;
        for r in v["results"].as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("wall_time_ms");
        }
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(normalize(&p1), normalize(&p2));
    let body = normalize(&p1);
    assert!(body.contains("\"id\":\"cor1\""));
    assert!(body.contains("\"status\":\"pass\""));
    let _ = std::fs::remove_file(p1);
    let _ = std::fs::remove_file(p2);
}

#[test]
fn text_and_json_statuses_agree() {
    let text = stdout(&klein7(&["verify", "--id", "eq22", "--order", "8"]));
    let json_out = stdout(&klein7(&[
        "verify", "--id", "eq22", "--order", "8", "--format", "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&json_out).unwrap();
    assert_eq!(v["results"][0]["status"], "pass");
    assert!(text.contains("pass"));
}

#[test]
fn numeric_exit_codes() {
    let out = klein7(&["numeric", "--check", "thm3", "--tau", "0.2,1.1"]);
    assert_eq!(out.status.code(), Some(0));
    let out = klein7(&["numeric", "--check", "thm4", "--tau", "0.2,1.1"]);
    assert_eq!(out.status.code(), Some(0));
    // Lower half-plane is rejected as a usage error.
    let out = klein7(&["numeric", "--check", "thm2", "--tau", "0.0,-1.0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = klein7(&["numeric", "--check", "nonesuch", "--tau", "0.2,1.1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = klein7(&["numeric", "--check", "thm3", "--tau", "garbage"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn numeric_defaults_to_the_five_points() {
    let out = klein7(&["numeric", "--check", "theta-quasi", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 5);
}

#[test]
fn roots_text_and_json() {
    let text = stdout(&klein7(&["roots"]));
    assert!(text.contains("3*z^2 + z^3 + z^4 + 3*z^5"), "{text}");
    assert!(text.contains("r + r' + r''  = 8"), "{text}");
    let out = klein7(&["roots", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let results = v["results"].as_array().unwrap();
    let r = results.iter().find(|e| e["name"] == "r").unwrap();
    let coeffs: Vec<&str> = r["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, vec!["4", "0", "3", "1", "1", "3"]);
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = std::env::temp_dir();
    let cfg = dir.join("klein7-test-config.txt");
    std::fs::write(&cfg, "# test config\norder=8\nformat=json\n").unwrap();
    let out = klein7(&["--config", cfg.to_str().unwrap(), "verify", "--id", "eq22"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["config"]["order"], 8);
    // A flag wins over the file.
    let out = klein7(&[
        "--config",
        cfg.to_str().unwrap(),
        "verify",
        "--id",
        "eq22",
        "--order",
        "6",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["config"]["order"], 6);
    // Bad config keys are usage errors.
    std::fs::write(&cfg, "bogus=1\n").unwrap();
    let out = klein7(&["--config", cfg.to_str().unwrap(), "verify", "--id", "eq22"]);
    assert_eq!(out.status.code(), Some(2));
    let _ = std::fs::remove_file(cfg);
}

#[test]
fn verify_failure_exits_1() {
    // There is no registry entry that fails on healthy code, so check the
    // exit path through a numeric check with an unreachable tolerance...
    // which is an input error, not a failure. Instead drive the failure
    // branch via a perturbed tolerance on a numeric check that cannot meet
    // it: theta-quasi errors are ~1e-16, so ask for better than that.
    let out = klein7(&[
        "numeric",
        "--check",
        "theta-quasi",
        "--tau",
        "0.2,1.1",
        "--tol",
        "1e-18",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
