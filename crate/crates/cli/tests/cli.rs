use std::fs;
use std::process::{Command, Output};

fn planecheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planecheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn pentaline_suite_prints_one_line_per_axiom() {
    let o = planecheck(&["suite", "--model", "pentaline"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    assert!(
        text.contains("pentaline T3 Fails a=A b=B c=C d=E"),
        "{text}"
    );
}

#[test]
fn json_to_stdout_is_the_only_output() {
    let o = planecheck(&[
        "check", "--model", "gf5-mid", "--axioms", "B4,I1", "--json", "-",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["axiom"], "B4");
    assert_eq!(reports[0]["status"], "Fails");
    assert_eq!(reports[0]["strategy"]["type"], "exhaustive");
    assert_eq!(reports[0]["elapsed_ms"], 0);
    assert_eq!(reports[1]["status"], "Holds");
}

#[test]
fn expectations_set_the_exit_code() {
    let dir = std::env::temp_dir().join(format!("planecheck-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.json");
    let bad = dir.join("bad.json");
    fs::write(
        &good,
        r#"[{"axiom":"B4","status":"Fails"},{"axiom":"B3","status":"Holds"}]"#,
    )
    .unwrap();
    fs::write(&bad, r#"[{"axiom":"B4","status":"Holds"}]"#).unwrap();
    let run = |p: &std::path::Path| {
        planecheck(&[
            "suite",
            "--model",
            "gf5-mid",
            "--expect",
            p.to_str().unwrap(),
        ])
        .status
        .code()
    };
    assert_eq!(run(&good), Some(0));
    assert_eq!(run(&bad), Some(1));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(
        planecheck(&["check", "--model", "prism", "--axioms", "Dedekind5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        planecheck(&["check", "--model", "prism", "--axioms", "B9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        planecheck(&["suite", "--model", "nowhere"]).status.code(),
        Some(2)
    );
    assert_eq!(
        planecheck(&["suite", "--model", "prism", "--strategy", "exhaustive"])
            .status
            .code(),
        Some(2)
    );
    let o = planecheck(&[
        "angles",
        "--lines",
        "vertical:F",
        "vertical:A",
        "vertical:B",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 9"));
}

#[test]
fn missing_counterexample_exits_with_one() {
    assert_eq!(
        planecheck(&["counterexample", "--model", "punctured", "--target", "t3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn prism_pasch_counterexample() {
    let o = planecheck(&["counterexample", "--model", "prism", "--target", "pasch"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["d"], "vertical:D");
    assert_eq!(v["p"], "point:A,0");
}

#[test]
fn angles_of_the_canonical_triangle() {
    let o = planecheck(&[
        "angles",
        "--lines",
        "harmonic:h0=0,h1=1",
        "harmonic:h0=0,h1=2",
        "harmonic:h0=-1/2+1/2*s5,h1=2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let sum = v["sum"].as_f64().unwrap();
    let excess = v["excess"].as_f64().unwrap();
    assert!((sum - std::f64::consts::PI - excess).abs() < 1e-12);
    assert!(excess > 0.0);
    for p in v["pairs"].as_array().unwrap() {
        let total = p["theta"].as_f64().unwrap() + p["complement"].as_f64().unwrap();
        assert!((total - std::f64::consts::PI).abs() < 1e-12);
    }
}

#[test]
fn table_lists_ten_triples() {
    let o = planecheck(&["table"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    assert!(text.contains("ABC: (ABC)"));
    assert!(text.contains("ABE: (BAE)"));
}
