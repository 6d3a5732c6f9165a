use std::path::PathBuf;
use std::process::{Command, Output};

fn example(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
}

fn liftcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liftcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn check_canonical_contact() {
    let out = liftcheck(&["check", example("contact_n1_r1.def").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.contains("FAIL"), "{text}");
    assert!(text.contains("η^1∘F") && text.contains("metric compatibility"));
}

#[test]
fn theorem_line() {
    let out = liftcheck(&[
        "build-j",
        example("contact_n1_r1.def").to_str().unwrap(),
        "--theorem",
        "4.1",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("(J̃)² = εI : PASS"));
}

#[test]
fn wrong_signs_exit_nonzero() {
    let def = example("contact_n1_r1.def");
    let out = liftcheck(&[
        "build-j",
        def.to_str().unwrap(),
        "--kind",
        "complete",
        "--s",
        "1",
        "--t",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("witness: component"));
}

#[test]
fn sweep_on_paracontact_is_informational() {
    let out = liftcheck(&[
        "sweep",
        example("paracontact_consistent.def").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("(s, t) = (+1, −1) [theorem 4.1] : FAIL"),
        "{text}"
    );
    assert!(text.contains("(s, t) = (+1, +1)               : PASS"));
    assert!(text.contains("(s, t) = (−1, −1)               : PASS"));
}

#[test]
fn literal_mode_rejects_paracontact() {
    let def = example("paracontact_consistent.def");
    let out = liftcheck(&["--mode", "paper-literal", "check", def.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_error_names_location() {
    let dir = std::env::temp_dir().join(format!("liftcheck-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.def");
    std::fs::write(
        &path,
        "chart M: a b\n[structure]\nepsilon = -1\nF[a] = 0, q\n",
    )
    .unwrap();
    let out = liftcheck(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("bad.def:4:11: unknown coordinate `q`"),
        "{err}"
    );
}

#[test]
fn missing_structure_is_reported() {
    let dir = std::env::temp_dir().join(format!("liftcheck-cli-ms-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chart.def");
    std::fs::write(&path, "chart M: a b c\n[tasks]\ntheorem 4.3\n").unwrap();
    let out = liftcheck(&["--format", "machine", "run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["sections"][0]["error"]
        .as_str()
        .unwrap()
        .contains("[structure]"));
}

#[test]
fn machine_and_human_agree() {
    let def = example("lorentzian_contact_n1_r1.def");
    let human = stdout(&liftcheck(&["run", def.to_str().unwrap()]));
    let machine = liftcheck(&["--format", "machine", "run", def.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&machine.stdout).unwrap();
    for sec in v["sections"].as_array().unwrap() {
        assert!(human.contains(&format!("== {}", sec["title"].as_str().unwrap())));
        for row in sec["rows"].as_array().unwrap() {
            assert!(human.contains(row["name"].as_str().unwrap()));
        }
    }
}

#[test]
fn canonical_and_fmt() {
    let out = liftcheck(&["canonical", "--n", "1", "--r", "1"]);
    let text = stdout(&out);
    assert!(text.starts_with("chart M: a b c\n"));
    let shipped = std::fs::read_to_string(example("contact_n1_r1.def")).unwrap();
    let formatted = stdout(&liftcheck(&[
        "fmt",
        example("contact_n1_r1.def").to_str().unwrap(),
    ]));
    assert_eq!(formatted, shipped);
}
