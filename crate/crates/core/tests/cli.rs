use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/fixtures");
    path.push(name);
    path.to_string_lossy().into_owned()
}

fn run_with(args: &[&str], env: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_argsolve"));
    cmd.args(args).env_remove("ARGSOLVE_MAX_ARGS");
    if let Some(value) = env {
        cmd.env("ARGSOLVE_MAX_ARGS", value);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_with(args, None)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn preferred_extensions_of_nixon() {
    let out = run(&["extensions", "-f", &fixture("nixon.tgf"), "-s", "preferred"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[a]\n[b]\n");
}

#[test]
fn json_extensions() {
    let out = run(&[
        "extensions",
        "-f",
        &fixture("floating.tgf"),
        "-s",
        "complete",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[[],[\"a\",\"e\"],[\"b\",\"e\"]]\n");
}

#[test]
fn limit_truncates_sorted_output() {
    let out = run(&[
        "extensions",
        "-f",
        &fixture("floating.apx"),
        "-s",
        "admissible",
        "--limit",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn no_extensions() {
    let out = run(&["extensions", "-f", &fixture("triangle.tgf"), "-s", "stable"]);
    assert_eq!(stdout(&out), "NO EXTENSIONS\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn formats_agree() {
    for sem in ["naive", "admissible", "preferred", "grounded"] {
        let tgf = run(&["extensions", "-f", &fixture("floating.tgf"), "-s", sem]);
        let apx = run(&["extensions", "-f", &fixture("floating.apx"), "-s", sem]);
        assert_eq!(tgf.stdout, apx.stdout, "{sem}");
    }
    let tgf = run(&["classify", "-f", &fixture("nixon.tgf")]);
    let apx = run(&["classify", "-f", &fixture("nixon.apx")]);
    assert_eq!(tgf.stdout, apx.stdout);
}

#[test]
fn explicit_format_overrides_extension() {
    let copy = std::env::temp_dir().join(format!("argsolve-nixon-{}.txt", std::process::id()));
    std::fs::copy(fixture("nixon.apx"), &copy).unwrap();
    let path = copy.to_string_lossy().into_owned();
    let guessed = run(&["validate", "-f", &path]);
    assert_eq!(guessed.status.code(), Some(2));
    let given = run(&["validate", "-f", &path, "--format", "apx"]);
    assert_eq!(stdout(&given), "ok: 2 arguments, 2 attacks\n");
    std::fs::remove_file(copy).unwrap();
}

#[test]
fn justification_exit_codes() {
    let floating = fixture("floating.tgf");
    let yes = run(&[
        "justify",
        "-f",
        &floating,
        "-s",
        "preferred",
        "-a",
        "e",
        "--mode",
        "sceptical",
    ]);
    assert_eq!(
        (yes.status.code(), stdout(&yes).as_str()),
        (Some(0), "YES\n")
    );
    let no = run(&[
        "justify",
        "-f",
        &floating,
        "-s",
        "grounded",
        "-a",
        "e",
        "--mode",
        "skeptical",
    ]);
    assert_eq!((no.status.code(), stdout(&no).as_str()), (Some(1), "NO\n"));
    let cred = run(&[
        "justify",
        "-f",
        &floating,
        "-s",
        "complete",
        "-a",
        "a",
        "--mode",
        "credulous",
    ]);
    assert_eq!(cred.status.code(), Some(0));
    let unsupported = run(&[
        "justify",
        "-f",
        &floating,
        "-s",
        "naive",
        "-a",
        "a",
        "--mode",
        "credulous",
    ]);
    assert_eq!(unsupported.status.code(), Some(2));
    let unknown = run(&[
        "justify",
        "-f",
        &floating,
        "-s",
        "preferred",
        "-a",
        "q",
        "--mode",
        "credulous",
    ]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains('q'));
}

#[test]
fn grounded_trace() {
    let out = run(&["grounded", "-f", &fixture("israel.tgf"), "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[c]\n[a,c]\n[a,c]\n[a,c]\n");
    let plain = run(&["grounded", "-f", &fixture("israel.tgf")]);
    assert_eq!(stdout(&plain), "[a,c]\n");
}

#[test]
fn malformed_inputs() {
    for name in ["malformed.tgf", "malformed.apx"] {
        let out = run(&["extensions", "-f", &fixture(name), "-s", "grounded"]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(out.stdout.is_empty());
        assert!(stderr(&out).contains(name));
    }
    let missing = run(&["validate", "-f", &fixture("absent.tgf")]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(
        run(&["extensions", "-s", "preferred"]).status.code(),
        Some(2)
    );
    let bad = run(&[
        "extensions",
        "-f",
        &fixture("nixon.tgf"),
        "-s",
        "semi-stable",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("extensions"));
}

#[test]
fn enumeration_bound() {
    let big = fixture("cycle30.tgf");
    let refused = run(&["extensions", "-f", &big, "-s", "complete"]);
    assert_eq!(refused.status.code(), Some(3));
    assert!(refused.stdout.is_empty());

    let grounded = run(&["extensions", "-f", &big, "-s", "grounded"]);
    assert_eq!(
        (grounded.status.code(), stdout(&grounded).as_str()),
        (Some(0), "[]\n")
    );

    let raised = run(&[
        "extensions",
        "-f",
        &big,
        "-s",
        "preferred",
        "--max-args",
        "30",
    ]);
    assert_eq!(raised.status.code(), Some(0));
    assert_eq!(stdout(&raised).lines().count(), 2);

    let from_env = run_with(&["extensions", "-f", &big, "-s", "stable"], Some("30"));
    assert_eq!(from_env.status.code(), Some(0));
    let flag_wins = run_with(
        &["extensions", "-f", &big, "-s", "stable", "--max-args", "10"],
        Some("30"),
    );
    assert_eq!(flag_wins.status.code(), Some(3));

    let report = run(&["classify", "-f", &big]);
    assert_eq!(report.status.code(), Some(3));
    let text = stdout(&report);
    assert!(text.contains("arguments: 30\n"));
    assert!(text.contains("even_cycle: true\n"));
    assert!(text.contains("coherent: null\n"));
}

#[test]
fn classify_report() {
    let out = run(&["classify", "-f", &fixture("floating.apx"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["arguments"], 4);
    assert_eq!(value["relatively_grounded"], false);
    assert_eq!(value["count.preferred"], 2);
}

#[test]
fn dot_and_validate() {
    let dot = run(&["dot", "-f", &fixture("nixon.apx")]);
    assert_eq!(
        stdout(&dot),
        "digraph af {\n    \"a\";\n    \"b\";\n    \"a\" -> \"b\";\n    \"b\" -> \"a\";\n}\n"
    );
    let ok = run(&["validate", "-f", &fixture("israel.tgf")]);
    assert_eq!(stdout(&ok), "ok: 3 arguments, 3 attacks\n");
}

#[test]
fn output_is_reproducible() {
    for args in [
        vec!["extensions", "-s", "naive", "-f"],
        vec!["classify", "-f"],
        vec!["dot", "-f"],
    ] {
        let mut args = args;
        let path = fixture("floating.tgf");
        args.push(&path);
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}
