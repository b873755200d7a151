use std::process::Command;

fn drstax(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_drstax"))
        .args(args)
        .env_remove("DRSTAX_DICT")
        .output()
        .unwrap()
}

#[test]
fn help_exits_zero_for_every_subcommand() {
    assert_eq!(drstax(&["--help"]).status.code(), Some(0));
    for sub in [
        "build-encodings",
        "convert",
        "validate",
        "similarity",
        "smatch",
        "interpret",
        "concept-id",
        "sense-dist",
    ] {
        let out = drstax(&[sub, "--help"]);
        assert_eq!(out.status.code(), Some(0), "{sub}");
        assert!(!out.stdout.is_empty(), "{sub}");
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(drstax(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(drstax(&["convert", "--from", "xml", "--to", "lps"]).status.code(), Some(1));
    // commands that need the dictionary refuse to run without one
    assert_eq!(drstax(&["similarity", "dog.n.01", "cat.n.01"]).status.code(), Some(1));
}

#[test]
fn missing_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.lps");
    let out = drstax(&["validate", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("absent.lps"));
}

#[test]
fn validate_reports_without_a_dictionary() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.lps");
    std::fs::write(&input, "dog.n.01\nhobby.n.03 Theme -1\n\nNEGATION <1\n").unwrap();
    let report = dir.path().join("report.tsv");
    let out = drstax(&["validate", input.to_str().unwrap(), "--report", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.starts_with("block\twell_formed\tfaults"));
    assert_eq!(text.lines().count(), 3);
}
