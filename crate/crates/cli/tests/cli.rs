use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primwords"))
        .args(args)
        .env_remove("PRIMWORDS_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid json")
}

#[test]
fn word_text() {
    assert_eq!(
        stdout(&["word", "3/5"]),
        "W=BABAABAA E=ABABAABA cf=[0,1,1,2] level=4\n"
    );
    assert_eq!(
        stdout(&["word", "3/5", "--scheme", "cf"]),
        "CF=BABAABAA cf=[0,1,1,2] level=4\n"
    );
    assert_eq!(stdout(&["word", "1/0"]), "W=B E=B cf=none level=0\n");
}

#[test]
fn word_json_envelope() {
    let v = json(&["word", "3/2"]);
    assert_eq!(v["command"], "word");
    assert_eq!(v["input"], "3/2");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["result"]["w"], "BBABA");
    assert_eq!(v["result"]["e"], "BABAB");
    assert_eq!(v["result"]["level"], 3);
}

#[test]
fn check_verdicts() {
    assert_eq!(stdout(&["check", "BABAB"]), "primitive p/q=3/2\n");
    assert_eq!(stdout(&["check", "AABBB"]), "not primitive\n");
    assert_eq!(stdout(&["check", "BBABBABA"]), "primitive p/q=5/3\n");
    let v = json(&["check", "AbAbb"]);
    assert_eq!(v["result"]["primitive"], true);
    assert_eq!(v["result"]["verdict"]["slope"], "3/2");
}

#[test]
fn palindromes() {
    assert_eq!(stdout(&["palindrome", "2/3"]), "palindrome ABABA\n");
    assert_eq!(stdout(&["palindrome", "3/5"]), "pair ABABA ABA\n");
}

#[test]
fn farey_text() {
    assert_eq!(
        stdout(&["farey", "3/5"]),
        "sequence=1/1,1/2,2/3,3/5 level=4 neighbors=1/2,2/3 approximants=0/1,1/1,1/2,3/5 cf=[0,1,1,2]\n"
    );
}

#[test]
fn cutseq_starts_and_svg() {
    assert!(stdout(&["cutseq", "3/2"]).starts_with("word=ABABB "));
    assert!(stdout(&["cutseq", "3/2", "--start", "bottom"]).starts_with("word=BABAB "));
    assert!(stdout(&["cutseq", "3/2", "--start", "middle"]).starts_with("word=BABAB "));
    assert!(stdout(&["cutseq", "3/2", "--start", "2"]).starts_with("word=ABBAB "));
    assert!(stdout(&["cutseq", "-3/2"]).contains("simple=true"));
    assert_eq!(
        stdout(&["cutseq", "--word", "AABB"]),
        "word=AABB vertical=1 horizontal=1 corner=2 simple=false\n"
    );

    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    stdout(&["cutseq", "12/5", "--svg", a.to_str().unwrap()]);
    stdout(&["cutseq", "12/5", "--svg", b.to_str().unwrap()]);
    let first = std::fs::read(&a).unwrap();
    assert!(first.starts_with(b"<?xml"));
    assert_eq!(first, std::fs::read(&b).unwrap());
}

#[test]
fn associates() {
    assert!(stdout(&["associates", "1/2", "2/3"]).starts_with("associates det=-1"));
    assert!(stdout(&["associates", "1/2", "3/4"]).starts_with("not associates det=-2"));
    let v = json(&["associates", "2/5", "1/2"]);
    assert_eq!(v["result"]["neighbors"], true);
    assert_eq!(v["result"]["generating_pair"], true);
}

#[test]
fn enumerate_feeds_check() {
    let tsv = stdout(&["--format", "tsv", "enumerate", "--max-level", "5"]);
    let mut lines = tsv.lines();
    assert_eq!(lines.next(), Some("rational\tW\tE\tlevel"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 2 + 1 + 2 + 4 + 8 + 16);
    for row in rows.iter().filter(|r| r[1].len() > 1) {
        for word in [row[1], row[2]] {
            let line = stdout(&["check", word]);
            assert_eq!(line, format!("primitive p/q={}\n", row[0]));
        }
    }
    let v = json(&["enumerate", "--max-level", "2"]);
    assert_eq!(v["result"]["items"].as_array().unwrap().len(), 5);
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_primwords"))
        .args(["palindrome", "1/2"])
        .env("PRIMWORDS_FORMAT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["kind"], "single_palindrome");
}

#[test]
fn cross_check_small() {
    let out = stdout(&["cross-check", "--max-len", "5"]);
    assert!(out.contains("disagreements=0"), "{out}");
}

#[test]
fn bad_input_exits_one_and_names_the_token() {
    let out = run(&["check", "ABX"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("'X'") && err.contains("position 2"), "{err}");

    let out = run(&["word", "2/4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2/4"));

    let out = run(&["palindrome", "-1/2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("-1/2"));

    let out = run(&["cutseq", "3/5", "--start", "middle"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["word"]).status.code(), Some(2));
    assert_eq!(
        run(&["cross-check", "--max-len", "15"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["cutseq", "3/2", "--word", "AB"]).status.code(),
        Some(2)
    );
}

#[test]
fn json_matches_golden_files() {
    let cases: [(&str, &[&str]); 5] = [
        ("word_3_5", &["word", "3/5"]),
        ("check_BABAB", &["check", "BABAB"]),
        ("farey_3_5", &["farey", "3/5"]),
        ("palindrome_3_5", &["palindrome", "3/5"]),
        ("cutseq_3_2", &["cutseq", "3/2"]),
    ];
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (name, args) in cases {
        let mut expected: Value = serde_json::from_str(
            &std::fs::read_to_string(dir.join(format!("{name}.json"))).unwrap(),
        )
        .unwrap();
        // the version field tracks the crate, not the golden file
        expected["version"] = env!("CARGO_PKG_VERSION").into();
        assert_eq!(json(args), expected, "{name}");
    }
}
