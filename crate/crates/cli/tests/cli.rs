//! End-to-end tests of the `wkwords` binary: golden text outputs for the
//! worked examples, JSON shape and round-trip stability, exit codes.

use std::process::{Command, Output};

fn wkwords(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wkwords"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = wkwords(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn json_of(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout_of(args)).expect("valid json")
}

#[test]
fn theta_conj_prints_the_elements_in_canonical_order() {
    assert_eq!(
        stdout_of(&["theta-conj", "aac", "--theta", "ab,c"]),
        "aac\ncaa\ncba\ncbb\n"
    );
}

#[test]
fn theta_conj_of_the_empty_word_is_the_lambda_singleton() {
    assert_eq!(stdout_of(&["theta-conj", "", "--theta", "ab,c"]), "\u{3bb}\n");
}

#[test]
fn worked_theta_conjugate_sets_render_verbatim() {
    let expectations = [
        ("aac", "aac\ncaa\ncba\ncbb\n"),
        ("abb", "aaa\naab\nabb\n"),
        ("bccb", "abcc\nacbc\nacca\naccb\nbccb\n"),
        ("aba", "aba\nbaa\nbab\n"),
        ("ab", "aa\nab\n"),
        ("abcab", "aabca\nababc\nabcaa\nabcab\n"),
        ("aaa", "aaa\nbaa\nbba\nbbb\n"),
    ];
    for (word, expected) in expectations {
        assert_eq!(
            stdout_of(&["theta-conj", word, "--theta", "ab,c"]),
            expected,
            "word {word}"
        );
    }
}

#[test]
fn power_growth_of_ac_renders_the_known_sizes() {
    assert_eq!(
        stdout_of(&["power-growth", "ac", "--theta", "ab,c", "--max-power", "3"]),
        "1 3\n2 5\n3 7\n"
    );
    assert_eq!(
        stdout_of(&["theta-conj", "acacac", "--theta", "ab,c"]),
        "acacac\ncacaca\ncbacac\ncbcaca\ncbcbac\ncbcbca\ncbcbcb\n"
    );
}

#[test]
fn conj_prints_all_rotations() {
    assert_eq!(
        stdout_of(&["conj", "cabab"]),
        "ababc\nabcab\nbabca\nbcaba\ncabab\n"
    );
    assert_eq!(stdout_of(&["conj", ""]), "\u{3bb}\n");
}

#[test]
fn decompose_reports_the_canonical_witness() {
    let text = stdout_of(&["decompose", "abb", "--theta", "ab,c"]);
    assert!(text.contains("witness: head=\u{3bb} link=ab repeats=0 tail=b"), "{text}");
    let text = stdout_of(&["decompose", "aac", "--theta", "ab,c"]);
    assert!(text.contains("witness: none"), "{text}");
}

#[test]
fn involutions_lists_the_canonical_order() {
    assert_eq!(
        stdout_of(&["involutions", "--alphabet", "abc"]),
        "a,b,c\na,bc\nab,c\nac,b\n"
    );
}

#[test]
fn analyze_json_counts_the_single_theta_palindrome_of_abab() {
    let v = json_of(&["analyze", "abab", "--theta", "ab", "--json"]);
    assert_eq!(v["theta_pal_census"]["count"], 1);
    assert_eq!(v["theta_pal_census"]["elements"], serde_json::json!(["abab"]));
    assert_eq!(v["theta"], "ab");
    assert_eq!(v["class_theta_pal_census"]["count"], 2);
}

#[test]
fn analyze_text_reproduces_the_class_censuses() {
    let text = stdout_of(&["analyze", "aaa", "--theta", "ab,c"]);
    assert!(text.contains("theta-palindromes in C(w) (0): (none)"), "{text}");
    let text = stdout_of(&["analyze", "cabab", "--theta", "ab,c"]);
    assert!(text.contains("theta-palindromes in C(w) (1): abcab"), "{text}");
    let text = stdout_of(&["analyze", "abab", "--theta", "ab,c"]);
    assert!(text.contains("theta-palindromes in C(w) (2): abab baba"), "{text}");
}

#[test]
fn analyze_text_reproduces_the_theta_conjugate_censuses() {
    let text = stdout_of(&["analyze", "aaa", "--theta", "ab"]);
    assert!(text.contains("theta-conjugates (4): aaa baa bba bbb"), "{text}");
    assert!(text.contains("theta-palindromes in C_theta(w) (0): (none)"), "{text}");
    assert!(text.contains("palindromes in C_theta(w) (2): aaa bbb"), "{text}");
}

#[test]
fn empty_word_analysis_uses_conventions() {
    let v = json_of(&["analyze", "", "--theta", "ab,c", "--json"]);
    assert_eq!(v["source"], "");
    assert_eq!(v["length"], 0);
    assert_eq!(v["primitive"], serde_json::Value::Null);
    assert_eq!(v["class_elements"], serde_json::json!([""]));
    assert_eq!(v["theta_class_size"], 1);
}

#[test]
fn json_outputs_reparse_and_rerender_identically() {
    let commands: [&[&str]; 5] = [
        &["analyze", "abab", "--theta", "ab", "--json"],
        &["theta-conj", "aac", "--theta", "ab,c", "--json"],
        &["conj", "cabab", "--json"],
        &["decompose", "abb", "--theta", "ab,c", "--json"],
        &["involutions", "--alphabet", "abc", "--json"],
    ];
    for args in commands {
        let raw = stdout_of(args);
        let value: serde_json::Value = serde_json::from_str(&raw).expect("parses");
        let rerendered = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(raw, rerendered, "round-trip for {args:?}");
    }
}

#[test]
fn sweep_json_lands_in_a_file_when_given_a_path() {
    let dir = std::env::temp_dir().join("wkwords-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.json");
    let out = wkwords(&[
        "sweep",
        "--alphabet",
        "ab",
        "--max-len",
        "4",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["config"]["theta"], "ALL");
    assert_eq!(v["checks"].as_array().unwrap().len(), 9);
    for check in v["checks"].as_array().unwrap() {
        assert_eq!(check["counterexamples"].as_array().unwrap().len(), 0);
    }
    std::fs::remove_file(&path).ok();
}

#[test]
fn sweep_entries_match_the_split_formula() {
    let v = json_of(&["theta-conj", "ab", "--theta", "ab", "--json"]);
    // entries keep split provenance: k = 0 gives theta(w), k = |w| gives w
    assert_eq!(v["entries"][0]["split"], 0);
    assert_eq!(v["entries"][0]["value"], "ab");
    assert_eq!(v["entries"][2]["split"], 2);
    assert_eq!(v["entries"][2]["value"], "ab");
    assert_eq!(v["entries"][1]["value"], "aa");
    assert_eq!(v["elements"], serde_json::json!(["aa", "ab"]));
}

#[test]
fn domain_errors_exit_one_with_a_diagnostic() {
    let out = wkwords(&["analyze", "axc", "--theta", "ab,c", "--alphabet", "abc"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.starts_with("error:"), "{stderr}");
    assert_eq!(stderr.lines().count(), 1);

    let out = wkwords(&["power-growth", "", "--theta", "ab"]);
    assert_eq!(out.status.code(), Some(1));

    // spec misses the letter c that the word forces into the alphabet
    let out = wkwords(&["analyze", "abc", "--theta", "ab"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    let out = wkwords(&["analyze", "abab"]);
    assert_eq!(out.status.code(), Some(2), "missing --theta");

    let out = wkwords(&["analyze", "abab", "--theta", "ALL"]);
    assert_eq!(out.status.code(), Some(2), "ALL outside sweep");

    let out = wkwords(&["sweep", "--alphabet", "ab", "--max-len", "3", "--check", "T42"]);
    assert_eq!(out.status.code(), Some(2), "unknown check id");

    let out = wkwords(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}
