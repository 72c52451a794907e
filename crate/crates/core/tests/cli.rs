//! End-to-end tests of the installed binary: golden outputs, the exit-code
//! contract, JSON envelopes, and text-level round trips.

use std::process::{Command, Output};

fn natcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_natcode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = natcode(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn encode_golden_values() {
    assert_eq!(stdout_of(&["encode", "--fn", "rs", "--dim", "2", "3", "2"]), "13\n");
    assert_eq!(stdout_of(&["encode", "--fn", "cantor", "--dim", "2", "3", "2"]), "18\n");
    assert_eq!(stdout_of(&["encode", "--fn", "rs", "--dim", "1", "5"]), "5\n");
}

#[test]
fn decode_golden_values() {
    assert_eq!(stdout_of(&["decode", "--fn", "rs", "--dim", "2", "13"]), "3 2\n");
    assert_eq!(stdout_of(&["decode", "--fn", "cantor", "--dim", "2", "9"]), "3 0\n");
    assert_eq!(stdout_of(&["decode", "--fn", "skolem", "--dim", "3", "12"]), "1 0 2\n");
}

#[test]
fn encode_and_decode_are_textual_inverses() {
    for (function, dim, coords) in [
        ("rs", "3", vec!["17", "0", "5"]),
        ("chowla", "3", vec!["2", "4", "1"]),
        ("fold-cantor", "4", vec!["3", "1", "4", "1"]),
        ("dyadic", "2", vec!["12", "7"]),
    ] {
        let mut encode_args = vec!["encode", "--fn", function, "--dim", dim];
        encode_args.extend(&coords);
        let code = stdout_of(&encode_args);
        let decoded = stdout_of(&["decode", "--fn", function, "--dim", dim, code.trim()]);
        assert_eq!(decoded.trim().split(' ').collect::<Vec<_>>(), coords);
    }
}

#[test]
fn tree_golden_values() {
    assert_eq!(stdout_of(&["tree", "unrank", "--pairing", "rs", "4"]), "((o o) o)\n");
    assert_eq!(
        stdout_of(&["tree", "unrank", "--pairing", "cantor", "4"]),
        "(o (o (o o)))\n"
    );
    assert_eq!(stdout_of(&["tree", "rank", "--pairing", "rs", "(o o)"]), "1\n");
}

#[test]
fn tree_output_reparses_to_the_same_rank() {
    for rank in ["0", "7", "100", "98765"] {
        let text = stdout_of(&["tree", "unrank", "--pairing", "dyadic", rank]);
        let back = stdout_of(&["tree", "rank", "--pairing", "dyadic", text.trim()]);
        assert_eq!(back.trim(), rank);
    }
}

#[test]
fn seq_golden_values() {
    assert_eq!(stdout_of(&["seq", "unrank", "--scheme", "xi", "--pairing", "rs", "0"]), "\n");
    assert_eq!(stdout_of(&["seq", "unrank", "--scheme", "xi", "--pairing", "rs", "2"]), "1\n");
    assert_eq!(stdout_of(&["seq", "rank", "--scheme", "xi", "--pairing", "rs", "0"]), "1\n");
}

#[test]
fn seq_output_reparses_to_the_same_rank() {
    let empty = stdout_of(&["seq", "rank", "--scheme", "xi", "--pairing", "rs", ""]);
    assert_eq!(empty, "0\n");
    for rank in ["1", "9", "547"] {
        let seq = stdout_of(&[
            "seq", "unrank", "--scheme", "zeta", "--pairing", "cantor", "--family", "fold-cantor",
            rank,
        ]);
        let back = stdout_of(&[
            "seq", "rank", "--scheme", "zeta", "--pairing", "cantor", "--family", "fold-cantor",
            seq.trim(),
        ]);
        assert_eq!(back.trim(), rank);
    }
}

#[test]
fn shells_csv_matches_the_frozen_table() {
    let expected = "\
x1,x2,code,shell
0,0,0,0
1,0,3,1
2,0,8,2
3,0,15,3
0,1,1,1
1,1,2,1
2,1,7,2
3,1,14,3
0,2,4,2
1,2,5,2
2,2,6,2
3,2,13,3
0,3,9,3
1,3,10,3
2,3,11,3
3,3,12,3
";
    assert_eq!(
        stdout_of(&["shells", "--fn", "rs", "--dim", "2", "--max", "3", "--format", "csv"]),
        expected
    );
}

#[test]
fn shells_respect_the_documented_shell_formulas() {
    // Triangle shells: shell = x + y.
    let cantor = stdout_of(&["shells", "--fn", "cantor", "--dim", "2", "--max", "3"]);
    for line in cantor.lines().skip(1) {
        let fields: Vec<u64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(fields[3], fields[0] + fields[1], "{line}");
    }
    // Dyadic shells: shell = y + 1 + ceil(log2(x + 1)).
    let dyadic = stdout_of(&["shells", "--fn", "dyadic", "--dim", "2", "--max", "3"]);
    for line in dyadic.lines().skip(1) {
        let fields: Vec<u64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        let ceil_log2 = (0..).find(|k| (1u64 << k) > fields[0]).unwrap();
        assert_eq!(fields[3], fields[1] + 1 + ceil_log2, "{line}");
    }
}

#[test]
fn shells_json_format_streams_one_object_per_line() {
    let out = stdout_of(&["shells", "--fn", "rs", "--dim", "2", "--max", "1", "--format", "json"]);
    assert_eq!(
        out,
        "{\"point\":[0,0],\"code\":0,\"shell\":0}\n\
         {\"point\":[1,0],\"code\":3,\"shell\":1}\n\
         {\"point\":[0,1],\"code\":1,\"shell\":1}\n\
         {\"point\":[1,1],\"code\":2,\"shell\":1}\n"
    );
    for line in out.lines() {
        let parsed: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(parsed["point"].is_array());
    }
}

#[test]
fn json_envelopes_are_exact_and_parse() {
    assert_eq!(
        stdout_of(&["--json", "encode", "--fn", "rs", "--dim", "2", "3", "2"]),
        "{\"input\":[3,2],\"output\":13,\"function\":\"rs\",\"dim\":2}\n"
    );
    assert_eq!(
        stdout_of(&["--json", "decode", "--fn", "cantor", "--dim", "2", "9"]),
        "{\"input\":9,\"output\":[3,0],\"function\":\"cantor\",\"dim\":2}\n"
    );
    assert_eq!(
        stdout_of(&["--json", "tree", "unrank", "--pairing", "rs", "4"]),
        "{\"input\":4,\"output\":\"((o o) o)\",\"function\":\"rs\",\"dim\":2}\n"
    );
    assert_eq!(
        stdout_of(&["--json", "seq", "unrank", "--scheme", "xi", "--pairing", "rs", "7"]),
        "{\"input\":7,\"output\":[1,2],\"function\":\"rs\",\"dim\":null}\n"
    );
    let verify = stdout_of(&["--json", "verify", "--limit", "3"]);
    let parsed: serde_json::Value = serde_json::from_str(&verify).unwrap();
    assert_eq!(parsed["function"], "verify");
    assert!(parsed["output"].as_array().unwrap().len() > 10);
}

#[test]
fn domain_and_usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        // wrong arity for the dimension
        &["encode", "--fn", "rs", "--dim", "2", "1", "2", "3"],
        // pairing constrained to two coordinates
        &["encode", "--fn", "dyadic", "--dim", "3", "1", "2", "3"],
        // the positive pairing has no code 0
        &["decode", "--fn", "cantor-positive", "--dim", "2", "0"],
        // fold of fewer than two coordinates
        &["decode", "--fn", "fold-rs", "--dim", "1", "5"],
        // not a number
        &["decode", "--fn", "rs", "--dim", "2", "x"],
        &["encode", "--fn", "rs", "--dim", "2", "3", "-2"],
        // unknown selector (rejected by argument parsing)
        &["encode", "--fn", "unknown", "--dim", "2", "1", "2"],
        // malformed s-expression
        &["tree", "rank", "--pairing", "rs", "((o o)"],
        // no standard shell numbering to emit
        &["shells", "--fn", "fold-cantor", "--dim", "3", "--max", "2"],
        &["shells", "--fn", "cantor-positive", "--dim", "2", "--max", "2"],
        // malformed sequence
        &["seq", "rank", "--scheme", "xi", "--pairing", "rs", "3,,4"],
        // usage: --limit must be an integer
        &["verify", "--limit", "many"],
    ];
    for args in cases {
        let out = natcode(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?} printed no diagnostic");
        assert!(out.stdout.is_empty(), "{args:?} wrote to stdout");
    }
}

#[test]
fn verify_reports_one_line_per_property_and_exits_zero() {
    let out = natcode(&["verify", "--limit", "200"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let (summary, verdicts) = lines.split_last().unwrap();
    assert!(verdicts.len() > 20);
    for line in verdicts {
        assert!(line.starts_with("ok "), "unexpected line {line:?}");
    }
    assert_eq!(*summary, format!("{} properties, 0 failed, limit 200", verdicts.len()));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["shells", "--fn", "skolem", "--dim", "3", "--max", "2", "--format", "csv"][..],
        &["verify", "--limit", "40"][..],
        &["decode", "--fn", "chowla", "--dim", "3", "777"][..],
    ] {
        let first = natcode(args);
        let second = natcode(args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(first.status.code(), second.status.code(), "{args:?}");
    }
}

#[test]
fn csv_rows_feed_back_through_encode() {
    let table = stdout_of(&["shells", "--fn", "rs", "--dim", "2", "--max", "3", "--format", "csv"]);
    for line in table.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let code = stdout_of(&["encode", "--fn", "rs", "--dim", "2", fields[0], fields[1]]);
        assert_eq!(code.trim(), fields[2], "{line}");
    }
}
