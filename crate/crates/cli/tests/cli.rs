use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_chainiso"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn seq_examples() {
    assert_eq!(
        ok(&[
            "seq",
            "--series",
            "order-ddp",
            "--max-n",
            "7",
            "--format",
            "bfile"
        ]),
        "0 1\n1 2\n2 5\n3 13\n4 30\n5 66\n6 137\n7 279\n"
    );
    assert_eq!(
        ok(&["seq", "--series", "order-oddp", "--max-n", "3"]),
        "1, 2, 5, 12\n"
    );
    assert_eq!(
        ok(&["seq", "--series", "order-ddpstar", "--max-n", "0"]),
        "1\n"
    );
    assert_eq!(
        ok(&[
            "seq",
            "--series",
            "order-ddp",
            "--max-n",
            "4",
            "--offset",
            "3",
            "--format",
            "bfile"
        ]),
        "3 13\n4 30\n"
    );
}

#[test]
fn table_examples() {
    let csv = ok(&[
        "table", "--family", "oddp", "--stat", "fix", "--max-n", "5", "--format", "csv",
    ]);
    let first_column: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(first_column, ["1", "1", "2", "5", "12", "27"]);
    assert!(csv.starts_with("n,0,1,2,3,4,5,sum\n"));

    let ascii = ok(&[
        "table", "--family", "ddp", "--stat", "height", "--max-n", "0",
    ]);
    assert_eq!(
        ascii
            .lines()
            .nth(1)
            .unwrap()
            .split_whitespace()
            .collect::<Vec<_>>(),
        ["0", "1", "1"]
    );

    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "table", "--family", "ddp-star", "--stat", "height", "--max-n", "7", "--format", "json",
    ]))
    .unwrap();
    let sums: Vec<u64> = json
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["sum"].as_u64().unwrap())
        .collect();
    assert_eq!(sums, [1, 2, 4, 8, 14, 24, 38, 60]);
}

#[test]
fn large_values_print_in_full() {
    let out = ok(&[
        "seq",
        "--series",
        "order-ddp",
        "--max-n",
        "100",
        "--offset",
        "100",
    ]);
    assert!(out.trim().len() > 25);
    assert!(out.trim().bytes().all(|b| b.is_ascii_digit()));
    let json = ok(&[
        "seq",
        "--series",
        "order-ddp",
        "--max-n",
        "100",
        "--offset",
        "100",
        "--format",
        "json",
    ]);
    assert!(json.contains(out.trim()));
}

#[test]
fn elements_examples() {
    assert_eq!(
        ok(&["elements", "--family", "ddp", "--n", "2"])
            .lines()
            .count(),
        5
    );
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "elements", "--family", "ddp-star", "--n", "3", "--height", "2", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(
        json,
        serde_json::json!([{"n": 3, "dom": [2, 3], "img": [2, 1]}])
    );
    assert_eq!(ok(&["elements", "--family", "oddp", "--n", "0"]), "( / )\n");
}

#[test]
fn classes_examples() {
    let out = ok(&[
        "classes",
        "--family",
        "ddp",
        "--n",
        "7",
        "--per-height",
        "--format",
        "csv",
    ]);
    assert!(out.lines().any(|l| l == "3,14"));
    assert!(
        ok(&["classes", "--family", "oddp", "--n", "6", "--format", "csv"]).contains("total,33")
    );
    assert!(ok(&["classes", "--family", "ddp", "--n", "0", "--format", "csv"]).contains("total,1"));
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "classes", "--family", "ddp", "--n", "8", "--oracle", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json["match"], true);
}

#[test]
fn verify_examples() {
    let out = ok(&["verify", "--max-n", "7", "--no-header"]);
    assert!(out
        .lines()
        .any(|l| l.starts_with("PASS golden-height-table [ddp]")));
    assert!(out
        .lines()
        .any(|l| l.starts_with("PASS golden-height-table [ddp-star]")));
    assert!(!out.contains("FAIL"));
    let classes = ok(&[
        "verify",
        "--max-n",
        "10",
        "--checks",
        "classes",
        "--no-header",
    ]);
    assert!(classes
        .lines()
        .all(|l| l.starts_with("PASS") || l.contains("0 failed")));
    ok(&["verify", "--max-n", "0"]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--max-n", "6", "--no-header"][..],
        &["verify", "--max-n", "6", "--format", "json"][..],
        &[
            "table", "--family", "ddp", "--stat", "fix", "--max-n", "9", "--format", "json",
        ][..],
        &["elements", "--family", "dp", "--n", "5"][..],
    ] {
        assert_eq!(ok(args), ok(args), "{args:?}");
    }
}

#[test]
fn header_carries_timestamp_only_when_asked() {
    let with = ok(&["verify", "--max-n", "1", "--checks", "orders"]);
    assert!(with.starts_with("# chainiso verify"));
    let without = ok(&[
        "verify",
        "--max-n",
        "1",
        "--checks",
        "orders",
        "--no-header",
    ]);
    assert!(!without.contains('#'));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &[
            "table", "--family", "xyz", "--stat", "height", "--max-n", "3",
        ][..],
        &[
            "table", "--family", "dp", "--stat", "height", "--max-n", "3",
        ][..],
        &[
            "table", "--family", "ddp", "--stat", "waist", "--max-n", "3",
        ][..],
        &["seq", "--series", "nope", "--max-n", "3"][..],
        &[
            "seq",
            "--series",
            "order-ddp",
            "--max-n",
            "3",
            "--offset",
            "4",
        ][..],
        &["elements", "--family", "ddp", "--n", "9"][..],
        &["classes", "--family", "dp", "--n", "3"][..],
        &["classes", "--family", "ddp", "--n", "11", "--oracle"][..],
        &["verify", "--max-n", "3", "--format", "bfile"][..],
        &["verify", "--max-n", "3", "--checks", "everything"][..],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn bfile_lines_are_well_formed() {
    for series in [
        "A184049",
        "a184050",
        "ddp-fix",
        "order-ddp",
        "dstar-total-ddp",
    ] {
        let out = ok(&[
            "seq", "--series", series, "--max-n", "9", "--format", "bfile",
        ]);
        assert!(out.ends_with('\n'));
        for line in out.lines() {
            let (i, v) = line.split_once(' ').unwrap();
            assert!(
                i.parse::<i64>().is_ok() && !v.is_empty() && v.bytes().all(|b| b.is_ascii_digit()),
                "{line}"
            );
        }
    }
}
