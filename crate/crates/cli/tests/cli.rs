use std::process::Command;

use serde_json::Value;

fn latvert(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_latvert"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn stdout_ok(args: &[&str]) -> String {
    let (out, err, code) = latvert(args);
    assert_eq!(code, 0, "{:?}: {}", args, err);
    out
}

#[test]
fn vertex_ideal_of_one_two_three() {
    let out = stdout_ok(&["vertex-ideal", "--matrix", "[1 2 3]", "--method", "circuits"]);
    assert_eq!(out, "<abc, a^2b, a^3c, b^3c^2>\n");
    let out = stdout_ok(&["vertex-ideal", "--matrix", "[1 2 3]", "--method", "intersection"]);
    assert_eq!(out, "<abc, a^2b, a^3c, b^3c^2>\n");
}

#[test]
fn oracle_and_box_cross_check() {
    let out = stdout_ok(&["vertex-ideal", "--matrix", "[1 2 3]", "--method", "oracle", "--box", "2"]);
    assert!(out.starts_with("standard monomials in [0,2]^3: "));
    assert!(!out.lines().any(|l| l == "abc"));
    let out = stdout_ok(&["vertex-ideal", "--matrix", "[1 2 3]", "--box", "4"]);
    assert!(out.ends_with("mismatches against fiber vertices in [0,4]^3: 0\n"));
}

#[test]
fn five_facets() {
    let out = stdout_ok(&["cone", "--matrix", "[15 247 248 345]", "--weight", "111,0,342,1", "--count-facets"]);
    assert_eq!(out, "facets: 5\n");
    let out = stdout_ok(&["cone", "--matrix", "[15 247 248 345]", "--weight", "111,0,342,1"]);
    assert!(out.contains("+345b -247d <= 0"));
}

#[test]
fn rank_zero_graver_is_empty() {
    let dir = std::env::temp_dir().join(format!("latvert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("B.txt");
    std::fs::write(&path, "# the zero lattice in Z^3\n0\n0\n0\n").unwrap();
    let out = stdout_ok(&["graver", "--lattice-basis", path.to_str().unwrap(), "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["graver"], serde_json::json!([]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(latvert(&["reproduce", "unknown-id"]).2, 1);
    assert_eq!(latvert(&["graver", "--matrix", "[1 x]"]).2, 1);
    assert_eq!(latvert(&["graver"]).2, 1);
    assert_eq!(latvert(&["graver", "--matrix", "[1 2]", "--lattice-basis", "[1]"]).2, 1);
    assert_eq!(latvert(&["initial", "--matrix", "[1 2 3]", "--weight", "1,2"]).2, 1);
    assert_eq!(latvert(&["graver", "--matrix", "[3 4 5]", "--budget", "2"]).2, 2);
    assert_eq!(latvert(&["fan", "--matrix", "[1 2 3]", "--max-cones", "1"]).2, 2);
    let (out, _, code) = latvert(&["reproduce", "ex-345"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS P_L is strictly contained in V_L"));
    let (out, _, code) = latvert(&["reproduce", "ex-4.3"]);
    assert_eq!(code, 3);
    assert!(out.contains("FAIL V_L has the 10 listed generators"));
}

#[test]
fn checks_on_three_four_five() {
    let out = stdout_ok(&["check", "--matrix", "[3 4 5]"]);
    assert!(out.contains("PASS top-equal"));
    assert!(out.contains("N/A dim2-equal"));
    assert!(!out.contains("FAIL"));
    let out = stdout_ok(&["check", "--matrix", "[3 4 5]", "--property", "rad-equal"]);
    assert_eq!(out, "PASS rad-equal\n");
    assert_eq!(latvert(&["check", "--matrix", "[3 4 5]", "--property", "nope"]).2, 1);
}

#[test]
fn ideals_depend_only_on_the_lattice() {
    // ker [3 4 5] given by its defining matrix, a basis, and a re-based basis.
    let b = "1 3; -2 -1; 1 -1";
    let rebased = "5 4; -5 -3; 1 0";
    for cmd in [
        &["vertex-ideal"][..],
        &["product-ideal"],
        &["graver"],
        &["std-pairs"],
        &["irr-decomp"],
        &["radical", "--via", "supports"],
    ] {
        let a = stdout_ok(&[cmd, &["--matrix", "[3 4 5]"]].concat());
        let x = stdout_ok(&[cmd, &["--lattice-basis", b]].concat());
        let y = stdout_ok(&[cmd, &["--lattice-basis", rebased]].concat());
        assert_eq!(a, x, "{:?}", cmd);
        assert_eq!(a, y, "{:?}", cmd);
    }
}

#[test]
fn json_round_trips_and_is_stable() {
    let runs: [&[&str]; 6] = [
        &["vertex-ideal", "--matrix", "[1 2 3]", "--json"],
        &["std-pairs", "--matrix", "[1 2 3]", "--json"],
        &["assoc-primes", "--matrix", "[1 2 3]", "--json"],
        &["initial", "--matrix", "[1 2 3]", "--weight", "100,10,1", "--show-gb", "--json"],
        &["hilbert-counts", "--matrix", "[1 2 3]", "--degrees", "0..=12", "--json"],
        &["reproduce", "ex-123", "--json"],
    ];
    for args in runs {
        let out = stdout_ok(args);
        let v: Value = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(out, again, "{:?}", args);
        assert_eq!(out, stdout_ok(args), "{:?}", args);
    }
}

#[test]
fn explicit_ideal_input() {
    assert_eq!(stdout_ok(&["assoc-primes", "--ideal", "a^2, ab", "--vars", "2"]), "<a>\n<a, b>\n");
    assert_eq!(stdout_ok(&["top", "--ideal", "bc, ab", "--vars", "3"]), "<b>\n");
}

#[test]
fn hilbert_counts_of_one_two_three() {
    let out = stdout_ok(&["hilbert-counts", "--matrix", "[1 2 3]", "--degrees", "0..=6"]);
    assert_eq!(out, "0: 1\n1: 1\n2: 2\n3: 3\n4: 3\n5: 4\n6: 3\n");
}
