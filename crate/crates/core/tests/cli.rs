use std::process::Command;

use modrad::cli::{self, EXIT_FALSE, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("modrad").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json_lines(s: &str) -> Vec<serde_json::Value> {
    s.lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("{e}: {l}")))
        .collect()
}

#[test]
fn quasi_j_check_on_the_zero_submodule() {
    let (code, out, _) = run(&["check", "quasi_J", "sub(Zmod(4),[])"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "true\n"));
    let (code, out, _) = run(&["check", "J", "sub(Zmod(4),[])", "--witness"]);
    assert_eq!(code, EXIT_FALSE);
    assert_eq!(out, "false\nwitness: r=2, m=2\u{304}\n");
    let (code, out, _) = run(&["check", "J", "sub(Zmod(4),[])"]);
    assert_eq!((code, out.as_str()), (EXIT_FALSE, "false\n"));
}

#[test]
fn check_in_machine_format() {
    let (code, out, _) = run(&[
        "--format",
        "machine",
        "check",
        "J",
        "sub(Zmod(4),[])",
        "--witness",
    ]);
    assert_eq!(code, EXIT_FALSE);
    let v = &json_lines(&out)[0];
    assert_eq!(v["holds"], false);
    assert_eq!(v["witness"], "r=2, m=2\u{304}");
    assert_eq!(v["replayed"], true);
    let (code, out, _) = run(&[
        "check",
        "quasi_J",
        "sub(Zmod(6),[2])",
        "--witness",
        "--format",
        "machine",
    ]);
    assert_eq!(code, EXIT_FALSE);
    assert_eq!(json_lines(&out)[0]["replayed"], true);
}

#[test]
fn comparison_predicates_on_z6() {
    for (pred, code) in [
        ("r", EXIT_OK),
        ("sr", EXIT_OK),
        ("quasi_J", EXIT_FALSE),
        ("prime", EXIT_OK),
    ] {
        assert_eq!(run(&["check", pred, "sub(Zmod(6),[2])"]).0, code, "{pred}");
    }
}

#[test]
fn ideal_and_module_predicates() {
    assert_eq!(run(&["check", "quasi_J", "ideal(Zn(8),[4])"]).0, EXIT_OK);
    assert_eq!(
        run(&["check", "quasi_J", "ideal(Zn(12),[2])"]).0,
        EXIT_FALSE
    );
    let (code, out, _) = run(&["check", "quasi_J", "ideal(Zn(12),[2])", "--witness"]);
    assert_eq!(code, EXIT_FALSE);
    assert!(out.contains("witness: "), "{out}");
    assert_eq!(run(&["check", "J_presimplifiable", "Zmod(5)"]).0, EXIT_OK);
    assert_eq!(run(&["check", "presimplifiable", "Zmod(5)"]).0, EXIT_FALSE);
    assert_eq!(
        run(&["check", "quasi_J_presimplifiable", "Zmod(4)"]).0,
        EXIT_OK
    );
    assert_eq!(
        run(&["check", "J_presimplifiable", "Zmod(4)"]).0,
        EXIT_FALSE
    );
    assert_eq!(run(&["check", "multiplication", "Zn(12)"]).0, EXIT_OK);
    assert_eq!(run(&["check", "multiplication", "Zmod(2,2)"]).0, EXIT_FALSE);
    assert_eq!(run(&["check", "faithful", "Zmod(4)"]).0, EXIT_FALSE);
    assert_eq!(run(&["check", "faithful", "Zn(4)"]).0, EXIT_OK);
}

#[test]
fn info_and_rad() {
    let (code, out, _) = run(&["info", "Zmod(4)"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("annihilator: 4ℤ\n"), "{out}");
    assert!(out.contains("nil: ⟨2\u{304}⟩\n"), "{out}");
    assert!(out.contains("submodules: 3\n"), "{out}");
    let (_, out, _) = run(&["rad", "sub(Zmod(4),[])"]);
    assert_eq!(out, "m_rad: ⟨2\u{304}⟩\n");
    let (_, out, _) = run(&[
        "--format",
        "machine",
        "info",
        "idealization(Zn(4),cyc(Zn(4),[]))",
    ]);
    let v = &json_lines(&out)[0];
    assert_eq!(v["sort"], "ring");
    assert_eq!(v["size"], 16);
    let (_, out, _) = run(&["--format", "machine", "rad", "ideal(Zn(12),[4])"]);
    assert_eq!(json_lines(&out)[0]["radical"], "⟨2⟩");
    for expr in [
        "Zn(12)",
        "prod(Zn(2),Zn(3))",
        "prod(Zmod(4),Zmod(9))",
        "cyc(Zn(12),[4])",
        "ideal(Zn(12),[3])",
        "sub(Zmod(2,4),[(1,2)])",
        "loc(Zn(12),[3])",
    ] {
        let (code, out, err) = run(&["--format", "machine", "info", expr]);
        assert_eq!(code, EXIT_OK, "{expr}: {err}");
        assert_eq!(json_lines(&out).len(), 1);
    }
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = run(&["check", "quasi_J", "sub(Zmod(6),[2)"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("at offset 14"), "{err}");
    assert!(err.contains("              ^"), "{err}");
    assert_eq!(run(&["info", "Foo(3)"]).0, EXIT_USAGE);
    assert_eq!(run(&["check", "bogus", "sub(Zmod(4),[])"]).0, EXIT_USAGE);
    assert_eq!(
        run(&["check", "quasi_J", "sub(Zmod(4),[(1,2)])"]).0,
        EXIT_USAGE
    );
    assert_eq!(run(&["info", "loc(Zn(4),[2])"]).0, EXIT_USAGE);
    assert_eq!(run(&["info", "idealization(Zn(2),Zmod(3))"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "--claim", "nope"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "--corpus", "nope"]).0, EXIT_USAGE);
    assert_eq!(run(&["search", "nope"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&[]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}

#[test]
fn verify_reports() {
    let (code, out, _) = run(&["verify", "--claim", "thm6", "--corpus", "idealization"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("PASS"), "{out}");
    let (code, out, _) = run(&[
        "verify", "--claim", "thm6", "--claim", "lem2", "--corpus", "quick", "--format", "machine",
    ]);
    assert_eq!(code, EXIT_OK);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["id"], "thm6");
    assert_eq!(lines[1]["status"], "VACUOUS");
    let (code, out, _) = run(&["verify", "--corpus", "empty"]);
    assert_eq!(code, EXIT_OK);
    assert!(out
        .lines()
        .filter(|l| !l.starts_with(' '))
        .all(|l| l.starts_with("VACUOUS")));
}

#[test]
fn listings_and_search() {
    let (code, out, _) = run(&["list-claims"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), modrad::harness::registry().len());
    let (_, out, _) = run(&["--format", "machine", "list-claims"]);
    assert!(json_lines(&out).iter().any(|v| v["id"] == "thm1.2"));
    let (_, out, _) = run(&["--format", "machine", "list-targets"]);
    assert_eq!(
        json_lines(&out).len(),
        modrad::harness::search_targets().len()
    );
    let (code, out, _) = run(&["search", "quasiJ⇒J", "--corpus", "quick"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("FOUND"), "{out}");
    let (code, out, _) = run(&[
        "--format",
        "machine",
        "search",
        "quasiJ⇒r",
        "--corpus",
        "quick",
    ]);
    assert_eq!(code, EXIT_FALSE);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["found"].is_null());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_modrad");
    let out = Command::new(bin)
        .args(["check", "J", "sub(Zmod(4),[])", "--witness"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_FALSE));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "false\nwitness: r=2, m=2\u{304}\n"
    );
    let out = Command::new(bin)
        .args(["check", "quasi_J", "sub(Zmod(4),[])"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let out = Command::new(bin).args(["info", "Zmod(4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(!out.stderr.is_empty());
}
