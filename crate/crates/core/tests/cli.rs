use zetalike::cli::{run_with, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use zetalike::identities::parse_reports;
use zetalike::output::{IndexedNumeric, IndexedValue};
use zetalike::tables::parse_json_table;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zetalike").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn rho_value() {
    assert_eq!(run(&["rho", "2,1,3"]), (EXIT_PASS, "1/72\n".into(), String::new()));
    let (code, out, _) = run(&["rho", "2,1,3", "--format", "json"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "{\"index\":[2,1,3],\"weight\":6,\"depth\":3,\"value\":{\"constant\":\"1/72\",\"zeta\":{}}}\n");
}

#[test]
fn eta_symbolic_renderings() {
    assert_eq!(run(&["eta", "1,2", "--mode", "symbolic", "--render", "pi"]).1, "2 - pi^2/6\n");
    assert_eq!(run(&["eta", "1,2", "--render", "zeta"]).1, "2 - zeta(2)\n");
    let (_, out, _) = run(&["eta", "4,1,1", "--format", "json"]);
    let v: IndexedValue = serde_json::from_str(&out).unwrap();
    assert_eq!(v.value.constant, "-29/32");
    assert_eq!(v.value.zeta[&3], "-3/4");
}

#[test]
fn eta_numeric_modes() {
    let (code, out, _) = run(&["eta", "2", "--mode", "numeric", "--digits", "12"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.starts_with("1.644934066848 +/- "), "{out}");
    let (code, out, _) =
        run(&["eta", "1,1", "--mode", "numeric", "--method", "oracle", "--digits", "4", "--format", "json"]);
    assert_eq!(code, EXIT_PASS);
    let v: IndexedNumeric = serde_json::from_str(&out).unwrap();
    assert_eq!(v.value, "1.0000");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["rho", "2,1"],
        vec!["rho", "0,2"],
        vec!["rho", "a,b"],
        vec!["eta", "1"],
        vec!["frobnicate"],
        vec!["table", "rho", "--weight", "1"],
        vec!["table", "eta", "--weight", "40"],
        vec!["verify", "--suite", "nothing"],
    ] {
        let (code, out, err) = run(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn oracle_beyond_cap_is_reported() {
    let (code, _, err) = run(&["eta", "2", "--mode", "numeric", "--method", "oracle", "--digits", "12"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cap"), "{err}");
}

#[test]
fn tables_are_deterministic_and_round_trip() {
    let first = run(&["table", "eta", "--weight", "6", "--format", "json"]);
    let second = run(&["table", "eta", "--weight", "6", "--format", "json"]);
    assert_eq!(first, second);
    let rows = parse_json_table(&first.1).unwrap();
    assert_eq!(rows.len(), 32);
    assert_eq!(serde_json::to_string_pretty(&rows).unwrap() + "\n", first.1);
    let (code, md, _) = run(&["table", "rho", "--weight", "6"]);
    assert_eq!(code, EXIT_PASS);
    assert!(md.contains("| 6 | 3 | (2,1,3) | 1/72 |"));
    assert_eq!(md.lines().count(), 2 + 16);
    let (_, csv, _) = run(&["table", "rho", "--weight", "4", "--format", "csv"]);
    assert_eq!(
        csv,
        "weight,depth,index,value\n4,1,(4),1/18\n4,2,\"(1,3)\",1/8\n4,2,\"(2,2)\",1/4\n4,3,\"(1,1,2)\",1\n"
    );
}

#[test]
fn verify_balance_passes() {
    let (code, out, _) = run(&["verify", "--suite", "balance", "--max-weight", "10"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.ends_with("77/77 passed\n"), "{out}");
}

#[test]
fn verify_reports_round_trip() {
    let (code, out, _) = run(&["verify", "--suite", "weighted", "--max-weight", "3", "--format", "json"]);
    assert_eq!(code, EXIT_PASS);
    let reports = parse_reports(&out).unwrap();
    assert!(!reports.is_empty() && reports.iter().all(|r| r.passed));
    assert_eq!(serde_json::to_string_pretty(&reports).unwrap() + "\n", out);
}

#[test]
fn unfinished_check_exits_one() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_zetalike"))
        .args(["verify", "--suite", "oracle", "--max-weight", "2", "--format", "json"])
        .env("ZETALIKE_MAX_N", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_FAIL));
    let reports = parse_reports(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let eta = reports.iter().find(|r| r.identity_id == "oracle-eta").unwrap();
    assert!(!eta.passed);
    assert!(eta.note.as_deref().unwrap().contains("cap"));
}
