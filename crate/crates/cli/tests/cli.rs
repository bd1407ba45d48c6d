use overmex_cli::{run_with_cap, CSV_HEADER, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    run_cap(args, None)
}

fn run_cap(args: &[&str], cap: Option<&str>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("overmex").chain(args.iter().copied());
    let code = run_with_cap(argv, cap, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn verify_gauss_json() {
    let (code, out, _) = run(&["verify", "--id", "gauss", "--order", "50", "--format", "json"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    let records = v.as_array().unwrap();
    let series: Vec<&Value> = records.iter().filter(|r| r["form"] == "series-equality").collect();
    assert_eq!(series.len(), 1);
    let r = series[0];
    assert_eq!(r["id"], "gauss");
    assert_eq!(r["status"], "pass");
    assert_eq!(r["range"]["order"], 50);
    assert!(r.get("firstMismatch").is_none());
    assert!(r["elapsedMs"].is_null());
    assert!(!r["anchor"].as_str().unwrap().is_empty());
}

#[test]
fn timing_fills_elapsed() {
    let (code, out, _) = run(&["verify", "--id", "euler-odd-distinct", "--order", "20", "--timing"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v[0]["elapsedMs"].is_number());
}

#[test]
fn pbar_table_csv() {
    let (code, out, _) = run(&["table", "--stat", "pbar", "--n-max", "4", "--format", "csv"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "n,pbar\n1,2\n2,4\n3,8\n4,14\n");
}

#[test]
fn op21_table_csv() {
    let (code, out, _) = run(&["table", "--stat", "op21", "--n-max", "4", "--k", "2", "--format", "csv"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.lines().next(), Some("n,k,op21"));
    assert_eq!(out.lines().last(), Some("4,2,1"));
}

#[test]
fn stat_tables_json() {
    let (code, out, _) = run(&["table", "--stat", "mbar", "--k", "0..1", "--n-max", "4"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    // mbar(n, 0) counts every overpartition of n
    assert_eq!(rows[6]["n"], 4);
    assert_eq!(rows[6]["k"], 0);
    assert_eq!(rows[6]["mbar"], 14);
    let (code, _, _) = run(&["table", "--stat", "nbar", "--k", "0"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = run(&["table", "--stat", "pbar", "--k", "1"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn section3_bijection() {
    let (code, out, _) = run(&["bijection", "--which", "section3", "--n", "4", "--check", "--trace"]);
    assert_eq!(code, EXIT_PASS);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["aSize"], 7);
    assert_eq!(v["bSize"], 7);
    assert_eq!(v["passed"], true);
    let pairs = v["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 7);
    assert!(pairs.iter().all(|p| p["weightDelta"] == -1));

    let (code, out, _) = run(&["bijection", "--which", "section3", "--n", "4", "--trace", "--format", "csv"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.lines().count(), 8);
    assert!(out.lines().skip(1).all(|l| l.split(',').count() == 4), "{out}");
}

#[test]
fn lemma41_bijection() {
    let (code, out, _) = run(&["bijection", "--which", "lemma41", "--n", "9", "--j", "2", "--check", "--format", "csv"]);
    assert_eq!(code, EXIT_PASS);
    let mut lines = out.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let at = |k: &str| row[header.iter().position(|h| *h == k).unwrap()];
    assert_eq!(at("sourceSize"), "24");
    assert_eq!(at("passed"), "true");
    assert_eq!(run(&["bijection", "--which", "lemma41", "--n", "9"]).0, EXIT_USAGE);
    assert_eq!(run(&["bijection", "--which", "lemma41", "--n", "3", "--j", "2"]).0, EXIT_USAGE);
    assert_eq!(run(&["bijection", "--which", "section3", "--n", "4", "--j", "1"]).0, EXIT_USAGE);
}

#[test]
fn list_matches_registry() {
    let (code, out, _) = run(&["list"]);
    assert_eq!(code, EXIT_PASS);
    let ids: Vec<&str> = out.lines().collect();
    let registry: Vec<&str> = overmex::list_identities().iter().map(|d| d.id).collect();
    assert_eq!(ids, registry);
    let (_, json, _) = run(&["list", "--format", "json"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v.as_array().unwrap().len(), registry.len());
    let (_, csv, _) = run(&["list", "--format", "csv"]);
    assert!(csv.lines().skip(1).all(|l| l.split(',').count() == 4));
}

#[test]
fn grid_scan_and_csv_shape() {
    let (code, out, _) =
        run(&["verify", "--id", "thm-2-4", "--m", "-2..1", "--k", "-1..1", "--n-max", "10", "--format", "csv"]);
    assert_eq!(code, EXIT_PASS);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let rows: Vec<&str> = lines.collect();
    // pairs with m <= k: k=-1 gives 2, k=0 gives 3, k=1 gives 4
    assert_eq!(rows.len(), 9);
    let width = CSV_HEADER.split(',').count();
    assert!(rows.iter().all(|r| r.split(',').count() == width));
    assert!(rows[0].starts_with("thm-2-4,enumerative-equality,k=-1;m=-2,n:1..10,pass,"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--id", "cor-2-6", "--id", "ineq-xyz", "--k", "1..3", "--order", "40", "--n-max", "20"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.0, EXIT_PASS);
    assert_eq!(first, second);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify"],
        vec!["verify", "--id", "nope"],
        vec!["verify", "--id", "gauss", "--all"],
        vec!["verify", "--id", "gauss", "--k", "1"],
        vec!["verify", "--id", "li-truncation", "--k", "0"],
        vec!["verify", "--id", "gauss", "--order", "2001"],
        vec!["verify", "--id", "gauss", "--format", "xml"],
        vec!["verify", "--id", "yao", "--k", "3..1"],
        vec!["verify", "--id", "thm-2-2", "--n-max", "31"],
        vec!["table", "--stat", "op21", "--n-max", "40"],
        vec!["frobnicate"],
    ] {
        let (code, out, err) = run(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    assert_eq!(run(&["--help"]).0, EXIT_PASS);
}

#[test]
fn cap_override() {
    let args = ["verify", "--id", "thm-2-2", "--n-max", "6"];
    assert_eq!(run_cap(&args, Some("5")).0, EXIT_USAGE);
    assert_eq!(run_cap(&args, Some("6")).0, EXIT_PASS);
    assert_eq!(run_cap(&args, Some("lots")).0, EXIT_USAGE);
}

#[test]
fn failing_records_exit_one() {
    let (code, out, _) = run(&["verify", "--id", "gauss", "--order", "10", "--n-max", "5", "--perturb", "3=1"]);
    assert_eq!(code, EXIT_FAIL);
    let v: Value = serde_json::from_str(&out).unwrap();
    for r in v.as_array().unwrap() {
        assert_eq!(r["status"], "fail");
        let m = &r["firstMismatch"];
        assert_eq!(m["index"], 3);
        assert_eq!(m["kind"], "mismatch");
        assert_eq!(m["lhs"].as_i64().unwrap() - m["rhs"].as_i64().unwrap(), 1);
    }

    let (code, out, _) =
        run(&["verify", "--id", "ineq-xyz", "--k", "1", "--n-max", "9", "--perturb", "7=-1000000000000000000000000", "--format", "csv"]);
    assert_eq!(code, EXIT_FAIL);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[4], "fail");
    assert_eq!(row[5], "7");
    assert!(row[6].starts_with("-99999999999999999999"));
    assert_eq!((row[7], row[8]), ("0", "sign"));

    let (code, _, _) = run(&["verify", "--id", "gauss", "--order", "10", "--perturb", "11=1"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn empty_report_list() {
    let mut out = Vec::new();
    overmex_cli::emit_report(&mut out, &[], overmex_cli::Format::Json, false).unwrap();
    assert_eq!(String::from_utf8(out).unwrap().trim(), "[]");
    let mut out = Vec::new();
    overmex_cli::emit_report(&mut out, &[], overmex_cli::Format::Csv, false).unwrap();
    assert_eq!(String::from_utf8(out).unwrap(), format!("{CSV_HEADER}\n"));
}
