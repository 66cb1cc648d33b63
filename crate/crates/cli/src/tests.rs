use std::path::Path;

use clap::Parser;

use super::{dispatch, Cli};

fn run(args: &[&str]) -> (u8, String) {
    let cli = Cli::try_parse_from(std::iter::once("topoidx").chain(args.iter().copied())).expect("arguments parse");
    let mut out = Vec::new();
    let code = match dispatch(cli.command, &mut out) {
        Ok(c) => c,
        Err(e) => {
            out.extend_from_slice(e.to_string().as_bytes());
            2
        }
    };
    (code, String::from_utf8(out).unwrap())
}

fn gen(dir: &Path, name: &str, family: &[&str]) -> String {
    let path = dir.join(name).display().to_string();
    let mut args = vec!["gen"];
    args.extend_from_slice(family);
    args.extend_from_slice(&["-o", &path]);
    assert_eq!(run(&args).0, 0);
    path
}

#[test]
fn gen_wheel_census() {
    let (code, text) = run(&["gen", "wheel", "4"]);
    assert_eq!(code, 0);
    assert!(text.contains("\nn 5\n"));
    let edges = text.lines().filter(|l| !l.starts_with('#') && !l.starts_with('n')).count();
    assert_eq!(edges, 8);
}

#[test]
fn gen_sunflower_census() {
    let g = topoidx::parse_edge_list(&run(&["gen", "sunflower", "3"]).1).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
}

#[test]
fn gen_rejects_small_wheel() {
    let (code, text) = run(&["gen", "wheel", "2"]);
    assert_eq!(code, 2);
    assert!(text.contains("invalid family parameters"), "{text}");
}

#[test]
fn compute_examples() {
    let dir = tempfile::tempdir().unwrap();
    let w3 = gen(dir.path(), "w3.g", &["wheel", "3"]);
    let c3 = gen(dir.path(), "c3.g", &["cycle", "3"]);
    assert_eq!(run(&["compute", &w3, "--index", "RL1"]).1.trim(), "RL1  162/1");
    let (_, csv) = run(&["compute", &c3, "--index", "MRL1", "--format", "csv"]);
    assert_eq!(csv, format!("graph,index,value,approx\n{c3},MRL1,1728/1,\n"));
}

#[test]
fn compute_error_row() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = gen(dir.path(), "c4.g", &["cycle", "4"]);
    let (code, text) = run(&["compute", &c4, "--index", "IRL_4,RL_4", "--degree", "plain", "--format", "csv"]);
    assert_eq!(code, 1);
    let rows: Vec<&str> = text.lines().collect();
    assert!(rows[1].contains("IRL_4,error: inverse undefined"), "{text}");
    assert!(rows[2].ends_with("RL_4,0/1,"));
}

#[test]
fn compute_all_keeps_error_rows() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = gen(dir.path(), "c4.g", &["cycle", "4"]);
    let (code, text) = run(&["compute", &c4, "--all", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(text.lines().count(), 1 + 448 + 14);
    let names: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn compute_float_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = gen(dir.path(), "p3.g", &["path", "3"]);
    let (_, text) = run(&["compute", &p3, "--index", "RL_16", "--float", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["value"], "0/1 + 2/1*sqrt(2)");
    assert_eq!(v[0]["approx"], "2.82842712475");
}

#[test]
fn compute_unknown_name_suggests() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = gen(dir.path(), "p3.g", &["path", "3"]);
    let (code, text) = run(&["compute", &p3, "--index", "BRLL_1"]);
    assert_eq!(code, 1);
    assert!(text.contains("did you mean `BRL_1`"), "{text}");
}

#[test]
fn compute_reports_parse_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g");
    std::fs::write(&bad, "n 3\n0 1\n1 x\n").unwrap();
    let (code, text) = run(&["compute", bad.to_str().unwrap(), "--index", "RL1"]);
    assert_eq!(code, 2);
    assert!(text.contains("line 3"), "{text}");
}

#[test]
fn verify_nrl1_cycle() {
    let (code, text) = run(&["verify", "--family", "cycle", "--range", "4..8", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(text.contains("NRL1/cycle,n=4,432/1,192/1,DISCREPANT"));
    let (code, text) = run(&["verify", "--family", "cycle", "--range", "3..3", "--oracle", "NRL1/cycle", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(text.lines().nth(1), Some("NRL1/cycle,n=3,144/1,144/1,CONFIRMED"));
}

#[test]
fn verify_wheel_matches_baseline() {
    let (code, text) = run(&["verify", "--family", "wheel", "--range", "3..8"]);
    assert_eq!(code, 0);
    assert!(text.contains("RLKV1/wheel              CONFIRMED"));
}

#[test]
fn verify_fails_on_deviation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("baseline.csv");
    std::fs::write(&path, "RL1/cycle,n=3,DISCREPANT\n").unwrap();
    let (code, _) = run(&["verify", "--oracle", "RL1/cycle", "--range", "3..4", "--baseline", path.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn verify_range_parsing() {
    use crate::verify::parse_range;
    assert_eq!(parse_range("3..10"), Ok((3, 10)));
    assert_eq!(parse_range("3..=5"), Ok((3, 5)));
    assert_eq!(parse_range("7"), Ok((7, 7)));
    assert!(parse_range("5..3").is_err());
}

#[test]
fn table_banhatti_rows() {
    let dir = tempfile::tempdir().unwrap();
    let w4 = gen(dir.path(), "w4.g", &["wheel", "4"]);
    let (_, text) = run(&["table", &w4, "--source", "banhatti"]);
    let rows: Vec<&str> = text.lines().take(3).collect();
    assert_eq!(rows, ["vertex,value_num,value_den", "0@0-1,5,1", "1@0-1,5,2"]);
}

#[test]
fn list_indices_covers_registry() {
    let (_, text) = run(&["list-indices"]);
    assert_eq!(text.lines().count(), 1 + 448 + 14);
    assert!(text.contains("MHRRL_2,revan,V2,hyper,product,value"));
}

#[test]
fn list_oracles_has_statements() {
    let (_, text) = run(&["list-oracles"]);
    assert!(text.contains("RL1/wheel,wheel,RL_1,n >= 3,n(n^2+3n+36)"));
}
