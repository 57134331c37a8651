use std::collections::BTreeSet;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic-zeta")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_single_class() {
    let o = run(&["enumerate", "--lattice", "1", "--sign", "pos", "--max", "1"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "schema:1");
    assert_eq!(lines.len(), 2);
    let v: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(v["lattice"], 1);
    assert_eq!(v["sign"], "+");
    assert_eq!(v["stab"], 3);
}

#[test]
fn enumerate_empty_and_full_columns() {
    let o = run(&["enumerate", "--lattice", "4", "--sign", "+", "--max", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1);

    let o = run(&["enumerate", "--lattice", "1", "--sign", "neg", "--max", "51", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let body = out.strip_prefix("schema:1\n").expect("schema header");
    let mut rdr = csv::Reader::from_reader(body.as_bytes());
    let ns: BTreeSet<u64> = rdr.records().map(|r| r.unwrap()[2].parse().unwrap()).collect();
    assert_eq!(ns.len(), 25);
    assert!(ns.iter().all(|n| n % 4 == 0 || n % 4 == 3));
}

#[test]
fn output_is_independent_of_workers() {
    let a = run(&["--workers", "1", "enumerate", "--lattice", "7", "--sign", "neg", "--max", "3000"]);
    let b = run(&["--workers", "4", "enumerate", "--lattice", "7", "--sign", "neg", "--max", "3000"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["--workers", "1", "density", "--lattice", "3", "--sign", "pos", "--max", "20000"]);
    let b = run(&["--workers", "3", "density", "--lattice", "3", "--sign", "pos", "--max", "20000"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn coeffs_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.csv");
    let o = run(&["coeffs", "--lattice", "1", "--sign", "pos", "--max", "8", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "schema:1");
    assert_eq!(lines[1], "n,weighted,unweighted,irreducible_weighted,reducible_weighted");
    assert_eq!(lines[2], "1,1/3,1,0/1,1/3");
    assert_eq!(lines.len(), 10);
}

#[test]
fn density_rows_and_usage_errors() {
    let o = run(&["density", "--lattice", "2", "--sign", "neg", "--max", "4000"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "schema:1");
    assert_eq!(lines[1], "X,S_unweighted,S_weighted,prediction,residual,residual/X^(2/3)");
    assert_eq!(lines.len(), 12);
    assert!(lines[11].starts_with("4000,"));

    assert_eq!(code(&run(&["density", "--lattice", "1", "--sign", "pos", "--max", "1000", "--checkpoints", "0"])), 2);
    assert_eq!(code(&run(&["density", "--lattice", "1", "--sign", "pos", "--max", "100", "--max-bound", "10"])), 2);
    assert_eq!(code(&run(&["enumerate", "--lattice", "11", "--sign", "pos", "--max", "10"])), 2);
    assert_eq!(code(&run(&["enumerate", "--lattice", "1", "--sign", "pos", "--max", "0"])), 2);
    assert_eq!(code(&run(&["verify", "--suite", "nonsense"])), 2);
    assert_eq!(code(&run(&[])), 2);
}

#[test]
fn verify_suites_pass() {
    for suite in ["tables", "rank", "non-relation", "congruence", "dual", "indices", "classification", "local-densities"] {
        let o = run(&["verify", "--suite", suite]);
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = run(&["verify", "--suite", "tables"]);
    assert!(stdout(&o).contains("250/250 entries"));
    let o = run(&["verify", "--suite", "rank"]);
    assert!(stdout(&o).contains("rank=14"));
    let o = run(&["verify", "--suite", "relations", "--max", "600"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn perturbed_coefficient_fails() {
    let o = run(&["verify", "--suite", "tables", "--perturb", "4,+,7"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL tables/left"));
    // Outside the table rows and in a lattice without relations.
    let o = run(&["verify", "--suite", "relations", "--max", "400", "--perturb", "5,-,300"]);
    assert_eq!(code(&o), 1);
    // Beyond the checked range the change is invisible.
    let o = run(&["verify", "--suite", "lambda", "--max", "400", "--perturb", "8,+,401"]);
    assert_eq!(code(&o), 0);
}

#[test]
#[ignore = "runs every suite, several minutes"]
fn full_suite_and_mutation() {
    assert_eq!(code(&run(&["verify", "--suite", "all"])), 0);
    assert_eq!(code(&run(&["verify", "--suite", "all", "--perturb", "6,-,1000"])), 1);
}

#[test]
fn table_and_golden_dump() {
    let o = run(&["--dump-golden"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("schema:1\n# Left\n"));
    assert!(out.contains("# Right"));
    let o = run(&["table", "--side", "right"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("identical to the reference table"));
    let o = run(&["table", "--side", "left", "--convention", "alternative"]);
    assert_eq!(code(&o), 1);
}
