use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use num_bigint::BigInt;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn intpoly(args: &[&str]) -> Run {
    intpoly_stdin(args, "")
}

fn intpoly_stdin(args: &[&str], input: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_intpoly"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas/v1").join(format!("{name}.json"));
    let s: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

/// Runs with `--format json`, checks the exit code and validates the document.
fn json_run(args: &[&str], code: i32, schema_name: &str) -> Value {
    json_run_stdin(args, "", code, schema_name)
}

fn json_run_stdin(args: &[&str], input: &str, code: i32, schema_name: &str) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let r = intpoly_stdin(&all, input);
    assert_eq!(r.code, code, "{args:?}: {}", r.stderr);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let validator = schema(schema_name);
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} against {schema_name}: {errors:?}");
    v
}

fn algebra_json(rank: usize, mult: &[i64], relations: &[&[i64]], unity: &[i64]) -> String {
    serde_json::json!({"rank": rank, "mult": mult, "relations": relations, "unity": unity}).to_string()
}

/// `F_2 x ... x F_2` with `r` factors.
fn boolean_algebra(r: usize) -> String {
    let mut mult = vec![0i64; r * r * r];
    for i in 0..r {
        mult[(i * r + i) * r + i] = 1;
    }
    let rels: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| if i == j { 2 } else { 0 }).collect()).collect();
    let rels: Vec<&[i64]> = rels.iter().map(Vec::as_slice).collect();
    algebra_json(r, &mult, &rels, &vec![1; r])
}

#[test]
fn basis_over_z() {
    let v = json_run(&["basis", "--domain", "Z", "--upto", "20"], 0, "basis");
    let basis = v["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 21);
    let mut fact = BigInt::from(1);
    for (n, g) in basis.iter().enumerate() {
        if n > 0 {
            fact *= n;
        }
        let expected = if n <= 1 { "1".to_string() } else { format!("1/{fact}") };
        assert_eq!(g["sigma"], expected.as_str(), "n = {n}");
        assert_eq!(g["poly"].as_array().unwrap().len(), n + 1);
        assert_eq!(g["poly"][n], expected.as_str());
    }
}

#[test]
fn basis_over_non_polya_field() {
    let v = json_run(&["basis", "--domain", "Quad:-5", "--upto", "4"], 1, "basis");
    assert_eq!(v["polya"], false);
    assert_eq!(v["obstruction"]["q"], 2);
    let v = json_run(&["basis", "--domain", "Quad:-1", "--upto", "4"], 0, "basis");
    assert_eq!(v["basis"].as_array().unwrap().len(), 5);
}

#[test]
fn pog_minus_five() {
    let v = json_run(&["pog", "--domain", "Quad:-5"], 1, "pog");
    assert_eq!(v["order"], 2);
    assert_eq!(v["is_trivial"], false);
    let v = json_run(&["pog", "--domain", "Quad:-7"], 0, "pog");
    assert_eq!(v["is_trivial"], true);
}

#[test]
fn pog_sweep_csv() {
    let r = intpoly(&["pog", "--sweep-from", "-30", "--sweep-to", "-1", "--format", "csv"]);
    assert_eq!(r.code, 0);
    let mut rdr = csv::Reader::from_reader(r.stdout.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        ["d", "disc", "class_number", "pog_order", "is_trivial", "is_proper"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    // squarefree d in [-30, -1]
    let squarefree = (1..=30i64).filter(|n| (2..=5).all(|p| n % (p * p) != 0)).count();
    assert_eq!(rows.len(), squarefree);
    let r29 = rows.iter().find(|r| &r[0] == "-29").unwrap();
    assert_eq!((&r29[2], &r29[3], &r29[5]), ("6", "2", "true"));
    json_run(&["pog", "--sweep-from", "-30", "--sweep-to", "-1"], 0, "pog-sweep");
}

#[test]
fn membership_convention() {
    // (X^2 - X)/2, constant term first
    let v = json_run(&["membership", "--domain", "Z", "--poly", "0,-1/2,1/2"], 0, "membership");
    assert_eq!(v["member"], true);
    let v = json_run(&["membership", "--domain", "Z", "--poly", "1/2,-1/2,0"], 1, "membership");
    assert_eq!(v["member"], false);
    assert_eq!(v["witness"], "0");
    assert_eq!(v["value"], "1/2");
    let v = json_run(&["membership", "--domain", "FpT:2", "--poly", "0,1/(T^2+T),1/(T^2+T)"], 0, "membership");
    assert_eq!(v["member"], true);
    let v = json_run(&["membership", "--domain", "Quad:-1", "--poly", "0,1/2,1/2"], 1, "membership");
    assert_eq!(v["member"], false);
}

#[test]
fn poly_file_input() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("poly.txt");
    std::fs::write(&path, "0, 1/3,\n -1/2, 1/6\n").unwrap();
    let v = json_run(&["membership", "--domain", "Z", "--poly-file", path.to_str().unwrap()], 0, "membership");
    assert_eq!(v["member"], true);
}

#[test]
fn expand_cube() {
    let v = json_run(&["expand", "--domain", "Z", "--poly", "0,0,0,1"], 0, "expand");
    assert_eq!(v["coefficients"], serde_json::json!(["0", "1", "6", "6"]));
    let v = json_run(&["expand", "--domain", "Z", "--poly", "0,0,1/2"], 1, "expand");
    assert_eq!(v["integral"], false);
}

#[test]
fn ideals_and_classgroup() {
    let v = json_run(&["ideals", "--domain", "FpT:2", "--upto", "4"], 0, "ideals");
    assert_eq!(v["ideals"][4]["factorial"], "(T)^3*(T+1)^3*(T^2+T+1)");
    let v = json_run(&["classgroup", "--domain", "Quad:-29"], 0, "classgroup");
    assert_eq!(v["class_number"], 6);
    assert_eq!(v["disc"], "-116");
}

#[test]
fn certificates() {
    let v = json_run(&["verify-presentation", "--domain", "Zloc:3", "--maxdeg", "40"], 0, "presentation");
    assert_eq!(v["pass"], true);
    assert_eq!(v["monomials"].as_array().unwrap().len(), 41);
    let v = json_run(&["verify-relations", "--domain", "Z", "--q", "2,3", "--depth", "3"], 0, "relations");
    assert_eq!(v["towers"].as_array().unwrap().len(), 2);
    assert_eq!(v["pass"], true);
}

#[test]
fn wpc_verdicts() {
    // F_4 = Z[x]/(2, x^2 + x + 1): not WPC, with a witness
    let f4 = algebra_json(2, &[1, 0, 0, 1, 0, 1, -1, -1], &[&[2, 0], &[0, 2]], &[1, 0]);
    let v = json_run_stdin(&["wpc", "--algebra", "-", "--conditions"], &f4, 1, "wpc");
    assert_eq!(v["overall"], false);
    assert!(v["verdicts"][0]["witness"].is_object());
    assert_eq!(v["conditions"][0]["agree"], true);
    let z6 = algebra_json(1, &[1], &[&[6]], &[1]);
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("z6.json");
    std::fs::write(&path, z6).unwrap();
    let v = json_run(&["wpc", "--algebra", path.to_str().unwrap()], 0, "wpc");
    assert_eq!(v["overall"], true);
    assert_eq!(v["primes_checked"], serde_json::json!([2, 3]));
}

#[test]
fn split_and_w_table() {
    let v = json_run(&["split-analysis", "--domain", "Quad:-1", "--bound", "30"], 0, "split-analysis");
    assert_eq!(v["split"], serde_json::json!([5, 13, 17, 29]));
    let v = json_run(&["w-table", "--kmax", "4", "--nmax", "10"], 0, "w-table");
    assert_eq!(v["table"].as_array().unwrap().len(), 3 * 11);
    let r = intpoly(&["w-table", "--kmax", "2", "--nmax", "10", "--format", "csv"]);
    let last = r.stdout.lines().last().unwrap();
    // v_2(10!) = 8
    assert_eq!(last, "2,10,8");
}

#[test]
fn operational_errors_exit_two() {
    for args in [
        &["basis", "--domain", "Q", "--upto", "3"][..],
        &["pog", "--domain", "Quad:-4"],
        &["pog", "--domain", "Quad:3"],
        &["basis", "--domain", "Z", "--upto", "3", "--frobnicate"],
        &["membership", "--domain", "Z", "--poly", "1/0"],
        &["pog", "--domain", "Quad:-1000003"],
        &["classgroup", "--domain", "Z"],
    ] {
        let r = intpoly(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        assert!(!r.stderr.is_empty());
    }
    // 2^21 residues exceed the enumeration budget
    let r = intpoly_stdin(&["wpc", "--algebra", "-"], &boolean_algebra(21));
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("budget"), "{}", r.stderr);
}

#[test]
fn output_independent_of_jobs() {
    for args in [
        &["pog", "--sweep-from", "-150", "--sweep-to", "-1", "--format", "csv"][..],
        &["ideals", "--domain", "Z", "--upto", "60", "--format", "json"],
        &["basis", "--domain", "Zloc:3", "--upto", "12", "--format", "json"],
    ] {
        let outs: Vec<String> = ["1", "3", "8"]
            .iter()
            .map(|j| {
                let mut a = args.to_vec();
                a.extend(["--jobs", j]);
                intpoly(&a).stdout
            })
            .collect();
        assert!(!outs[0].is_empty());
        assert!(outs.iter().all(|o| o == &outs[0]), "{args:?}");
    }
}

#[test]
fn output_flag_writes_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("basis.json");
    let r = intpoly(&["basis", "--domain", "Z", "--upto", "5", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let direct = intpoly(&["basis", "--domain", "Z", "--upto", "5", "--format", "json"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct.stdout);
}
