use std::path::Path;
use std::process::{Command, Output};

fn bstir(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bstir")).args(args).env("BSTIR_CACHE_DIR", cache).output().expect("spawn bstir")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn compute_values() {
    let dir = tempfile::tempdir().unwrap();
    let o = bstir(dir.path(), &["compute", "GENOCCHI_THEOREM_16", "12"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "2073\n"));
    let o = bstir(dir.path(), &["compute", "stirling_single_10", "1"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "-1/2\n"));
    let o = bstir(dir.path(), &["compute", "FAULHABER_RECURSION_13", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "1/42");
    let o = bstir(dir.path(), &["--format", "csv", "compute", "TANGENT_DOUBLE_14_AS_PRINTED", "2"]);
    assert_eq!(stdout(&o), "formula,n,value\nTANGENT_DOUBLE_14_AS_PRINTED,2,1/3\n");
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["compute", "FAULHABER_RECURSION_13", "3"],
        &["compute", "NO_SUCH_FORMULA", "4"],
        &["compute", "GENOCCHI_THEOREM_16", "0"],
        &["compute", "HIGGINS_9"],
        &["compute", "HIGGINS_9", "-1"],
        &["verify", "--max-n", "abc"],
        &["bench", "--reps", "0"],
        &["table", "euler", "4"],
        &["cache", "rebuild"],
        &["--format", "xml", "verify"],
        &[],
    ];
    for args in cases {
        let o = bstir(dir.path(), args);
        assert_eq!(code(&o), 1, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?} should explain itself");
    }
    let o = bstir(dir.path(), &["compute", "FAULHABER_RECURSION_13", "3"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not applicable"));
}

#[test]
fn help_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&bstir(dir.path(), &["--help"])), 0);
}

#[test]
fn verify_exit_status_contract() {
    let dir = tempfile::tempdir().unwrap();
    let o = bstir(dir.path(), &["verify", "--max-n", "20"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("TANGENT_DOUBLE_14_AS_PRINTED=1/3"));
    assert_eq!(code(&bstir(dir.path(), &["verify", "--max-n", "20", "--strict"])), 2);
    let o = bstir(dir.path(), &["verify", "--max-n", "0", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 1);
    assert_eq!(v["records"][0]["consensus"], "1");
    // no even index >= 2, so nothing untrusted to promote
    assert_eq!(code(&bstir(dir.path(), &["verify", "--max-n", "1", "--strict"])), 0);
}

#[test]
fn verify_csv_is_stable_and_sequential_matches() {
    let dir = tempfile::tempdir().unwrap();
    let a = bstir(dir.path(), &["verify", "--max-n", "12", "--format", "csv"]);
    let b = bstir(dir.path(), &["verify", "--max-n", "12", "--format", "csv", "--sequential"]);
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    assert!(text.starts_with("n,formula,status,value\n"));
    assert!(text.contains("\n2,TANGENT_DOUBLE_14_AS_PRINTED,dissent,1/3\n"));
    assert!(text.contains("\n3,FAULHABER_RECURSION_13,not_applicable,\n"));
}

#[test]
fn tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = bstir(dir.path(), &["table", "bernoulli", "4"]);
    assert_eq!(stdout(&o), "0 1\n1 -1/2\n2 1/6\n3 0\n4 -1/30\n");
    let o = bstir(dir.path(), &["table", "stirling", "--max-n", "4"]);
    assert_eq!(stdout(&o).lines().last(), Some("0,1,7,6,1"));
    let o = bstir(dir.path(), &["table", "genocchi", "8", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,value\n1,1\n2,-1\n3,0\n4,1\n5,0\n6,-3\n7,0\n8,17\n");
    let o = bstir(dir.path(), &["table", "stirling", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"][2], serde_json::json!(["0", "1", "1"]));
}

#[test]
fn bench_schema() {
    let dir = tempfile::tempdir().unwrap();
    let o = bstir(dir.path(), &["bench", "--max-n", "8", "--reps", "1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("formula,n,reps,median_ns,value"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 8);
    for r in &rows {
        assert_eq!(r.len(), 5);
        assert_eq!((r[1], r[2], r[4]), ("8", "1", "-1/30"));
        assert!(r[3].parse::<u64>().is_ok());
    }
    let o = bstir(dir.path(), &["bench", "--max-n", "8", "--reps", "2", "--deterministic"]);
    assert!(stdout(&o).lines().skip(1).all(|l| l.split(',').nth(3) == Some("0")));
}

#[test]
fn cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("nested");
    assert_eq!(code(&bstir(&cache, &["cache", "clear"])), 0);
    let o = bstir(&cache, &["cache", "build", "40"]);
    assert_eq!(code(&o), 0);
    let o = bstir(&cache, &["cache", "path"]);
    assert_eq!(code(&o), 0);
    let path = stdout(&o).trim().to_string();
    assert!(Path::new(&path).is_file());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("STIRLING2 v1 max_n=40\n"));
    assert!(text.ends_with("END 861\n"));
    assert_eq!(code(&bstir(&cache, &["cache", "clear"])), 0);
    assert!(!Path::new(&path).exists());
    assert_eq!(code(&bstir(&cache, &["cache", "clear"])), 0);
}

#[test]
fn unwritable_cache_dir_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "not a directory").unwrap();
    let o = bstir(&blocker.join("sub"), &["cache", "build", "5"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn corrupt_cache_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let clean = bstir(dir.path(), &["table", "genocchi", "10"]);
    std::fs::write(dir.path().join("stirling2-v1.txt"), "STIRLING2 v1 max_n=3\n0 0 1\n").unwrap();
    let o = bstir(dir.path(), &["table", "genocchi", "10"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), stdout(&clean));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ignoring cache"));
}

#[test]
fn small_cache_is_extended_not_trusted() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&bstir(dir.path(), &["cache", "build", "3"])), 0);
    let o = bstir(dir.path(), &["compute", "STIRLING_RATIO_12", "10"]);
    assert_eq!(stdout(&o), "5/66\n");
}
