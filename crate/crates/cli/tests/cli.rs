use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(format!("{name}.hopf.json"));
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfkit")).args(args).output().expect("run hopfkit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut a = args.to_vec();
    a.push("--format=json");
    let o = run(&a);
    let v = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (o.status.code().unwrap(), v)
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", &corpus("ac2")]).status.code(), Some(0));
    let o = run(&["verify", &corpus("broken_counit")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] counit"));
    assert_eq!(run(&["verify", "nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\n  \"dim\": 1,\n  oops\n}").unwrap();
    let o = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn analyze_corpus() {
    let (code, v) = json(&["analyze", &corpus("double_z3")]);
    assert_eq!(code, 0);
    assert_eq!(v["factorizable"], true);
    assert_eq!(v["rank"], 3);
    assert_eq!(v["dims"]["Phi_R(H*)"], 9);
    assert_eq!(v["s-matrix"]["nondegenerate"], true);
    let (_, v) = json(&["analyze", &corpus("ks3_rho")]);
    assert_eq!(v["minimal"], false);
    assert_eq!(v["dims"]["H_R"], 3);
    let (_, v) = json(&["analyze", &corpus("trivial_r")]);
    assert_eq!(v["triangular"], true);
    let (code, v) = json(&["analyze", &corpus("ac2_b1c0")]);
    assert_eq!(code, 0);
    assert!(v["s-matrix"].as_str().unwrap().starts_with("unavailable"));
}

#[test]
fn analyze_with_supplied_characters() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("chars.json");
    // kS3 with R = 1 (x) 1: trivial, sign and the degree-2 character
    let chars = r#"{"ambient": 6, "vectors": [
        [[0, "1"], [1, "1"], [2, "1"], [3, "1"], [4, "1"], [5, "1"]],
        [[0, "1"], [1, "1"], [2, "1"], [3, "-1"], [4, "-1"], [5, "-1"]],
        [[0, "2"], [1, "-1"], [2, "-1"]]]}"#;
    std::fs::write(&p, chars).unwrap();
    let (code, v) = json(&["analyze", &corpus("trivial_r"), "--characters", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["s-matrix"]["source"], "user supplied");
    assert_eq!(v["s-matrix"]["rank"], 1);
    std::fs::write(&p, r#"{"ambient": 6, "vectors": [[[0, "1"]]]}"#).unwrap();
    assert_eq!(run(&["analyze", &corpus("trivial_r"), "--characters", p.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn quotient_corpus() {
    let (code, v) = json(&["quotient", &corpus("ac2_b1c0"), "--coalgebra=full"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim K_C"], 4);
    assert_eq!(v["dim H_bar"], 2);
    assert_eq!(v["H_bar triangular"], true);
    let (_, v) = json(&["quotient", &corpus("double_z3"), "--coalgebra=full"]);
    assert_eq!(v["H_bar = k"], true);
    let (code, v) = json(&["quotient", &corpus("ks3_rho"), "--coalgebra=grouplikes"]);
    assert_eq!(code, 0);
    let images = v["group-like images"].as_array().unwrap();
    assert_eq!(images.len(), 2);
    assert!(images.iter().all(|i| i["status"] == "pass"));
}

#[test]
fn quotient_rejects_non_subcoalgebra() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("c.json");
    // e^g alone is not a subcoalgebra of (A_C2)*
    std::fs::write(&p, r#"{"ambient": 8, "vectors": [[[1, "1"]]]}"#).unwrap();
    let o = run(&["quotient", &corpus("ac2_b1c0"), "--coalgebra", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("subcoalgebra"));
}

#[test]
fn quotient_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("bar");
    let o = run(&["quotient", &corpus("ac2_b1c0"), "--export", prefix.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let alg = format!("{}.hopf.json", prefix.display());
    assert_eq!(run(&["verify", &alg]).status.code(), Some(0));
    assert!(std::path::Path::new(&format!("{}.morphism.json", prefix.display())).exists());
}

#[test]
fn enumerate_group_counts() {
    for (g, n) in [("S3", 3), ("Z7xZ3", 1), ("Z3", 3)] {
        let (code, v) = json(&["enumerate-group", g]);
        assert_eq!(code, 0);
        assert_eq!(v["count"], n, "{g}");
    }
    assert_eq!(run(&["enumerate-group", "Bogus"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate-group", "Z70"]).status.code(), Some(1));
}

#[test]
fn enumerate_group_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("z2.json");
    std::fs::write(&p, r#"{"order": 2, "table": [[0, 1], [1, 0]]}"#).unwrap();
    let (code, v) = json(&["enumerate-group", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 2);
}

#[test]
fn double_writes_a_verified_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.hopf.json");
    let o = run(&["double", &corpus("broken_counit")]);
    assert_eq!(o.status.code(), Some(1));
    let z3 = dir.path().join("z3.hopf.json");
    let text = std::fs::read_to_string(corpus("broken_counit")).unwrap().replace("[1, \"2\"]", "[1, \"1\"]");
    std::fs::write(&z3, text).unwrap();
    let o = run(&["double", z3.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let (code, v) = json(&["analyze", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["factorizable"], true);
    let same = std::fs::read_to_string(corpus("double_z3")).unwrap();
    let built = std::fs::read_to_string(&out).unwrap();
    assert_eq!(built.lines().filter(|l| !l.contains("\"name\"")).collect::<Vec<_>>(), {
        same.lines().filter(|l| !l.contains("\"name\"")).collect::<Vec<_>>()
    });
}

#[test]
fn report_corpus() {
    let (code, v) = json(&["report", &corpus("ac2_b1c0")]);
    assert_eq!(code, 0);
    assert_eq!(v["applicable"], false);
    let hyp = v["hypotheses"].as_array().unwrap();
    assert!(hyp.iter().any(|i| i["name"] == "Tr S^2 != 0" && i["detail"] == "Tr S^2 = 0"));
    let (code, v) = json(&["report", &corpus("kg21_trivial")]);
    assert_eq!(code, 0);
    assert_eq!(v["branch"], "triangular, R = 1 (x) 1");
    assert_eq!(v["no applicable conclusion fails"], true);
}

#[test]
fn report_z15_all_pass() {
    let (code, v) = json(&["report", &corpus("kz15_nondeg")]);
    assert_eq!(code, 0);
    assert_eq!(v["applicable"], true);
    for part in ["hypotheses", "conclusions"] {
        assert!(v[part].as_array().unwrap().iter().all(|i| i["status"] == "pass"), "{part}");
    }
}

#[test]
fn reports_are_deterministic() {
    for args in [vec!["analyze", "KS3"], vec!["quotient", "AC2"], vec!["enumerate-group", "S3"]] {
        let args: Vec<String> = args
            .iter()
            .map(|a| match *a {
                "KS3" => corpus("ks3_rho"),
                "AC2" => corpus("ac2_b1c0"),
                s => s.to_string(),
            })
            .collect();
        let a: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&a).stdout, run(&a).stdout);
    }
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.json");
    let o = run(&["verify", &corpus("ac2"), "--format", "json", "--out", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(v["result"], "pass");
}
