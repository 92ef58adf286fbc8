use std::process::{Command, Output};

fn drg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn spectrum_of_39() {
    let o = drg(&["spectrum", "--array", "39,24,1;1,4,39", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    let vals: Vec<&str> = j["spectrum"].as_array().unwrap().iter().map(|e| e["value"].as_str().unwrap()).collect();
    let ms: Vec<&str> =
        j["spectrum"].as_array().unwrap().iter().map(|e| e["multiplicity"].as_str().unwrap()).collect();
    assert_eq!(vals, ["39", "13", "-1", "-3"]);
    assert_eq!(ms, ["1", "45", "39", "195"]);
}

#[test]
fn surd_pair_is_exact() {
    let o = drg(&["spectrum", "--array", "10,6,1;1,3,10"]);
    let s = stdout(&o);
    assert!(s.contains("surd:sqrt(10)") && s.contains("surd:-sqrt(10)"), "{s}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(drg(&["spectrum", "--array", "bad"]).status.code(), Some(2));
    assert_eq!(drg(&["feasible", "--array", "3,2;1"]).status.code(), Some(2));
    assert_eq!(drg(&["search", "--case", "C9"]).status.code(), Some(2));
    assert_eq!(drg(&["graph", "claw", "--name", "nosuch"]).status.code(), Some(2));
    assert_eq!(drg(&["taylor", "--kmax", "10"]).status.code(), Some(2));
    assert_eq!(drg(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn feasibility_reports() {
    let j = json(&drg(&["feasible", "--array", "4,2,1;1,1,3"]));
    assert_eq!(j["checks"]["F1"]["pass"], false);
    assert_eq!(j["checks"]["F1"]["witness"], "k3 = 8/3");

    let j = json(&drg(&["feasible", "--array", "39,24,1;1,4,39"]));
    assert_eq!(j["verdict"], "feasible");

    let j = json(&drg(&["feasible", "--array", "27,16,4;1,2,24"]));
    assert_eq!(j["verdict"], "feasible");
    let items = j["post_filter"]["items"].as_array().unwrap();
    assert!(items.iter().any(|e| e["name"] == "nonterw_k" && e["outcome"] == "eliminated"));
}

#[test]
fn empty_case_is_not_an_error() {
    let o = drg(&["search", "--case", "C4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let o = drg(&["search", "--case", "C4", "--check-golden"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn search_c3_contains_reference_arrays() {
    let o = drg(&["search", "--case", "C3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let arrays: Vec<String> = rdr.records().map(|r| r.unwrap()[2].to_string()).collect();
    for a in ["13,8,1;1,4,13", "16,10,1;1,5,16", "39,24,1;1,4,39"] {
        assert!(arrays.iter().any(|x| x == a), "{arrays:?}");
    }
    // the enumeration also returns arrays missing from the shipped table
    let o = drg(&["search", "--case", "C3", "--check-golden"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("27,16,1;1,4,27"));
}

#[test]
fn graph_commands() {
    let s = stdout(&drg(&["graph", "claw", "--name", "johnson", "--params", "6,3", "--t", "4"]));
    assert_eq!(s.trim(), "no 4-claw");
    let s = stdout(&drg(&["graph", "geometric", "--name", "hamming", "--params", "3,3"]));
    assert!(s.starts_with("geometric: 27 Delsarte cliques of size 3"), "{s}");

    let dir = tempfile::tempdir().unwrap();
    for (fmt, file) in [("text", "j.txt"), ("json", "j.json")] {
        let path = dir.path().join(file);
        let p = path.to_str().unwrap();
        let o = drg(&["graph", "build", "--name", "johnson", "--params", "6,3", "--format", fmt, "--out", p]);
        assert_eq!(o.status.code(), Some(0));
        let s = stdout(&drg(&["graph", "verify", "--edges", p]));
        assert!(s.contains("{9,4,1;1,4,9} on 20 vertices"), "{s}");
    }
    let path = dir.path().join("paw.txt");
    std::fs::write(&path, "0 1\n1 2\n2 3\n0 2\n").unwrap();
    let s = stdout(&drg(&["graph", "verify", "--edges", path.to_str().unwrap()]));
    assert!(s.starts_with("not distance-regular"), "{s}");
}

#[test]
fn taylor_and_geoscan() {
    let a = drg(&["taylor", "--kmax", "30", "--format", "json"]);
    let b = drg(&["taylor", "--kmax", "30", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let j = json(&a);
    let ks = |name: &str| -> Vec<i64> {
        let br = j["report"]["branches"].as_array().unwrap().iter().find(|b| b["name"] == name).unwrap();
        br["candidates"].as_array().unwrap().iter().map(|c| c["k"].as_i64().unwrap()).collect()
    };
    assert_eq!(ks("m1=m3"), [5, 9, 13, 17, 25]);
    assert_eq!(ks("l=1"), [15, 27]);
    assert_eq!(ks("l=2"), [15]);

    let j = json(&drg(&["geoscan", "--format", "json"]));
    assert_eq!(j["report"]["survivors"].as_array().unwrap().len(), 3);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["spectrum", "--array", "65,40,16;1,4,50", "--format", "json"][..],
        &["feasible", "--array", "10,6,1;1,3,10"][..],
        &["geoscan", "--format", "json"][..],
    ] {
        assert_eq!(drg(args).stdout, drg(args).stdout, "{args:?}");
    }
}
