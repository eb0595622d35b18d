use std::io::Write;
use std::process::{Command, Output, Stdio};

fn superalg(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_superalg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn build_k3_has_half_coefficients() {
    let o = superalg(&["build", "k3"], None);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["dim"], 3);
    assert!(stdout(&o).contains("\"1/2\""));
}

#[test]
fn d_zero_is_not_simple() {
    let d0 = stdout(&superalg(&["build", "dt", "--t", "0"], None));
    let o = superalg(&["analyze", "--simple", "-"], Some(&d0));
    assert_eq!(o.status.code(), Some(1));
    let cert = json(&o);
    assert_eq!(cert["simple"], false);
    assert_eq!(cert["witness_ideal"].as_array().unwrap().len(), 3);
}

#[test]
fn d_one_is_simple() {
    let d1 = stdout(&superalg(&["build", "dt", "--t", "1"], None));
    let o = superalg(&["analyze", "--simple"], Some(&d1));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["witness_ideal"], serde_json::Value::Null);
}

#[test]
fn check_reports_witness() {
    let d1 = stdout(&superalg(&["build", "dt", "--t", "1"], None));
    let ok = superalg(&["check", "--identity", "sj2"], Some(&d1));
    assert_eq!(ok.status.code(), Some(0));
    let bad = superalg(&["check", "--identity", "assoc"], Some(&d1));
    assert_eq!(bad.status.code(), Some(1));
    assert!(json(&bad)["witness"]["tuple"].is_array());
    assert_eq!(superalg(&["check", "--identity", "nope"], Some(&d1)).status.code(), Some(2));
}

#[test]
fn modular_build() {
    let o = superalg(&["build", "k3", "--char", "5"], None);
    assert_eq!(json(&o)["char"], 5);
    assert!(stdout(&o).contains("\"3/1\""));
    assert_eq!(superalg(&["build", "k3", "--char", "4"], None).status.code(), Some(2));
}

#[test]
fn suite_exit_codes() {
    let o = superalg(&["suite", "catalog_identity_sweep"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["passed"], true);
    assert_eq!(superalg(&["suite", "no_such_suite"], None).status.code(), Some(2));
}

#[test]
fn malformed_json_reports_position() {
    let o = superalg(&["check", "--identity", "sj2"], Some("{\n  \"char\": 0,\n  \"dim\": }"));
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn inapplicable_parameter_is_usage_error() {
    let o = superalg(&["build", "k3", "--n", "2"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("--n"));
    assert_eq!(superalg(&["build", "grassmann"], None).status.code(), Some(2));
}

#[test]
fn peirce_and_ideal_by_name() {
    let d1 = stdout(&superalg(&["build", "dt", "--t", "1"], None));
    let p = json(&superalg(&["analyze", "--peirce", "e1"], Some(&d1)));
    assert_eq!(p["half"].as_array().unwrap().len(), 2);
    let d0 = stdout(&superalg(&["build", "dt", "--t", "0"], None));
    let i = json(&superalg(&["analyze", "--ideal", "0,0,1,0"], Some(&d0)));
    assert_eq!(i["proper"], true);
}

#[test]
fn double_matches_build() {
    let dir = std::env::temp_dir().join(format!("superalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = dir.join("g.json");
    let br = dir.join("br.json");
    std::fs::write(&g, stdout(&superalg(&["build", "grassmann", "--n", "2"], None))).unwrap();
    std::fs::write(&br, stdout(&superalg(&["build", "poisson_bracket", "--n", "2"], None))).unwrap();
    let doubled = superalg(&["double", g.to_str().unwrap(), "--bracket", br.to_str().unwrap()], None);
    assert_eq!(doubled.status.code(), Some(0));
    let built = superalg(&["build", "kantor", "--n", "2"], None);
    assert_eq!(stdout(&doubled), stdout(&built));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn envelope_from_stdin() {
    let k = stdout(&superalg(&["build", "k3"], None));
    let o = superalg(&["envelope", "--m", "2"], Some(&k));
    assert_eq!(o.status.code(), Some(0));
    // One even basis vector times 2 even Grassmann monomials, two odd times 2 odd.
    assert_eq!(json(&o)["dim"], 6);
}
