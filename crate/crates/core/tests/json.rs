use superalg::analysis::is_simple;
use superalg::construct::{catalog, d_t, k3, poisson_bracket_grassmann};
use superalg::identities::check_supercommutative;
use superalg::json::{
    algebra_from_json, algebra_to_json, bracket_from_json, bracket_to_json, certificate_value, render, report_value,
    suite_value,
};
use superalg::verifier::run_suite;
use superalg::{Characteristic, Error, Scalar};

const Q: Characteristic = Characteristic::ZERO;

#[test]
fn k3_table_is_canonical() {
    let expected = concat!(
        r#"{"char":0,"dim":3,"parity":[0,1,1],"names":["e","x","y"],"table":["#,
        r#"[0,0,0,"1/1"],[0,1,1,"1/2"],[0,2,2,"1/2"],[1,0,1,"1/2"],[1,2,0,"1/1"],[2,0,2,"1/2"],[2,1,0,"-1/1"]]}"#
    );
    assert_eq!(algebra_to_json(&k3(Q)), expected);
}

#[test]
fn modular_coefficients_are_reduced() {
    let p = Characteristic::new(5).unwrap();
    let text = algebra_to_json(&k3(p));
    assert!(text.contains(r#"[0,1,1,"3/1"]"#), "{text}");
    assert!(text.contains(r#"[2,1,0,"4/1"]"#), "{text}");
    assert_eq!(algebra_from_json(&text).unwrap(), k3(p));
}

#[test]
fn catalog_round_trips() {
    for entry in catalog().unwrap() {
        let text = algebra_to_json(&entry.algebra);
        let back = algebra_from_json(&text).unwrap();
        assert_eq!(back, entry.algebra, "{}", entry.name);
        assert_eq!(algebra_to_json(&back), text);
    }
}

#[test]
fn input_order_and_integer_coefficients_are_accepted() {
    let text = r#"{"char":0,"dim":3,"parity":[0,1,1],"names":["e","x","y"],"table":[
        [2,1,0,"-1"],[0,0,0,"1"],[0,1,1,"1/2"],[0,2,2,"2/4"],[1,0,1,"1/2"],[1,2,0,"1"],[2,0,2,"1/2"]]}"#;
    assert_eq!(algebra_from_json(text).unwrap(), k3(Q));
}

#[test]
fn malformed_json_reports_position() {
    let text = "{\"char\":0,\n\"dim\": 3,\n\"parity\": [0,1,1\n";
    match algebra_from_json(text) {
        Err(Error::Json { line, column, .. }) => {
            assert_eq!(line, 4);
            assert!(column <= 1);
        }
        other => panic!("expected a JSON error, got {other:?}"),
    }
    assert!(matches!(
        algebra_from_json(r#"{"char":0,"dim":1,"parity":[0],"names":["a"],"table":[],"extra":1}"#),
        Err(Error::Json { .. })
    ));
}

#[test]
fn invariants_are_named() {
    let odd_square_odd = r#"{"char":0,"dim":2,"parity":[0,1],"names":["e","x"],"table":[[1,1,1,"1"]]}"#;
    let msg = algebra_from_json(odd_square_odd).unwrap_err().to_string();
    assert!(msg.contains("parity-homogeneity"), "{msg}");
    let dup = r#"{"char":0,"dim":1,"parity":[0],"names":["e"],"table":[[0,0,0,"1"],[0,0,0,"2"]]}"#;
    assert!(algebra_from_json(dup).unwrap_err().to_string().contains("duplicate"));
    let short = r#"{"char":0,"dim":2,"parity":[0],"names":["e","f"],"table":[]}"#;
    assert!(algebra_from_json(short).is_err());
    let bad_char = r#"{"char":4,"dim":1,"parity":[0],"names":["e"],"table":[]}"#;
    assert!(matches!(algebra_from_json(bad_char), Err(Error::InvalidCharacteristic(4))));
    let zero_den = r#"{"char":0,"dim":1,"parity":[0],"names":["e"],"table":[[0,0,0,"1/0"]]}"#;
    assert!(algebra_from_json(zero_den).is_err());
}

#[test]
fn brackets_round_trip() {
    let br = poisson_bracket_grassmann(Q, 2).unwrap();
    let text = bracket_to_json(&br);
    assert!(text.starts_with(r#"{"char":0,"dim":4,"bracket":["#), "{text}");
    assert_eq!(bracket_from_json(br.algebra(), &text).unwrap(), br);
    let k = k3(Q);
    assert!(bracket_from_json(&k, &text).is_err());
}

#[test]
fn report_and_certificate_shapes() {
    let r = check_supercommutative(&k3(Q));
    assert_eq!(
        render(&report_value(&r)),
        format!(r#"{{"identity":"sj1","passed":true,"checked":{},"witness":null}}"#, r.checked())
    );
    let d0 = is_simple(&d_t(&Scalar::zero(Q))).unwrap();
    let v = certificate_value(&d0);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["simple", "dim", "centroid_dim", "mult_algebra_dim", "graded_mult_algebra_dim", "witness_ideal"]);
    assert_eq!(v["simple"], false);
    assert_eq!(v["dim"], 4);
    let ideal =
        serde_json::json!([["1/1", "0/1", "0/1", "0/1"], ["0/1", "0/1", "1/1", "0/1"], ["0/1", "0/1", "0/1", "1/1"]]);
    assert_eq!(v["witness_ideal"], ideal);
    let k = render(&certificate_value(&is_simple(&k3(Q)).unwrap()));
    assert!(k.ends_with(r#""witness_ideal":null}"#), "{k}");
}

#[test]
fn suite_serialization_is_byte_stable() {
    let a = render(&suite_value(&run_suite("amitsur_levitzki", 11).unwrap()));
    let b = render(&suite_value(&run_suite("amitsur_levitzki", 11).unwrap()));
    assert_eq!(a, b);
    assert!(a.starts_with(r#"{"suite":"amitsur_levitzki","passed":true,"cases":[{"name":"#));
}
