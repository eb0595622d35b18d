use superalg::construct::{catalog, d_t, k3, non_jordan_control, superform};
use superalg::linalg::Matrix;
use superalg::verifier::{
    amitsur_levitzki_check, d_t_simplicity_sweep, envelope_agreement_check, identity_sweep, lemma2_1_check,
    lemma3_2_check, negative_controls, peirce_inclusion_check, run_suite, u_grading_check, zero_bracket_algebra,
    SUITES,
};
use superalg::{Characteristic, Element, Scalar};

const Q: Characteristic = Characteristic::ZERO;

#[test]
fn clifford_classes_for_one_pair() {
    let r = lemma2_1_check(1).unwrap();
    assert!(r.passed, "{r}");
    // Exhaustion plus the four classes.
    assert_eq!(r.cases.len(), 5);
    assert!(lemma2_1_check(4).is_err());
}

#[test]
fn clifford_classes_scale() {
    for n in 2..=3 {
        let r = lemma2_1_check(n).unwrap();
        assert!(r.passed, "{r}");
        assert_eq!(r.cases.len(), 1 + (1 << (2 * n)));
    }
}

#[test]
fn bracket_identity_on_k3() {
    let a = k3(Q);
    let r = lemma3_2_check(&a, &Element::basis(&a, 0)).unwrap();
    assert!(r.passed, "{r}");
}

#[test]
fn bracket_dichotomy_zero_branch() {
    let a = zero_bracket_algebra(5);
    let r = lemma3_2_check(&a, &Element::basis(&a, 0)).unwrap();
    assert!(r.passed, "{r}");
}

#[test]
fn bracket_hypothesis_rejects_the_unit() {
    let a = d_t(&Scalar::one(Q));
    let unit = a.identity_element().unwrap();
    assert!(lemma3_2_check(&a, &unit).is_err());
}

#[test]
fn peirce_inclusions() {
    for t in [0, 1, -1, 2] {
        let r = peirce_inclusion_check(&d_t(&Scalar::from_int(Q, t)));
        assert!(r.passed, "t = {t}: {r}");
        assert!(r.cases.len() > 1);
    }
    let sf = superform(&Matrix::identity(Q, 2), &Matrix::zeros(Q, 0, 0)).unwrap().algebra;
    let r = peirce_inclusion_check(&sf);
    assert!(r.passed);
    assert!(r.cases.iter().any(|c| c.name.starts_with("skipped")));
}

#[test]
fn d_t_sweep() {
    let ts: Vec<Scalar> =
        [(1, 1), (-1, 1), (2, 1), (1, 2), (0, 1)].iter().map(|&(n, d)| Scalar::frac(Q, n, d).unwrap()).collect();
    assert!(d_t_simplicity_sweep(&ts).passed);
    assert!(d_t_simplicity_sweep(&[]).passed);
}

#[test]
fn identity_sweep_edge_cases() {
    assert!(identity_sweep("empty", &[]).passed);
    let entries = catalog().unwrap();
    assert!(identity_sweep("k3 only", &entries[..1]).passed);
}

#[test]
fn envelopes_agree() {
    for a in [k3(Q), d_t(&Scalar::one(Q)), non_jordan_control(Q)] {
        for m in [2, 4] {
            let r = envelope_agreement_check(&a, m).unwrap();
            assert!(r.passed, "{r}");
        }
    }
    let p3 = Characteristic::new(3).unwrap();
    assert!(envelope_agreement_check(&k3(p3), 2).is_err());
}

#[test]
fn standard_polynomial_suite() {
    let r = amitsur_levitzki_check(1, 10, 3).unwrap();
    assert!(r.passed, "{r}");
    let r = amitsur_levitzki_check(2, 100, 3).unwrap();
    assert!(r.passed, "{r}");
    assert_eq!(r, amitsur_levitzki_check(2, 100, 3).unwrap());
    assert!(amitsur_levitzki_check(4, 1, 0).is_err());
}

#[test]
fn u_grading_on_superforms() {
    let a = superform(&Matrix::identity(Q, 4), &superalg::construct::symplectic(Q, 1)).unwrap().algebra;
    let vs: Vec<Element> = (1..=4).map(|i| Element::basis(&a, i)).collect();
    let r = u_grading_check(&a, &vs);
    assert!(r.passed, "{r}");
}

#[test]
fn every_negative_control_fails() {
    let controls = negative_controls(5).unwrap();
    let mut names: Vec<&str> = controls.iter().map(|r| r.suite.as_str()).collect();
    names.sort();
    let mut expected: Vec<&str> = SUITES.iter().copied().filter(|&s| s != "negative_controls").collect();
    expected.sort();
    assert_eq!(names, expected);
    for r in &controls {
        assert!(!r.passed, "{} passed on corrupted input", r.suite);
    }
}

#[test]
fn unknown_suite_is_rejected() {
    assert!(run_suite("nope", 0).is_err());
}
