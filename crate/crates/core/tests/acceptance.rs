use std::time::{Duration, Instant};

use superalg::analysis::{centroid, is_simple, Subspace};
use superalg::construct::{
    catalog, clifford, d_t, fixed_points, k3, matrix_super, non_jordan_control, osp_superinvolution, subset_basis,
};
use superalg::extend::plus_algebra;
use superalg::identities::{check_jordan_ordinary, check_jordan_super};
use superalg::json::{render, suite_value};
use superalg::linalg::Matrix;
use superalg::verifier::{
    amitsur_levitzki_check, catalog_identity_sweep, envelope_agreement_check, lemma2_1_check, lemma3_2_check,
    lemma3_2_sweep, negative_controls, peirce_inclusion_check, u_grading_sweep, SuiteResult, SUITES,
};
use superalg::{Characteristic, Element, Exec, Scalar, Superalgebra};

const Q: Characteristic = Characteristic::ZERO;
const SEED: u64 = 20;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn suite_ok(r: &SuiteResult) -> Result<(), String> {
    match r.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{}: {} ({})", r.suite, c.name, c.witness.as_deref().unwrap_or(""))),
    }
}

fn err(e: superalg::Error) -> String {
    e.to_string()
}

fn ts() -> Vec<(i64, i64)> {
    vec![(1, 1), (-1, 1), (2, 1), (1, 2)]
}

fn c1_catalog_sweep() -> Outcome {
    let start = Instant::now();
    let r = catalog_identity_sweep().map_err(err)?;
    let elapsed = start.elapsed();
    suite_ok(&r)?;
    let names: Vec<String> = catalog().map_err(err)?.into_iter().map(|e| e.name).collect();
    let required = [
        "K3",
        "D_t(t=0)",
        "D_t(t=1)",
        "D_t(t=-1)",
        "D_t(t=2)",
        "D_t(t=1/2)",
        "superform(m=3,2k=4)",
        "M(1|1)+",
        "M(2|1)+",
        "M2(sqrt1)+",
        "JP1",
        "Josp(1|2)",
        "Kan(G(1),poisson)",
        "Kan(G(2),poisson)",
        "Kan(G(3),poisson)",
        "Kan(O1,d/dt) p=5",
        "twisted(G(2),poisson)",
    ];
    for want in required {
        if !names.iter().any(|n| n == want) {
            return Err(format!("catalog lacks {want}"));
        }
    }
    for m in 0..=3 {
        for k in 0..=2 {
            let want = format!("superform(m={m},2k={})", 2 * k);
            if !names.contains(&want) {
                return Err(format!("catalog lacks {want}"));
            }
        }
    }
    if elapsed > Duration::from_secs(60) {
        return Err(format!("sweep took {elapsed:?}"));
    }
    Ok(format!("{} algebras, {} cases, {:.2?}", names.len(), r.cases.len(), elapsed))
}

fn c2_d_t() -> Outcome {
    for (n, d) in ts() {
        let t = Scalar::frac(Q, n, d).map_err(err)?;
        let s = is_simple(&d_t(&t)).map_err(err)?;
        let cert = (s.dim, s.centroid_dim, s.graded_mult_algebra_dim);
        if !s.simple || cert != (4, 1, 16) {
            return Err(format!("t={t}: simple={} certificate {cert:?}", s.simple));
        }
    }
    let a = d_t(&Scalar::zero(Q));
    let s = is_simple(&a).map_err(err)?;
    if s.simple {
        return Err("t=0 reported simple".into());
    }
    let by_name: Vec<Element> = ["e1", "x", "y"].iter().map(|n| Element::basis(&a, a.index_of(n).unwrap())).collect();
    let expected = Subspace::spanned(&a, &by_name).map_err(err)?;
    match &s.witness_ideal {
        Some(w) if *w == expected => Ok("t in {1,-1,2,1/2} simple (4,1,16); t=0 ideal span{e1,x,y}".into()),
        other => Err(format!("t=0 witness {:?}", other.as_ref().map(|w| w.dim()))),
    }
}

fn c3_k3() -> Outcome {
    let a = k3(Q);
    let s = is_simple(&a).map_err(err)?;
    let cert = (s.dim, s.centroid_dim, s.graded_mult_algebra_dim);
    if !s.simple || cert != (3, 1, 9) {
        return Err(format!("simple={} certificate {cert:?}", s.simple));
    }
    if a.identity_element().is_some() {
        return Err("found a unit".into());
    }
    let c = centroid(&a).map_err(err)?.len();
    if c != 1 {
        return Err(format!("centroid dimension {c}"));
    }
    Ok("simple (3,1,9), no unit, centroid dimension 1".into())
}

/// `v_i Y v_i = (-1)^(|Y| + [i in Y]) Y` for a monomial `Y`, and the class with
/// character `α` holds `α` itself when `|α|` is even, else its complement.
fn clifford_oracle(n: usize) -> Result<(), String> {
    let k = 2 * n;
    let a = clifford(&Matrix::identity(Q, k)).map_err(err)?;
    let masks = subset_basis(k);
    let mut seen = vec![false; 1 << k];
    for (idx, &y) in masks.iter().enumerate() {
        let b = Element::basis(&a, idx);
        let mut alpha = 0u32;
        for i in 0..k {
            let v = Element::basis(&a, 1 + i);
            let conj = v.mul(&b).and_then(|w| w.mul(&v)).map_err(err)?;
            let bit = (y.count_ones() + (y >> i & 1)) % 2;
            let expect = if bit == 0 { b.clone() } else { b.scale(&-Scalar::one(Q)) };
            if conj != expect {
                return Err(format!("2n={k}: v{i} conjugation on {}", a.name(idx)));
            }
            alpha |= bit << i;
        }
        let rule = if alpha.count_ones().is_multiple_of(2) { alpha } else { !alpha & ((1 << k) - 1) };
        if rule != y || seen[alpha as usize] {
            return Err(format!("2n={k}: class {alpha:b} does not match monomial {}", a.name(idx)));
        }
        seen[alpha as usize] = true;
    }
    Ok(())
}

fn c4_clifford() -> Outcome {
    let mut classes = 0;
    for n in 1..=3 {
        let r = lemma2_1_check(n).map_err(err)?;
        suite_ok(&r)?;
        clifford_oracle(n)?;
        classes += r.cases.len() - 1;
    }
    Ok(format!("{classes} classes over 2n in {{2,4,6}}, one monomial each"))
}

fn c5_envelope() -> Outcome {
    let cases: [(&str, Superalgebra, bool); 3] =
        [("K3", k3(Q), true), ("D_1", d_t(&Scalar::one(Q)), true), ("control", non_jordan_control(Q), false)];
    let mut summary = Vec::new();
    for (label, a, jordan) in cases {
        if check_jordan_super(&a).passed() != jordan {
            return Err(format!("{label}: super check gave the wrong answer"));
        }
        for m in [2, 4] {
            suite_ok(&envelope_agreement_check(&a, m).map_err(err)?).map_err(|e| format!("{label}, m={m}: {e}"))?;
            let env = superalg::construct::grassmann_envelope(&a, m).map_err(err)?;
            if check_jordan_ordinary(&env, Exec::Sequential).passed() != jordan {
                return Err(format!("{label}, m={m}: envelope check gave the wrong answer"));
            }
        }
        summary.push(format!("{label} {}", if jordan { "+" } else { "-" }));
    }
    Ok(format!("agree at m in {{2,4}}: {}", summary.join(", ")))
}

fn c6_peirce() -> Outcome {
    let mut algebras: Vec<(String, Superalgebra)> = Vec::new();
    for (n, d) in [(0, 1)].into_iter().chain(ts()) {
        let t = Scalar::frac(Q, n, d).map_err(err)?;
        algebras.push((format!("D_{t}"), d_t(&t)));
    }
    algebras.push(("M(1|1)+".into(), plus_algebra(&matrix_super(Q, 1, 1).map_err(err)?).map_err(err)?));
    algebras.push(("Josp(1|2)".into(), fixed_points(&osp_superinvolution(Q, 1, 1).map_err(err)?).map_err(err)?));
    let mut checked = 0;
    for (label, a) in &algebras {
        let r = peirce_inclusion_check(a);
        suite_ok(&r).map_err(|e| format!("{label}: {e}"))?;
        if r.cases.iter().any(|c| c.name.starts_with("skipped")) {
            return Err(format!("{label}: no orthogonal idempotent pair"));
        }
        checked += r.cases.len();
    }
    Ok(format!("{} algebras, {checked} cases", algebras.len()))
}

fn c7_bracket() -> Outcome {
    let a = k3(Q);
    suite_ok(&lemma3_2_check(&a, &Element::basis(&a, 0)).map_err(err)?)?;
    let r = lemma3_2_sweep().map_err(err)?;
    suite_ok(&r)?;
    Ok(format!("K3 exhaustive; {} sweep cases", r.cases.len()))
}

fn c8_amitsur_levitzki() -> Outcome {
    let run = || -> Result<(SuiteResult, SuiteResult), String> {
        Ok((amitsur_levitzki_check(2, 100, SEED).map_err(err)?, amitsur_levitzki_check(3, 50, SEED).map_err(err)?))
    };
    let (two, three) = run()?;
    suite_ok(&two)?;
    suite_ok(&three)?;
    if !two.cases.iter().any(|c| c.name.contains("S_2 is nonzero") && c.passed) {
        return Err("no S_2 witness".into());
    }
    let (two_again, three_again) = run()?;
    let bytes = |r: &SuiteResult| render(&suite_value(r));
    if bytes(&two) != bytes(&two_again) || bytes(&three) != bytes(&three_again) {
        return Err("reruns differ".into());
    }
    Ok(format!("S_4 on 100 and S_6 on 50 tuples vanish, S_2 witness found, seed {SEED} reruns identical"))
}

fn c9_u_grading() -> Outcome {
    let r = u_grading_sweep().map_err(err)?;
    suite_ok(&r)?;
    Ok(format!("{} cases", r.cases.len()))
}

fn c10_negative_controls() -> Outcome {
    let controls = negative_controls(SEED).map_err(err)?;
    for s in SUITES.iter().filter(|&&s| s != "negative_controls") {
        match controls.iter().find(|r| r.suite == *s) {
            None => return Err(format!("no control for {s}")),
            Some(r) if r.passed => return Err(format!("{s} passed on corrupted input")),
            Some(_) => {}
        }
    }
    Ok(format!("{} suites reject their corrupted inputs", controls.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("catalog identity sweep", c1_catalog_sweep),
        ("D_t dichotomy", c2_d_t),
        ("K3 simple, non-unital", c3_k3),
        ("Clifford eigenclass monomials", c4_clifford),
        ("envelope agreement", c5_envelope),
        ("Peirce inclusion", c6_peirce),
        ("bracket identity and dichotomy", c7_bracket),
        ("standard polynomials", c8_amitsur_levitzki),
        ("U-grading", c9_u_grading),
        ("negative controls", c10_negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
