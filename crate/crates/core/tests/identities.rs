use superalg::construct::{catalog, d_t, grassmann, k3, matrix_super};
use superalg::extend::plus_algebra;
use superalg::identities::{check_jordan_super, check_operator_identity, check_supercommutative, Identity};
use superalg::{Characteristic, Element, Exec, Scalar, Superalgebra};

const Q: Characteristic = Characteristic::ZERO;

#[test]
fn catalog_passes_every_jordan_identity() {
    for entry in catalog().unwrap() {
        for id in [
            Identity::SuperCommutative,
            Identity::JordanSuper,
            Identity::OperatorIdentity,
            Identity::DSquare,
            Identity::Leibniz,
        ] {
            let r = id.check(&entry.algebra, Exec::default());
            assert!(r.passed(), "{}: {r}", entry.name);
        }
    }
}

#[test]
fn grassmann_is_supercommutative_and_jordan() {
    let g = grassmann(Q, 2).unwrap();
    assert!(check_supercommutative(&g).passed());
    assert!(check_jordan_super(&g).passed());
    let g3 = grassmann(Q, 3).unwrap();
    assert!(Identity::Associative.check(&g3, Exec::Sequential).passed());
    assert!(check_supercommutative(&g3).passed());
}

#[test]
fn matrix_algebra_is_not_supercommutative() {
    let m = matrix_super(Q, 2, 0).unwrap();
    let r = check_supercommutative(&m);
    assert!(!r.passed());
    let w = r.witness().unwrap();
    // Least failing pair in lexicographic order.
    assert_eq!(w.tuple, vec![0, 1]);
    let names: Vec<&str> = w.tuple.iter().map(|&i| m.name(i)).collect();
    assert_eq!(names, ["E11", "E12"]);
    assert_eq!(r.checked(), 2);
}

#[test]
fn e12_e21_commutator_is_a_witness() {
    let m = matrix_super(Q, 2, 0).unwrap();
    let e12 = m.index_of("E12").unwrap();
    let e21 = m.index_of("E21").unwrap();
    assert_ne!(m.product(e12, e21), m.product(e21, e12));
}

#[test]
fn corrupted_k3_fails_operator_identity() {
    let a = k3(Q);
    let bad = a.with_product(0, 1, &[(1, Scalar::one(Q))]).unwrap();
    let r = check_operator_identity(&bad);
    assert!(!r.passed());
    assert!(!r.witness().unwrap().residual.is_zero());
}

#[test]
fn d_t_family_is_jordan() {
    for (n, d) in [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2), (3, 1)] {
        let a = d_t(&Scalar::frac(Q, n, d).unwrap());
        assert!(check_jordan_super(&a).passed());
        assert!(check_operator_identity(&a).passed());
    }
}

#[test]
fn plus_of_associative_algebras_is_jordan() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (3, 0)] {
        let p = plus_algebra(&matrix_super(Q, m, n).unwrap()).unwrap();
        assert!(check_jordan_super(&p).passed());
        assert!(check_operator_identity(&p).passed());
    }
}

#[test]
fn plus_product_of_odd_units() {
    let p = plus_algebra(&matrix_super(Q, 1, 1).unwrap()).unwrap();
    let x = Element::from_named(&p, &[("E12", Scalar::one(Q))]);
    let y = Element::from_named(&p, &[("E21", Scalar::one(Q))]);
    let half = Scalar::half(Q);
    let expected = Element::from_named(&p, &[("E11", half.clone()), ("E22", -half)]);
    assert_eq!(x.mul(&y).unwrap(), expected);
}

#[test]
fn modes_report_identical_witnesses() {
    let bad = k3(Q).with_product(1, 2, &[(0, Scalar::from_int(Q, 2))]).unwrap();
    for id in Identity::ALL {
        let s = id.check(&bad, Exec::Sequential);
        let p = id.check(&bad, Exec::Parallel);
        assert_eq!(s, p, "{id:?}");
    }
}

#[test]
fn zero_dimensional_algebra_passes_vacuously() {
    let z = Superalgebra::trivial(Q);
    for id in Identity::ALL {
        let r = id.check(&z, Exec::default());
        assert!(r.passed());
        assert_eq!(r.checked(), 0);
    }
}
