use proptest::prelude::*;

use superalg::analysis::{is_simple, peirce, Subspace};
use superalg::construct::{catalog, d_t, superform, symplectic, CatalogEntry};
use superalg::identities::{operator_identity_residual, sj2_residual, Identity};
use superalg::json::{algebra_from_json, algebra_to_json};
use superalg::linalg::Matrix;
use superalg::operator::{derivation, u_operator};
use superalg::{Characteristic, Element, Exec, Parity, Scalar, Superalgebra, TableBuilder};

const Q: Characteristic = Characteristic::ZERO;

fn small_catalog() -> Vec<CatalogEntry> {
    catalog().unwrap().into_iter().filter(|e| e.algebra.dim() <= 9 && e.algebra.characteristic().is_zero()).collect()
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Scalar::frac(Q, n, d).unwrap())
}

fn homogeneous(a: &Superalgebra, p: Parity, coeffs: &[Scalar]) -> Element {
    let v = (0..a.dim())
        .map(|i| if a.parity(i) == p { coeffs[i % coeffs.len()].clone() } else { Scalar::zero(Q) })
        .collect();
    Element::new(a, v).unwrap()
}

fn parity() -> impl Strategy<Value = Parity> {
    any::<bool>().prop_map(|b| Parity::from_bit(b as u8))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn jordan_identity_on_random_elements(
        which in 0usize..64,
        ps in proptest::array::uniform4(parity()),
        cs in proptest::collection::vec(scalar(), 4 * 9),
    ) {
        let entries = small_catalog();
        let a = &entries[which % entries.len()].algebra;
        let el = |k: usize| homogeneous(a, ps[k], &cs[9 * k..9 * k + 9]);
        let r = sj2_residual(&el(0), &el(1), &el(2), &el(3)).unwrap();
        prop_assert!(r.is_zero(), "{}", entries[which % entries.len()].name);
        let op = operator_identity_residual(&el(0), &el(1), &el(2)).unwrap();
        prop_assert!(op.is_zero());
    }

    #[test]
    fn d_square_on_random_elements(
        which in 0usize..64,
        p in parity(),
        cs in proptest::collection::vec(scalar(), 18),
    ) {
        let entries = small_catalog();
        let alg = &entries[which % entries.len()].algebra;
        let a = homogeneous(alg, Parity::Even, &cs[..9]);
        let x = homogeneous(alg, p, &cs[9..]);
        let lhs = derivation(&a.mul(&a).unwrap(), &x).unwrap();
        let rhs = derivation(&a, &a.mul(&x).unwrap()).unwrap().scale(&Scalar::from_int(Q, 2));
        prop_assert_eq!(lhs.matrix(), rhs.matrix());
    }

    #[test]
    fn u_operators_are_involutive_automorphisms(
        m in 2usize..=4,
        k in 0usize..=1,
        i in 0usize..4,
        cs in proptest::collection::vec(scalar(), 16),
    ) {
        let a = superform(&Matrix::identity(Q, m), &symplectic(Q, k)).unwrap().algebra;
        let v = Element::basis(&a, 1 + i % m);
        let u = u_operator(&v).unwrap();
        let square = &u * &u;
        prop_assert_eq!(square.matrix(), &Matrix::identity(Q, a.dim()));
        let n = a.dim();
        let x = Element::new(&a, cs[..n].to_vec()).unwrap();
        let y = Element::new(&a, cs[8..8 + n].to_vec()).unwrap();
        let image_of_product = u.apply(&x.mul(&y).unwrap()).unwrap();
        let product_of_images = u.apply(&x).unwrap().mul(&u.apply(&y).unwrap()).unwrap();
        prop_assert_eq!(image_of_product, product_of_images);
    }

    #[test]
    fn d_t_is_simple_off_zero(n in -9i64..=9, d in 1i64..=9) {
        prop_assume!(n != 0);
        let a = d_t(&Scalar::frac(Q, n, d).unwrap());
        let s = is_simple(&a).unwrap();
        prop_assert!(s.simple);
        prop_assert_eq!((s.dim, s.centroid_dim, s.graded_mult_algebra_dim), (4, 1, 16));
        let p = peirce(&a, &Element::basis(&a, 0)).unwrap();
        prop_assert_eq!((p.zero.dim(), p.half.dim(), p.one.dim()), (1, 2, 1));
    }

    #[test]
    fn subspace_dimension_formula(
        us in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 6), 0..5),
        ws in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 6), 0..5),
    ) {
        let a = TableBuilder::new(Q).build(vec![Parity::Even; 6], (0..6).map(|i| format!("b{i}")).collect()).unwrap();
        let span = |vs: &[Vec<i64>]| {
            let els: Vec<Element> = vs.iter().map(|v| Element::new(&a, v.iter().map(|&c| Scalar::from_int(Q, c)).collect()).unwrap()).collect();
            Subspace::spanned(&a, &els).unwrap()
        };
        let (u, w) = (span(&us), span(&ws));
        prop_assert_eq!(u.sum(&w).dim() + u.intersection(&w).dim(), u.dim() + w.dim());
        prop_assert!(u.sum(&w).contains_subspace(&u));
        prop_assert!(u.contains_subspace(&u.intersection(&w)));
    }

    #[test]
    fn random_tables_round_trip_and_modes_agree(
        entries in proptest::collection::vec((0usize..4, 0usize..4, 0usize..4, -3i64..=3, 1i64..=3), 0..20),
    ) {
        let parity = vec![Parity::Even, Parity::Even, Parity::Odd, Parity::Odd];
        let mut b = TableBuilder::new(Q);
        for (i, j, k, n, d) in entries {
            if parity[k] == parity[i] + parity[j] {
                b.add(i, j, k, Scalar::frac(Q, n, d).unwrap());
            }
        }
        let a = b.build(parity, ["a", "b", "x", "y"].map(String::from).to_vec()).unwrap();
        let text = algebra_to_json(&a);
        prop_assert_eq!(algebra_from_json(&text).unwrap(), a.clone());
        for id in Identity::ALL {
            prop_assert_eq!(id.check(&a, Exec::Sequential), id.check(&a, Exec::Parallel));
        }
    }
}
