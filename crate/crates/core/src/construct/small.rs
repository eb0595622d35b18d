use crate::algebra::{Parity, Superalgebra, TableBuilder};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Characteristic, Scalar};

/// A superform algebra together with whether its form is degenerate.
#[derive(Clone, Debug)]
pub struct Superform {
    pub algebra: Superalgebra,
    pub degenerate: bool,
}

/// `F1 + V0 + V1` with unit `1` and `v w = (v|w) 1`; `gram0` is the
/// symmetric form on `V0` (basis `v1..vm`), `skew1` the skew form on `V1`
/// (basis `w1..w2k`).
pub fn superform(gram0: &Matrix, skew1: &Matrix) -> Result<Superform> {
    let ch = gram0.characteristic();
    ch.ensure_same(skew1.characteristic())?;
    let (m, k2) = (gram0.rows(), skew1.rows());
    if gram0.cols() != m || skew1.cols() != k2 {
        return Err(Error::Invalid("form matrices must be square".into()));
    }
    if k2 % 2 != 0 {
        return Err(Error::Invalid(format!("odd part has dimension {k2}, expected an even number")));
    }
    if gram0.transpose() != *gram0 {
        return Err(Error::Invalid("even form is not symmetric".into()));
    }
    if skew1.transpose() != skew1.scale(&-Scalar::one(ch)) {
        return Err(Error::Invalid("odd form is not skew-symmetric".into()));
    }
    let one = Scalar::one(ch);
    let mut t = TableBuilder::new(ch);
    let n = 1 + m + k2;
    for i in 0..n {
        t.add(0, i, i, one.clone());
        if i > 0 {
            t.add(i, 0, i, one.clone());
        }
    }
    for i in 0..m {
        for j in 0..m {
            t.add(1 + i, 1 + j, 0, gram0.get(i, j).clone());
        }
    }
    for a in 0..k2 {
        for b in 0..k2 {
            t.add(1 + m + a, 1 + m + b, 0, skew1.get(a, b).clone());
        }
    }
    let mut parity = vec![Parity::Even; 1 + m];
    parity.extend(std::iter::repeat_n(Parity::Odd, k2));
    let mut names = vec!["1".to_string()];
    names.extend((1..=m).map(|i| format!("v{i}")));
    names.extend((1..=k2).map(|i| format!("w{i}")));
    let degenerate = gram0.rank() < m || skew1.rank() < k2;
    Ok(Superform { algebra: t.build(parity, names)?, degenerate })
}

/// Three-dimensional Kaplansky superalgebra on `e` (even), `x`, `y` (odd).
pub fn k3(ch: Characteristic) -> Superalgebra {
    let one = Scalar::one(ch);
    let half = Scalar::half(ch);
    let entries = vec![
        (0, 0, 0, one.clone()),
        (0, 1, 1, half.clone()),
        (0, 2, 2, half.clone()),
        (1, 0, 1, half.clone()),
        (1, 2, 0, one.clone()),
        (2, 0, 2, half),
        (2, 1, 0, -one),
    ];
    let names = ["e", "x", "y"].map(String::from).to_vec();
    Superalgebra::new(ch, vec![Parity::Even, Parity::Odd, Parity::Odd], names, entries).expect("valid table")
}

/// The four-dimensional family on `e1, e2` (even) and `x, y` (odd) with
/// `xy = -yx = e1 + t e2`.
pub fn d_t(t: &Scalar) -> Superalgebra {
    let ch = t.characteristic();
    let one = Scalar::one(ch);
    let half = Scalar::half(ch);
    let mut b = TableBuilder::new(ch);
    for e in 0..2 {
        b.add(e, e, e, one.clone());
        for odd in 2..4 {
            b.add(e, odd, odd, half.clone());
            b.add(odd, e, odd, half.clone());
        }
    }
    b.add(2, 3, 0, one.clone());
    b.add(2, 3, 1, t.clone());
    b.add(3, 2, 0, -&one);
    b.add(3, 2, 1, -t);
    let names = ["e1", "e2", "x", "y"].map(String::from).to_vec();
    b.build(vec![Parity::Even, Parity::Even, Parity::Odd, Parity::Odd], names).expect("valid table")
}

/// A two-dimensional supercommutative superalgebra that is not Jordan:
/// `e² = e`, `ex = xe = x/3`, `x² = 0`.
pub fn non_jordan_control(ch: Characteristic) -> Superalgebra {
    let third = Scalar::frac(ch, 1, 3).expect("characteristic is not 3");
    let entries = vec![(0, 0, 0, Scalar::one(ch)), (0, 1, 1, third.clone()), (1, 0, 1, third)];
    Superalgebra::new(ch, vec![Parity::Even, Parity::Odd], vec!["e".into(), "x".into()], entries).expect("valid table")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_has_no_unit() {
        assert!(k3(Characteristic::ZERO).identity_element().is_none());
    }

    #[test]
    fn d_t_unit() {
        let ch = Characteristic::ZERO;
        let d = d_t(&Scalar::from_int(ch, 3));
        let u = d.identity_element().unwrap();
        assert_eq!(u.coeffs()[..2], [Scalar::one(ch), Scalar::one(ch)]);
    }

    #[test]
    fn superform_shape() {
        let ch = Characteristic::ZERO;
        let skew = Matrix::from_rows(
            ch,
            vec![vec![Scalar::zero(ch), Scalar::one(ch)], vec![-Scalar::one(ch), Scalar::zero(ch)]],
        );
        let s = superform(&Matrix::identity(ch, 1), &skew).unwrap();
        assert!(!s.degenerate);
        assert_eq!(s.algebra.names(), ["1", "v1", "w1", "w2"]);
        assert_eq!(s.algebra.product(2, 3), [(0, Scalar::one(ch))]);
        assert!(s.algebra.product(2, 1).is_empty());
        let empty = superform(&Matrix::zeros(ch, 0, 0), &Matrix::zeros(ch, 0, 0)).unwrap();
        assert_eq!(empty.algebra.dim(), 1);
        let odd = superform(&Matrix::zeros(ch, 0, 0), &Matrix::zeros(ch, 1, 1));
        assert!(odd.is_err());
    }
}
