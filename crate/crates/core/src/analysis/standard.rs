use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::operator::Operator;
use crate::scalar::Characteristic;

pub const MAX_DEGREE: usize = 6;

/// `S_d(x_1..x_d) = Σ_σ sgn(σ) x_σ(1) ⋯ x_σ(d)` for square matrices with the
/// ordinary matrix product. `S_0` is the identity of size `size`.
pub fn standard_polynomial_matrices(ch: Characteristic, size: usize, xs: &[Matrix]) -> Result<Matrix> {
    let d = xs.len();
    if d > MAX_DEGREE {
        return Err(Error::SizeBound(format!("degree {d} (at most {MAX_DEGREE})")));
    }
    if let Some(bad) = xs.iter().find(|x| x.rows() != size || x.cols() != size) {
        return Err(Error::DimensionMismatch { expected: size, got: bad.rows() });
    }
    if let Some(bad) = xs.iter().find(|x| x.characteristic() != ch) {
        return Err(Error::CharacteristicMismatch(ch, bad.characteristic()));
    }
    // f[T] = alternating sum over orderings of the subset T; choosing the
    // first factor i costs the number of elements of T below i.
    let mut f: Vec<Option<Matrix>> = vec![None; 1 << d];
    f[0] = Some(Matrix::identity(ch, size));
    for t in 1usize..(1 << d) {
        let mut acc = Matrix::zeros(ch, size, size);
        for i in 0..d {
            if t >> i & 1 == 0 {
                continue;
            }
            let rest = f[t & !(1 << i)].as_ref().expect("smaller subsets come first");
            let term = xs[i].mul(rest);
            let below = (t & ((1 << i) - 1)).count_ones();
            acc = if below % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        f[t] = Some(acc);
    }
    Ok(f[(1 << d) - 1].take().expect("computed"))
}

/// The standard polynomial on operators, with products read as operator
/// composition (`x y` applies `x` first).
pub fn standard_polynomial(ops: &[Operator]) -> Result<Operator> {
    let Some(first) = ops.first() else {
        return Err(Error::Precondition("no operands: the algebra of the result is unknown".into()));
    };
    if ops.iter().any(|o| o.algebra() != first.algebra()) {
        return Err(Error::MismatchedParents);
    }
    // Composition in this order has matrix mat(x_d) ⋯ mat(x_1), i.e. the
    // matrix polynomial on the reversed list.
    let rev: Vec<Matrix> = ops.iter().rev().map(|o| o.matrix().clone()).collect();
    let m = standard_polynomial_matrices(first.algebra().characteristic(), first.algebra().dim(), &rev)?;
    let parity = ops.iter().fold(crate::algebra::Parity::Even, |p, o| p + o.parity());
    Operator::new(first.algebra(), m, parity)
}
