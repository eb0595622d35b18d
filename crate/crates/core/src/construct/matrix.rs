use crate::algebra::{koszul, Element, Parity, Superalgebra, TableBuilder};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::extend::{plus_algebra, subalgebra};
use crate::identities::Identity;
use crate::linalg::{EchelonBasis, Matrix};
use crate::scalar::{Characteristic, Scalar};

fn unit_name(s: usize, i: usize, j: usize) -> String {
    if s < 10 {
        format!("E{}{}", i + 1, j + 1)
    } else {
        format!("E{},{}", i + 1, j + 1)
    }
}

/// `(m + n) × (m + n)` matrices with `E_ij` at index `i (m + n) + j`, odd
/// exactly when `i` and `j` lie on different sides of the `m | n` split.
pub fn matrix_super(ch: Characteristic, m: usize, n: usize) -> Result<Superalgebra> {
    let s = m + n;
    if s == 0 {
        return Err(Error::Invalid("matrix superalgebra needs m + n ≥ 1".into()));
    }
    if s > 8 {
        return Err(Error::SizeBound(format!("{s} × {s} matrices (at most 8)")));
    }
    let mut t = TableBuilder::new(ch);
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                t.add(i * s + j, j * s + k, i * s + k, Scalar::one(ch));
            }
        }
    }
    let mut parity = Vec::with_capacity(s * s);
    let mut names = Vec::with_capacity(s * s);
    for i in 0..s {
        for j in 0..s {
            parity.push(Parity::from_bit(((i < m) != (j < m)) as u8));
            names.push(unit_name(s, i, j));
        }
    }
    t.build(parity, names)
}

/// A linear map verified to satisfy `(a*)* = a`, to preserve parity and to
/// satisfy `(ab)* = (-1)^{|a||b|} b* a*` on all basis pairs.
#[derive(Clone, Debug)]
pub struct Superinvolution {
    alg: Superalgebra,
    matrix: Matrix,
}

impl Superinvolution {
    /// `matrix` uses the column convention: column `j` is the image of `b_j`.
    pub fn new(alg: &Superalgebra, matrix: Matrix) -> Result<Superinvolution> {
        let n = alg.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: matrix.rows() });
        }
        for j in 0..n {
            for i in 0..n {
                if !matrix.get(i, j).is_zero() && alg.parity(i) != alg.parity(j) {
                    return Err(Error::NotSuperinvolution(format!(
                        "image of {} is not homogeneous of its parity",
                        alg.name(j)
                    )));
                }
            }
        }
        if matrix.mul(&matrix) != Matrix::identity(alg.characteristic(), n) {
            return Err(Error::NotSuperinvolution("the map is not involutive".into()));
        }
        let s = Superinvolution { alg: alg.clone(), matrix };
        for i in 0..n {
            for j in 0..n {
                let ab = Element::from_sparse(alg, alg.product(i, j));
                let lhs = s.apply(&ab)?;
                let bi = s.apply(&Element::basis(alg, i))?;
                let bj = s.apply(&Element::basis(alg, j))?;
                let mut rhs = bj.mul(&bi)?;
                if koszul(alg.parity(i), alg.parity(j)) {
                    rhs = rhs.scale(&-alg.one());
                }
                if lhs != rhs {
                    return Err(Error::NotSuperinvolution(format!(
                        "anti-multiplicativity fails on ({}, {})",
                        alg.name(i),
                        alg.name(j)
                    )));
                }
            }
        }
        Ok(s)
    }

    pub fn algebra(&self) -> &Superalgebra {
        &self.alg
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if x.algebra() != &self.alg {
            return Err(Error::MismatchedParents);
        }
        Element::new(&self.alg, self.matrix.apply(x.coeffs()))
    }
}

/// The sign pair `(σ1, σ2)` used by [`transpose_superinvolution`], in the
/// order the candidates are tried.
const SIGN_CANDIDATES: [(i64, i64); 4] = [(-1, 1), (1, -1), (1, 1), (-1, -1)];

/// `(a b; c d) ↦ (dᵗ, σ1 bᵗ; σ2 cᵗ, aᵗ)` on `matrix_super(n, n)`, with the
/// first sign pair that satisfies the axioms. Returns the signs as well.
pub fn transpose_superinvolution(ch: Characteristic, n: usize) -> Result<(Superinvolution, (i64, i64))> {
    let alg = matrix_super(ch, n, n)?;
    let s = 2 * n;
    for (s1, s2) in SIGN_CANDIDATES {
        let mut m = Matrix::zeros(ch, s * s, s * s);
        for i in 0..s {
            for j in 0..s {
                let (top, left) = (i < n, j < n);
                let (ii, jj) = (i % n, j % n);
                let (r, c, sign) = match (top, left) {
                    (true, true) => (n + jj, n + ii, 1),
                    (false, false) => (jj, ii, 1),
                    (true, false) => (jj, n + ii, s1),
                    (false, true) => (n + jj, ii, s2),
                };
                m.set(r * s + c, i * s + j, Scalar::from_int(ch, sign));
            }
        }
        if let Ok(inv) = Superinvolution::new(&alg, m) {
            return Ok((inv, (s1, s2)));
        }
    }
    Err(Error::NotSuperinvolution("no sign choice makes the transpose map a superinvolution".into()))
}

/// `x ↦ u⁻¹ x^st u` on `matrix_super(m, 2k)`, where `u = diag(I_m, J)`,
/// `J = [[0, I_k], [-I_k, 0]]` and `(a b; c d)^st = (aᵗ, cᵗ; -bᵗ, dᵗ)`.
pub fn osp_superinvolution(ch: Characteristic, m: usize, k: usize) -> Result<Superinvolution> {
    let alg = matrix_super(ch, m, 2 * k)?;
    let s = m + 2 * k;
    let u = Matrix::from_fn(ch, s, s, |i, j| {
        if i < m || j < m {
            return if i == j { Scalar::one(ch) } else { Scalar::zero(ch) };
        }
        let (a, b) = (i - m, j - m);
        if b == a + k {
            Scalar::one(ch)
        } else if a == b + k {
            -Scalar::one(ch)
        } else {
            Scalar::zero(ch)
        }
    });
    let u_inv = u.inverse().expect("u is invertible");
    let mut big = Matrix::zeros(ch, s * s, s * s);
    for i in 0..s {
        for j in 0..s {
            // Supertranspose of E_ij.
            let (r, c, neg) = match (i < m, j < m) {
                (true, false) => (j, i, true),
                _ => (j, i, false),
            };
            let mut st = Matrix::zeros(ch, s, s);
            st.set(r, c, Scalar::one(ch).signed(neg));
            let img = u_inv.mul(&st).mul(&u);
            for p in 0..s {
                for q in 0..s {
                    big.set(p * s + q, i * s + j, img.get(p, q).clone());
                }
            }
        }
    }
    Superinvolution::new(&alg, big)
}

/// Symmetric elements `H(A, *)` as a subalgebra of `A⁺`. `A` must be
/// associative.
pub fn fixed_points(s: &Superinvolution) -> Result<Superalgebra> {
    let a = s.algebra();
    if !Identity::Associative.check(a, Exec::default()).passed() {
        return Err(Error::Precondition("symmetric elements are taken in an associative algebra".into()));
    }
    let n = a.dim();
    let ch = a.characteristic();
    let shifted = s.matrix().sub(&Matrix::identity(ch, n));
    let plus = plus_algebra(a)?;
    let fixed = EchelonBasis::from_vectors(ch, n, shifted.nullspace());
    let span = fixed.rows().iter().map(|v| Element::new(&plus, v.clone())).collect::<Result<Vec<_>>>()?;
    Ok(subalgebra(&plus, &span)?.sub)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_grading() {
        let m = matrix_super(Characteristic::ZERO, 1, 1).unwrap();
        let odd: Vec<&str> = m.odd_indices().iter().map(|&i| m.name(i)).collect();
        assert_eq!(odd, ["E12", "E21"]);
    }

    #[test]
    fn transpose_signs_and_corners() {
        let ch = Characteristic::ZERO;
        let (inv, signs) = transpose_superinvolution(ch, 1).unwrap();
        assert_eq!(signs, (-1, 1));
        let a = inv.algebra().clone();
        let e11 = Element::basis(&a, 0);
        assert_eq!(inv.apply(&e11).unwrap(), Element::basis(&a, 3));
        assert!(transpose_superinvolution(ch, 2).is_ok());
    }

    #[test]
    fn jp1_is_two_dimensional() {
        let (inv, _) = transpose_superinvolution(Characteristic::ZERO, 1).unwrap();
        let jp = fixed_points(&inv).unwrap();
        assert_eq!(jp.dim(), 2);
        assert_eq!(jp.names(), ["E11 + E22", "E21"]);
    }

    #[test]
    fn osp_verifies() {
        let inv = osp_superinvolution(Characteristic::ZERO, 1, 1).unwrap();
        let h = fixed_points(&inv).unwrap();
        assert_eq!((h.even_indices().len(), h.odd_indices().len()), (2, 2));
    }
}
