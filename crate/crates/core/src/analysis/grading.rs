use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Element, Parity, Superalgebra};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix};
use crate::operator::{u_operator, Operator};

use super::subspace::Subspace;

/// An element of `(Z/2)^k`: bit `i` set means eigenvalue `-1` for the `i`-th
/// operator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradingTag(pub Vec<u8>);

impl GradingTag {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &GradingTag) -> GradingTag {
        GradingTag(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect())
    }

    /// All tags of length `k` in lexicographic order.
    pub fn all(k: usize) -> Vec<GradingTag> {
        (0..1u32 << k).map(|m| GradingTag((0..k).map(|i| (m >> (k - 1 - i) & 1) as u8).collect())).collect()
    }

    /// The basis monomial assigned to this tag: the set of positions with a
    /// set bit when that set has even size, otherwise its complement.
    pub fn monomial(&self) -> Vec<usize> {
        let ones: Vec<usize> = (0..self.len()).filter(|&i| self.0[i] == 1).collect();
        if ones.len().is_multiple_of(2) {
            ones
        } else {
            (0..self.len()).filter(|&i| self.0[i] == 0).collect()
        }
    }
}

impl fmt::Display for GradingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", bits.join(","))
    }
}

/// Simultaneous `±1` eigenspaces of commuting involutive operators, one
/// entry per tag (zero subspaces included). Errors if they do not exhaust
/// the algebra.
pub fn joint_eigenspaces(a: &Superalgebra, ops: &[Matrix]) -> Result<BTreeMap<GradingTag, Subspace>> {
    if ops.len() > 12 {
        return Err(Error::SizeBound(format!("{} operators (at most 12)", ops.len())));
    }
    let ch = a.characteristic();
    let n = a.dim();
    let id = Matrix::identity(ch, n);
    let mut parts: Vec<(Vec<u8>, Subspace)> = vec![(vec![], Subspace::full(a))];
    for m in ops {
        let plus = Subspace::from_echelon(a, EchelonBasis::from_vectors(ch, n, m.sub(&id).nullspace()));
        let minus = Subspace::from_echelon(a, EchelonBasis::from_vectors(ch, n, m.add(&id).nullspace()));
        parts = parts
            .into_iter()
            .flat_map(|(tag, s)| {
                let mut t0 = tag.clone();
                t0.push(0);
                let mut t1 = tag;
                t1.push(1);
                [(t0, s.intersection(&plus)), (t1, s.intersection(&minus))]
            })
            .collect();
    }
    let found: usize = parts.iter().map(|(_, s)| s.dim()).sum();
    if found != n {
        return Err(Error::EigenspacesIncomplete { found, dim: n });
    }
    Ok(parts.into_iter().map(|(t, s)| (GradingTag(t), s)).collect())
}

/// Decomposition by the `U(v_i)`.
#[derive(Clone, Debug)]
pub struct UGrading {
    pub operators: Vec<Operator>,
    pub parts: BTreeMap<GradingTag, Subspace>,
}

impl UGrading {
    /// The tag of a nonzero element lying in a single component.
    pub fn tag_of(&self, x: &Element) -> Option<&GradingTag> {
        self.parts.iter().find(|(_, s)| !x.is_zero() && s.contains(x)).map(|(t, _)| t)
    }
}

/// Verifies `U(v)² = id` for each `v` and pairwise commutation, then
/// decomposes into joint eigenspaces.
pub fn u_grading(a: &Superalgebra, vs: &[Element]) -> Result<UGrading> {
    let ch = a.characteristic();
    let id = Matrix::identity(ch, a.dim());
    let ops: Vec<Operator> = vs.iter().map(u_operator).collect::<Result<_>>()?;
    for (i, u) in ops.iter().enumerate() {
        if (u * u).matrix() != &id {
            return Err(Error::Precondition(format!("U(v{}) is not an involution", i + 1)));
        }
        for (j, w) in ops.iter().enumerate().skip(i + 1) {
            if (u * w).matrix() != (w * u).matrix() {
                return Err(Error::Precondition(format!("U(v{}) and U(v{}) do not commute", i + 1, j + 1)));
            }
        }
    }
    let mats: Vec<Matrix> = ops.iter().map(|o| o.matrix().clone()).collect();
    let parts = joint_eigenspaces(a, &mats)?;
    Ok(UGrading { operators: ops, parts })
}

/// Odd part of the components whose assigned monomial has length `2r` or
/// `2r + 1`, for `2n` vectors and `1 ≤ r < n`.
pub fn m_vr_span(a: &Superalgebra, vs: &[Element], r: usize) -> Result<Subspace> {
    if !vs.len().is_multiple_of(2) {
        return Err(Error::Precondition(format!("expected an even number of vectors, got {}", vs.len())));
    }
    let n = vs.len() / 2;
    if r < 1 || r >= n {
        return Err(Error::Precondition(format!("r = {r} outside 1 ≤ r < {n}")));
    }
    let g = u_grading(a, vs)?;
    let odd = Subspace::parity_part(a, Parity::Odd);
    let mut out = Subspace::zero(a);
    for (tag, s) in &g.parts {
        let len = tag.monomial().len();
        if len == 2 * r || len == 2 * r + 1 {
            out = out.sum(&s.intersection(&odd));
        }
    }
    Ok(out)
}

/// `x ↦ v x v` as a matrix (column convention).
pub fn conjugation_matrix(v: &Element) -> Result<Matrix> {
    let a = v.algebra();
    let n = a.dim();
    let mut m = Matrix::zeros(a.characteristic(), n, n);
    for j in 0..n {
        let img = v.mul(&Element::basis(a, j))?.mul(v)?;
        for (i, c) in img.coeffs().iter().enumerate() {
            m.set(i, j, c.clone());
        }
    }
    Ok(m)
}
