use crate::algebra::{Element, Parity, Superalgebra};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix};
use crate::operator::right_mult;
use crate::scalar::Scalar;

use super::subspace::Subspace;

/// Eigenspaces of `R(e)` for the eigenvalues `0`, `½` and `1`.
#[derive(Clone, Debug)]
pub struct Peirce {
    pub zero: Subspace,
    pub half: Subspace,
    pub one: Subspace,
}

fn eigenspace(a: &Superalgebra, m: &Matrix, lambda: &Scalar) -> Subspace {
    let n = a.dim();
    let shifted = m.sub(&Matrix::identity(a.characteristic(), n).scale(lambda));
    Subspace::from_echelon(a, EchelonBasis::from_vectors(a.characteristic(), n, shifted.nullspace()))
}

fn require_even_idempotent(e: &Element) -> Result<()> {
    if e.parity() != Some(Parity::Even) {
        return Err(Error::NotEven);
    }
    if &e.mul(e)? != e {
        return Err(Error::NotIdempotent);
    }
    Ok(())
}

pub fn peirce(a: &Superalgebra, e: &Element) -> Result<Peirce> {
    if e.algebra() != a {
        return Err(Error::MismatchedParents);
    }
    require_even_idempotent(e)?;
    let r = right_mult(e)?;
    let ch = a.characteristic();
    let out = Peirce {
        zero: eigenspace(a, r.matrix(), &Scalar::zero(ch)),
        half: eigenspace(a, r.matrix(), &Scalar::half(ch)),
        one: eigenspace(a, r.matrix(), &Scalar::one(ch)),
    };
    let found = out.zero.dim() + out.half.dim() + out.one.dim();
    if found != a.dim() {
        return Err(Error::EigenspacesIncomplete { found, dim: a.dim() });
    }
    Ok(out)
}

/// Even and odd parts of one joint component.
#[derive(Clone, Debug)]
pub struct PeirceComponent {
    pub even: Subspace,
    pub odd: Subspace,
}

impl PeirceComponent {
    pub fn total(&self) -> Subspace {
        self.even.sum(&self.odd)
    }

    /// Homogeneous basis: even vectors first.
    pub fn basis(&self) -> Vec<Element> {
        let mut b = self.even.basis();
        b.extend(self.odd.basis());
        b
    }
}

/// Joint components for an orthogonal pair: `ee` where `R(e) = 1, R(f) = 0`,
/// `ef` where both act as `½`, `ff` where `R(e) = 0, R(f) = 1`.
#[derive(Clone, Debug)]
pub struct PeircePair {
    pub ee: PeirceComponent,
    pub ef: PeirceComponent,
    pub ff: PeirceComponent,
}

pub fn peirce_pair(a: &Superalgebra, e: &Element, f: &Element) -> Result<PeircePair> {
    if e.algebra() != a || f.algebra() != a {
        return Err(Error::MismatchedParents);
    }
    require_even_idempotent(e)?;
    require_even_idempotent(f)?;
    if !e.mul(f)?.is_zero() || !f.mul(e)?.is_zero() {
        return Err(Error::Precondition("idempotents are not orthogonal".into()));
    }
    let ch = a.characteristic();
    let (re, rf) = (right_mult(e)?, right_mult(f)?);
    let (zero, half, one) = (Scalar::zero(ch), Scalar::half(ch), Scalar::one(ch));
    let even = Subspace::parity_part(a, Parity::Even);
    let odd = Subspace::parity_part(a, Parity::Odd);
    let joint = |le: &Scalar, lf: &Scalar| {
        let s = eigenspace(a, re.matrix(), le).intersection(&eigenspace(a, rf.matrix(), lf));
        PeirceComponent { even: s.intersection(&even), odd: s.intersection(&odd) }
    };
    Ok(PeircePair { ee: joint(&one, &zero), ef: joint(&half, &half), ff: joint(&zero, &one) })
}

/// Ordered pairs `(e, u - e)` of nonzero orthogonal idempotents summing to
/// the unit `u`, with `e` ranging over 0/1 combinations of the even basis.
/// Empty for non-unital algebras or more than 12 even basis vectors.
pub fn idempotent_pairs(a: &Superalgebra) -> Vec<(Element, Element)> {
    let Some(unit) = a.identity_element() else {
        return vec![];
    };
    let even = a.even_indices();
    if even.len() > 12 {
        return vec![];
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << even.len()) {
        let mut e = Element::zero(a);
        for (bit, &i) in even.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                e = e.add(&Element::basis(a, i)).expect("same parent");
            }
        }
        let f = unit.sub(&e).expect("same parent");
        let prod = |x: &Element, y: &Element| x.mul(y).expect("same parent");
        if f.is_zero() || prod(&e, &e) != e || prod(&f, &f) != f {
            continue;
        }
        if prod(&e, &f).is_zero() && prod(&f, &e).is_zero() {
            out.push((e, f));
        }
    }
    out
}
