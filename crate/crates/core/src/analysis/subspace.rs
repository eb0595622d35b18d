use std::fmt;

use crate::algebra::{Element, Parity, Superalgebra};
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;

/// A linear subspace of an algebra, stored in reduced row-echelon form so
/// that equality is exact subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    alg: Superalgebra,
    basis: EchelonBasis,
}

impl Subspace {
    pub fn zero(alg: &Superalgebra) -> Subspace {
        Subspace { alg: alg.clone(), basis: EchelonBasis::new(alg.characteristic(), alg.dim()) }
    }

    pub fn full(alg: &Superalgebra) -> Subspace {
        Subspace::spanned(alg, &(0..alg.dim()).map(|i| Element::basis(alg, i)).collect::<Vec<_>>())
            .expect("same parent")
    }

    pub fn spanned(alg: &Superalgebra, vs: &[Element]) -> Result<Subspace> {
        let mut s = Subspace::zero(alg);
        for v in vs {
            s.insert(v)?;
        }
        Ok(s)
    }

    /// The span of the basis vectors of one parity.
    pub fn parity_part(alg: &Superalgebra, p: Parity) -> Subspace {
        let vs: Vec<Element> = (0..alg.dim()).filter(|&i| alg.parity(i) == p).map(|i| Element::basis(alg, i)).collect();
        Subspace::spanned(alg, &vs).expect("same parent")
    }

    pub(crate) fn from_echelon(alg: &Superalgebra, basis: EchelonBasis) -> Subspace {
        debug_assert_eq!(basis.ambient_dim(), alg.dim());
        Subspace { alg: alg.clone(), basis }
    }

    pub fn algebra(&self) -> &Superalgebra {
        &self.alg
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.basis.is_full()
    }

    /// Inserts `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &Element) -> Result<bool> {
        if v.algebra() != &self.alg {
            return Err(Error::MismatchedParents);
        }
        Ok(self.basis.insert(v.coeffs().to_vec()))
    }

    pub fn basis(&self) -> Vec<Element> {
        self.basis.rows().iter().map(|r| Element::new(&self.alg, r.clone()).expect("row length matches")).collect()
    }

    pub fn contains(&self, v: &Element) -> bool {
        v.algebra() == &self.alg && self.basis.contains(v.coeffs())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.basis.contains_all(&other.basis)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        Subspace::from_echelon(&self.alg, self.basis.intersection(&other.basis))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_echelon(&self.alg, self.basis.sum(&other.basis))
    }

    /// Whether the span is spanned by homogeneous elements.
    pub fn is_graded(&self) -> bool {
        self.basis().iter().all(|b| {
            let (e, o) = (b.part(Parity::Even), b.part(Parity::Odd));
            self.contains(&e) && self.contains(&o)
        })
    }

    /// Closed under left and right multiplication by every basis vector.
    pub fn is_ideal(&self) -> bool {
        let gens: Vec<Element> = (0..self.alg.dim()).map(|i| Element::basis(&self.alg, i)).collect();
        self.basis().iter().all(|v| {
            gens.iter().all(|g| {
                self.contains(&v.mul(g).expect("same parent")) && self.contains(&g.mul(v).expect("same parent"))
            })
        })
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.basis()).finish()
    }
}
