//! Finite-dimensional superalgebras given by structure constants.
//!
//! A [`Superalgebra`] is immutable and cheap to clone (it is reference
//! counted). Its table maps a basis pair `(i, j)` to the sparse expansion
//! `b_i b_j = sum_k c_ij^k b_k`; every nonzero constant must respect the
//! grading, `|b_k| = |b_i| + |b_j|`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, BitXor};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Characteristic, Scalar};

/// Sparse vector: strictly increasing indices, no zero coefficients.
pub type Sparse = Vec<(usize, Scalar)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Parity {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl BitXor for Parity {
    type Output = Parity;
    #[allow(clippy::suspicious_op_assign_impl, clippy::suspicious_arithmetic_impl)]
    fn bitxor(self, rhs: Parity) -> Parity {
        self + rhs
    }
}

/// Whether the Koszul sign `(-1)^{|a||b|}` is `-1`.
#[inline]
pub fn koszul(a: Parity, b: Parity) -> bool {
    a.is_odd() && b.is_odd()
}

#[derive(PartialEq, Eq, Debug)]
struct Inner {
    ch: Characteristic,
    parity: Vec<Parity>,
    names: Vec<String>,
    /// `rows[i]` lists `(j, b_i b_j)` for the nonzero products, ascending in `j`.
    rows: Vec<Vec<(usize, Sparse)>>,
}

/// A superalgebra over an exact field, given by structure constants.
#[derive(Clone)]
pub struct Superalgebra(Arc<Inner>);

impl PartialEq for Superalgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Superalgebra {}

impl fmt::Debug for Superalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Superalgebra")
            .field("char", &self.0.ch.get())
            .field("dim", &self.dim())
            .field("names", &self.0.names)
            .finish()
    }
}

/// Accumulates structure constants, summing repeated `(i, j, k)` entries.
/// Constructors use it; [`Superalgebra::new`] instead rejects duplicates.
#[derive(Clone, Debug)]
pub struct TableBuilder {
    ch: Characteristic,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl TableBuilder {
    pub fn new(ch: Characteristic) -> TableBuilder {
        TableBuilder { ch, entries: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        self.entries.entry((i, j, k)).and_modify(|x| *x += &c).or_insert(c);
    }

    /// Adds `c * v` as the contribution to `b_i b_j`.
    pub fn add_product(&mut self, i: usize, j: usize, c: &Scalar, v: &[(usize, Scalar)]) {
        for (k, x) in v {
            self.add(i, j, *k, c * x);
        }
    }

    pub fn build(self, parity: Vec<Parity>, names: Vec<String>) -> Result<Superalgebra> {
        let ch = self.ch;
        Superalgebra::new(ch, parity, names, self.entries.into_iter().map(|((i, j, k), c)| (i, j, k, c)))
    }
}

impl Superalgebra {
    /// Validates and builds. Zero coefficients are dropped; a repeated
    /// `(i, j, k)` triple is an error.
    pub fn new<I>(ch: Characteristic, parity: Vec<Parity>, names: Vec<String>, entries: I) -> Result<Superalgebra>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let n = parity.len();
        if names.len() != n {
            return Err(Error::InvalidTable(format!("{} names for dimension {n}", names.len())));
        }
        let mut map: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidTable(format!(
                    "index out of range in entry ({i}, {j}, {k}) for dimension {n}"
                )));
            }
            if c.characteristic() != ch {
                return Err(Error::CharacteristicMismatch(ch, c.characteristic()));
            }
            if c.is_zero() {
                continue;
            }
            if parity[k] != parity[i] + parity[j] {
                return Err(Error::InvalidTable(format!(
                    "parity-homogeneity violated: entry ({i}, {j}, {k}) maps {:?} x {:?} to {:?}",
                    parity[i], parity[j], parity[k]
                )));
            }
            if map.entry((i, j)).or_default().insert(k, c).is_some() {
                return Err(Error::InvalidTable(format!("duplicate entry ({i}, {j}, {k})")));
            }
        }
        let mut rows: Vec<Vec<(usize, Sparse)>> = vec![Vec::new(); n];
        for ((i, j), ks) in map {
            rows[i].push((j, ks.into_iter().collect()));
        }
        Ok(Superalgebra(Arc::new(Inner { ch, parity, names, rows })))
    }

    /// The zero-dimensional algebra.
    pub fn trivial(ch: Characteristic) -> Superalgebra {
        Superalgebra::new(ch, vec![], vec![], std::iter::empty()).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.0.parity.len()
    }

    pub fn characteristic(&self) -> Characteristic {
        self.0.ch
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.0.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.0.parity
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.parity(i).is_odd()).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity(i).is_odd()).collect()
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.0.ch)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self.0.ch)
    }

    /// Expansion of `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        let row = &self.0.rows[i];
        match row.binary_search_by_key(&j, |(jj, _)| *jj) {
            Ok(at) => &row[at].1,
            Err(_) => &[],
        }
    }

    /// All nonzero structure constants in ascending `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.0
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().flat_map(move |(j, v)| v.iter().map(move |(k, c)| (i, *j, *k, c))))
    }

    pub fn is_purely_even(&self) -> bool {
        self.0.parity.iter().all(|p| !p.is_odd())
    }

    /// A copy with the expansion of `b_i b_j` replaced by `value`. Used to
    /// build corrupted inputs for negative controls.
    pub fn with_product(&self, i: usize, j: usize, value: &[(usize, Scalar)]) -> Result<Superalgebra> {
        let kept = self.entries().filter(|&(a, b, _, _)| (a, b) != (i, j)).map(|(a, b, k, c)| (a, b, k, c.clone()));
        let added = value.iter().map(|(k, c)| (i, j, *k, c.clone()));
        Superalgebra::new(
            self.characteristic(),
            self.0.parity.clone(),
            self.0.names.clone(),
            kept.chain(added).collect::<Vec<_>>(),
        )
    }

    /// Same table under new display names.
    pub fn renamed(&self, names: Vec<String>) -> Result<Superalgebra> {
        Superalgebra::new(
            self.characteristic(),
            self.0.parity.clone(),
            names,
            self.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect::<Vec<_>>(),
        )
    }

    /// Product of two sparse vectors.
    pub fn mul_sparse(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> Sparse {
        let mut terms: Vec<(usize, Scalar)> = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let p = self.product(*i, *j);
                if p.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in p {
                    terms.push((*k, &ab * c));
                }
            }
        }
        normalize_sparse(terms)
    }

    /// Product of two dense coefficient vectors.
    pub fn mul_dense(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = self.product(i, j);
                if p.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in p {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Matrix of right multiplication by basis vector `i` (column `j` is
    /// `b_j b_i`).
    pub fn right_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.characteristic(), self.dim(), self.dim());
        for j in 0..self.dim() {
            for (k, c) in self.product(j, i) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Matrix of left multiplication by basis vector `i` (column `j` is
    /// `b_i b_j`).
    pub fn left_matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.characteristic(), self.dim(), self.dim());
        for (j, v) in &self.0.rows[i] {
            for (k, c) in v {
                m.set(*k, *j, c.clone());
            }
        }
        m
    }

    /// The two-sided identity element, if one exists (exact linear solve of
    /// `u b_j = b_j = b_j u` for all `j`).
    pub fn identity_element(&self) -> Option<Element> {
        let n = self.dim();
        if n == 0 {
            return Some(Element::zero(self));
        }
        // Unknowns u_0..u_{n-1}; equations indexed by (side, j, k) plus a
        // right-hand-side column.
        let mut rows = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                let mut left = vec![self.zero(); n + 1];
                let mut right = vec![self.zero(); n + 1];
                for i in 0..n {
                    if let Some((_, c)) = self.product(i, j).iter().find(|(kk, _)| *kk == k) {
                        left[i] = c.clone();
                    }
                    if let Some((_, c)) = self.product(j, i).iter().find(|(kk, _)| *kk == k) {
                        right[i] = c.clone();
                    }
                }
                let rhs = if j == k { self.one() } else { self.zero() };
                left[n] = rhs.clone();
                right[n] = rhs;
                rows.push(left);
                rows.push(right);
            }
        }
        let mut m = Matrix::from_rows(self.characteristic(), rows);
        let pivots = m.rref_in_place();
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut u = vec![self.zero(); n];
        for (r, &p) in pivots.iter().enumerate() {
            u[p] = m.get(r, n).clone();
        }
        Some(Element { alg: self.clone(), coeffs: u })
    }
}

/// Sorts by index, merges duplicates and drops zeros.
pub fn normalize_sparse(mut terms: Vec<(usize, Scalar)>) -> Sparse {
    terms.sort_by_key(|(k, _)| *k);
    let mut out: Sparse = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some((last, acc)) if *last == k => *acc += &c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

pub fn sparse_to_dense(ch: Characteristic, n: usize, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(ch); n];
    for (k, c) in v {
        out[*k] = c.clone();
    }
    out
}

pub fn dense_to_sparse(v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

/// An element of a specific superalgebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    alg: Superalgebra,
    coeffs: Vec<Scalar>,
}

impl Element {
    pub fn new(alg: &Superalgebra, coeffs: Vec<Scalar>) -> Result<Element> {
        if coeffs.len() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), got: coeffs.len() });
        }
        if let Some(c) = coeffs.iter().find(|c| c.characteristic() != alg.characteristic()) {
            return Err(Error::CharacteristicMismatch(alg.characteristic(), c.characteristic()));
        }
        Ok(Element { alg: alg.clone(), coeffs })
    }

    pub fn zero(alg: &Superalgebra) -> Element {
        Element { alg: alg.clone(), coeffs: vec![alg.zero(); alg.dim()] }
    }

    pub fn basis(alg: &Superalgebra, i: usize) -> Element {
        let mut e = Element::zero(alg);
        e.coeffs[i] = alg.one();
        e
    }

    pub fn from_sparse(alg: &Superalgebra, v: &[(usize, Scalar)]) -> Element {
        Element { alg: alg.clone(), coeffs: sparse_to_dense(alg.characteristic(), alg.dim(), v) }
    }

    /// Sum of `c * b_name` terms; panics on an unknown name.
    pub fn from_named(alg: &Superalgebra, terms: &[(&str, Scalar)]) -> Element {
        let mut e = Element::zero(alg);
        for (name, c) in terms {
            let i = alg.index_of(name).unwrap_or_else(|| panic!("no basis vector named {name:?}"));
            e.coeffs[i] += c;
        }
        e
    }

    pub fn algebra(&self) -> &Superalgebra {
        &self.alg
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn to_sparse(&self) -> Sparse {
        dense_to_sparse(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// The parity if homogeneous. Zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut seen = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.alg.parity(i);
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    pub fn homogeneous_parity(&self) -> Result<Parity> {
        self.parity().ok_or(Error::NotHomogeneous)
    }

    /// The component of the given parity.
    pub fn part(&self, p: Parity) -> Element {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if self.alg.parity(i) == p { c.clone() } else { self.alg.zero() })
            .collect();
        Element { alg: self.alg.clone(), coeffs }
    }

    fn same_parent(&self, other: &Element) -> Result<()> {
        if self.alg.characteristic() != other.alg.characteristic() {
            return Err(Error::CharacteristicMismatch(self.alg.characteristic(), other.alg.characteristic()));
        }
        if self.alg != other.alg {
            return Err(Error::MismatchedParents);
        }
        Ok(())
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.same_parent(other)?;
        Ok(Element { alg: self.alg.clone(), coeffs: self.alg.mul_dense(&self.coeffs, &other.coeffs) })
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.same_parent(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Element { alg: self.alg.clone(), coeffs })
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.same_parent(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Element { alg: self.alg.clone(), coeffs })
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element { alg: self.alg.clone(), coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| if c.is_one() { self.alg.name(i).to_string() } else { format!("{c}*{}", self.alg.name(i)) })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::frac(Characteristic::ZERO, n, d).unwrap()
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// e (even), x (odd): e*e = e, e*x = x*e = x.
    fn tiny() -> Superalgebra {
        Superalgebra::new(
            Characteristic::ZERO,
            vec![Parity::Even, Parity::Odd],
            names(&["e", "x"]),
            vec![(0, 0, 0, q(1, 1)), (0, 1, 1, q(1, 1)), (1, 0, 1, q(1, 1))],
        )
        .unwrap()
    }

    #[test]
    fn rejects_parity_violation() {
        let err = Superalgebra::new(
            Characteristic::ZERO,
            vec![Parity::Even, Parity::Odd],
            names(&["e", "x"]),
            vec![(0, 1, 0, q(1, 1))],
        )
        .unwrap_err();
        assert!(err.to_string().contains("parity-homogeneity"));
    }

    #[test]
    fn rejects_duplicates_and_out_of_range() {
        let dup = Superalgebra::new(
            Characteristic::ZERO,
            vec![Parity::Even],
            names(&["e"]),
            vec![(0, 0, 0, q(1, 1)), (0, 0, 0, q(1, 1))],
        );
        assert!(dup.unwrap_err().to_string().contains("duplicate"));
        let oob = Superalgebra::new(Characteristic::ZERO, vec![Parity::Even], names(&["e"]), vec![(0, 1, 0, q(1, 1))]);
        assert!(oob.unwrap_err().to_string().contains("out of range"));
    }

    #[test]
    fn multiply_and_identity() {
        let a = tiny();
        let e = Element::basis(&a, 0);
        let x = Element::basis(&a, 1);
        assert_eq!(e.mul(&x).unwrap(), x);
        assert!(x.mul(&x).unwrap().is_zero());
        assert_eq!(Element::zero(&a).mul(&x).unwrap(), Element::zero(&a));
        assert_eq!(a.identity_element().unwrap(), e);
        let sum = e.add(&x).unwrap();
        assert_eq!(sum.parity(), None);
        assert!(sum.homogeneous_parity().is_err());
        assert_eq!(sum.part(Parity::Odd), x);
    }

    #[test]
    fn no_identity_in_zero_algebra() {
        let z = Superalgebra::new(Characteristic::ZERO, vec![Parity::Even], names(&["a"]), vec![]).unwrap();
        assert!(z.identity_element().is_none());
    }

    #[test]
    fn mismatched_parents_rejected() {
        let a = tiny();
        let b = Superalgebra::new(Characteristic::ZERO, vec![Parity::Even], names(&["a"]), vec![]).unwrap();
        let err = Element::basis(&a, 0).mul(&Element::basis(&b, 0)).unwrap_err();
        assert!(matches!(err, Error::MismatchedParents));
        let c = Superalgebra::new(Characteristic::new(3).unwrap(), vec![Parity::Even], names(&["a"]), vec![]).unwrap();
        let err = Element::basis(&b, 0).mul(&Element::basis(&c, 0)).unwrap_err();
        assert!(matches!(err, Error::CharacteristicMismatch(..)));
    }

    #[test]
    fn entries_are_canonically_ordered() {
        let a = tiny();
        let e: Vec<_> = a.entries().map(|(i, j, k, _)| (i, j, k)).collect();
        let mut sorted = e.clone();
        sorted.sort();
        assert_eq!(e, sorted);
    }
}
