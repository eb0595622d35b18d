use std::collections::BTreeMap;

use crate::algebra::{koszul, normalize_sparse, Element, Parity, Sparse, Superalgebra, TableBuilder};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::extend::subalgebra;
use crate::identities::{Identity, Report};
use crate::operator::Operator;
use crate::scalar::{Characteristic, Scalar};

use super::exterior::{grassmann, subset_basis};

/// A super-skew, parity-additive bilinear map on a superalgebra, stored as
/// basis values `[b_i, b_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    alg: Superalgebra,
    table: BTreeMap<(usize, usize), Sparse>,
}

impl Bracket {
    /// Validates ranges, characteristic, parity additivity and super-skew
    /// symmetry. Repeated `(i, j, k)` entries are rejected.
    pub fn new<I>(alg: &Superalgebra, entries: I) -> Result<Bracket>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let n = alg.dim();
        let mut raw: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidBracket(format!("index out of range in entry ({i}, {j}, {k})")));
            }
            alg.characteristic().ensure_same(c.characteristic())?;
            if c.is_zero() {
                continue;
            }
            if alg.parity(k) != alg.parity(i) + alg.parity(j) {
                return Err(Error::InvalidBracket(format!("entry ({i}, {j}, {k}) is not parity-additive")));
            }
            if raw.entry((i, j)).or_default().insert(k, c).is_some() {
                return Err(Error::InvalidBracket(format!("duplicate entry ({i}, {j}, {k})")));
            }
        }
        let table: BTreeMap<(usize, usize), Sparse> =
            raw.into_iter().map(|(ij, ks)| (ij, ks.into_iter().collect())).collect();
        let br = Bracket { alg: alg.clone(), table };
        for i in 0..n {
            for j in 0..n {
                let flip = !koszul(alg.parity(i), alg.parity(j));
                let swapped: Sparse = br.get(j, i).iter().map(|(k, c)| (*k, c.clone().signed(flip))).collect();
                if br.get(i, j) != swapped.as_slice() {
                    return Err(Error::InvalidBracket(format!("not super-skew on ({}, {})", alg.name(i), alg.name(j))));
                }
            }
        }
        Ok(br)
    }

    /// Builds from basis values `f(i, j) = [b_i, b_j]`.
    pub fn from_fn(alg: &Superalgebra, f: impl Fn(usize, usize) -> Sparse) -> Result<Bracket> {
        let mut entries = Vec::new();
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                entries.extend(f(i, j).into_iter().map(|(k, c)| (i, j, k, c)));
            }
        }
        Bracket::new(alg, entries)
    }

    pub fn zero(alg: &Superalgebra) -> Bracket {
        Bracket { alg: alg.clone(), table: BTreeMap::new() }
    }

    pub fn algebra(&self) -> &Superalgebra {
        &self.alg
    }

    pub fn get(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.table.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    /// Nonzero entries in ascending `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.table.iter().flat_map(|(&(i, j), v)| v.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    pub fn apply(&self, x: &Element, y: &Element) -> Result<Element> {
        if x.algebra() != &self.alg || y.algebra() != &self.alg {
            return Err(Error::MismatchedParents);
        }
        let mut terms = Vec::new();
        for (i, a) in x.to_sparse() {
            for (j, b) in y.to_sparse() {
                let ab = &a * &b;
                terms.extend(self.get(i, j).iter().map(|(k, c)| (*k, &ab * c)));
            }
        }
        Ok(Element::from_sparse(&self.alg, &normalize_sparse(terms)))
    }
}

fn ensure_supercommutative_associative(a: &Superalgebra) -> Result<()> {
    for id in [Identity::Associative, Identity::SuperCommutative] {
        let r = id.check(a, Exec::default());
        if !r.passed() {
            return Err(Error::Precondition(format!(
                "the base algebra must be associative and supercommutative ({r})"
            )));
        }
    }
    Ok(())
}

/// `A + Av` with `|vb| = |b| + 1` and
/// `a(vb) = (-1)^{|a|} v(ab)`, `(va)b = v(ab)`, `(va)(vb) = (-1)^{|a|}[a, b]`.
/// Basis: `b_0..b_{n-1}` then `vb_0..vb_{n-1}`.
pub fn kantor_double(br: &Bracket) -> Result<Superalgebra> {
    let a = br.algebra();
    ensure_supercommutative_associative(a)?;
    let n = a.dim();
    let one = a.one();
    let mut t = TableBuilder::new(a.characteristic());
    for i in 0..n {
        let sign = Scalar::one(a.characteristic()).signed(a.parity(i).is_odd());
        for j in 0..n {
            let p = a.product(i, j);
            let vp: Sparse = p.iter().map(|(k, c)| (k + n, c.clone())).collect();
            t.add_product(i, j, &one, p);
            t.add_product(i, n + j, &sign, &vp);
            t.add_product(n + i, j, &one, &vp);
            t.add_product(n + i, n + j, &sign, br.get(i, j));
        }
    }
    let mut parity = a.parities().to_vec();
    parity.extend(a.parities().iter().map(|&p| p + Parity::Odd));
    let mut names = a.names().to_vec();
    names.extend(a.names().iter().map(|s| if s == "1" { "v".into() } else { format!("v{s}") }));
    t.build(parity, names)
}

/// A bracket is Jordan when its double satisfies the Jordan superidentities.
pub fn is_jordan_bracket(br: &Bracket) -> Result<Report> {
    Ok(Identity::JordanSuper.check(&kantor_double(br)?, Exec::default()))
}

/// `[f, g] = (-1)^{|f|} Σ_j ∂_j f ∂_j g` on `grassmann(ch, n)`, `n ≤ 6`, with
/// left derivatives `∂_j`.
pub fn poisson_bracket_grassmann(ch: Characteristic, n: usize) -> Result<Bracket> {
    if n > 6 {
        return Err(Error::SizeBound(format!("poisson bracket on {n} generators (at most 6)")));
    }
    let g = grassmann(ch, n)?;
    let masks = subset_basis(n);
    let mut at = vec![0; masks.len()];
    for (i, &m) in masks.iter().enumerate() {
        at[m as usize] = i;
    }
    // Left derivative of a monomial: move e_j to the front, then drop it.
    let partial = |mask: u32, j: usize| -> Option<(u32, bool)> {
        if mask >> j & 1 == 0 {
            return None;
        }
        let before = (mask & ((1u32 << j) - 1)).count_ones();
        Some((mask & !(1 << j), before % 2 == 1))
    };
    Bracket::from_fn(&g, |i, k| {
        let (f, h) = (masks[i], masks[k]);
        let mut terms = Vec::new();
        for j in 0..n {
            let (Some((df, s1)), Some((dh, s2))) = (partial(f, j), partial(h, j)) else {
                continue;
            };
            let sign = s1 ^ s2 ^ (f.count_ones() % 2 == 1);
            for (idx, c) in g.product(at[df as usize], at[dh as usize]) {
                terms.push((*idx, c.clone().signed(sign)));
            }
        }
        normalize_sparse(terms)
    })
}

/// `[a, b] = d(a) b - a d(b)` for an even derivation `d`.
pub fn vector_bracket(d: &Operator) -> Result<Bracket> {
    let a = d.algebra();
    if d.parity() != Parity::Even {
        return Err(Error::Precondition("the derivation must be even".into()));
    }
    let image = |i: usize| d.apply(&Element::basis(a, i));
    let images = (0..a.dim()).map(image).collect::<Result<Vec<_>>>()?;
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = d.apply(&Element::from_sparse(a, a.product(i, j)))?;
            let rhs = images[i].mul(&Element::basis(a, j))?.add(&Element::basis(a, i).mul(&images[j])?)?;
            if lhs != rhs {
                return Err(Error::Precondition(format!("not a derivation on ({}, {})", a.name(i), a.name(j))));
            }
        }
    }
    Bracket::from_fn(a, |i, j| {
        let x = images[i].mul(&Element::basis(a, j)).expect("same parent");
        let y = Element::basis(a, i).mul(&images[j]).expect("same parent");
        x.sub(&y).expect("same parent").to_sparse()
    })
}

/// A second multiplicative `Z/2` grading, independent of the parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondaryGrading {
    alg: Superalgebra,
    degree: Vec<u8>,
}

impl SecondaryGrading {
    pub fn new(alg: &Superalgebra, degree: Vec<u8>) -> Result<SecondaryGrading> {
        if degree.len() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), got: degree.len() });
        }
        let degree: Vec<u8> = degree.into_iter().map(|d| d % 2).collect();
        for (i, j, k, _) in alg.entries() {
            if degree[k] != degree[i] ^ degree[j] {
                return Err(Error::Invalid(format!(
                    "secondary grading is not multiplicative at ({}, {})",
                    alg.name(i),
                    alg.name(j)
                )));
            }
        }
        Ok(SecondaryGrading { alg: alg.clone(), degree })
    }

    pub fn degree(&self) -> &[u8] {
        &self.degree
    }
}

/// The span of `A_(0)` and `A_(1) v` inside the double.
pub fn twisted_double(br: &Bracket, g: &SecondaryGrading) -> Result<Superalgebra> {
    let a = br.algebra();
    if &g.alg != a {
        return Err(Error::MismatchedParents);
    }
    for (i, j, k, _) in br.entries() {
        if g.degree[k] != g.degree[i] ^ g.degree[j] {
            return Err(Error::InvalidBracket(format!(
                "bracket does not respect the secondary grading at ({}, {})",
                a.name(i),
                a.name(j)
            )));
        }
    }
    let k = kantor_double(br)?;
    let n = a.dim();
    let span: Vec<Element> =
        (0..n).map(|i| if g.degree[i] == 0 { Element::basis(&k, i) } else { Element::basis(&k, n + i) }).collect();
    Ok(subalgebra(&k, &span)?.sub)
}
