//! Algebras built from other algebras: graded tensor products, the plus
//! functor, the odd square-root-of-one double, direct sums and closed spans.

use crate::algebra::{koszul, Element, Parity, Superalgebra, TableBuilder};
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::scalar::Scalar;

/// Graded tensor product with basis `a_i ⊗ b_j` at index `i * dim B + j` and
/// `(a ⊗ x)(b ⊗ y) = (-1)^{|x||b|} ab ⊗ xy`.
pub fn tensor_super(a: &Superalgebra, b: &Superalgebra) -> Result<Superalgebra> {
    a.characteristic().ensure_same(b.characteristic())?;
    let (na, nb) = (a.dim(), b.dim());
    let mut t = TableBuilder::new(a.characteristic());
    for i in 0..na {
        for k in 0..na {
            let ik = a.product(i, k);
            if ik.is_empty() {
                continue;
            }
            for j in 0..nb {
                let sign = koszul(b.parity(j), a.parity(k));
                for l in 0..nb {
                    for (p, c) in ik {
                        for (q, d) in b.product(j, l) {
                            t.add(i * nb + j, k * nb + l, p * nb + q, (c * d).signed(sign));
                        }
                    }
                }
            }
        }
    }
    let mut parity = Vec::with_capacity(na * nb);
    let mut names = Vec::with_capacity(na * nb);
    for i in 0..na {
        for j in 0..nb {
            parity.push(a.parity(i) + b.parity(j));
            names.push(format!("{}⊗{}", a.name(i), b.name(j)));
        }
    }
    t.build(parity, names)
}

/// Same space with `a ∘ b = ½(ab + (-1)^{|a||b|} ba)`.
pub fn plus_algebra(a: &Superalgebra) -> Result<Superalgebra> {
    let half = Scalar::half(a.characteristic());
    let mut t = TableBuilder::new(a.characteristic());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            t.add_product(i, j, &half, a.product(i, j));
            let s = half.clone().signed(koszul(a.parity(i), a.parity(j)));
            t.add_product(i, j, &s, a.product(j, i));
        }
    }
    t.build(a.parities().to_vec(), a.names().to_vec())
}

/// `A + Au` for a purely even `A`, with `u` odd, central and `u² = 1`.
pub fn adjoin_sqrt1(a: &Superalgebra) -> Result<Superalgebra> {
    if !a.is_purely_even() {
        return Err(Error::Invalid("adjoining an odd square root of one needs a purely even algebra".into()));
    }
    let n = a.dim();
    let one = a.one();
    let mut t = TableBuilder::new(a.characteristic());
    for i in 0..n {
        for j in 0..n {
            let p = a.product(i, j);
            let shifted: Vec<(usize, Scalar)> = p.iter().map(|(k, c)| (k + n, c.clone())).collect();
            t.add_product(i, j, &one, p);
            t.add_product(i, j + n, &one, &shifted);
            t.add_product(i + n, j, &one, &shifted);
            t.add_product(i + n, j + n, &one, p);
        }
    }
    let mut parity = vec![Parity::Even; n];
    parity.extend(std::iter::repeat_n(Parity::Odd, n));
    let mut names = a.names().to_vec();
    names.extend(a.names().iter().map(|s| if s == "1" { "u".to_string() } else { format!("{s}u") }));
    t.build(parity, names)
}

/// `A ⊕ B` with componentwise product; names from `B` get a prime.
pub fn direct_sum(a: &Superalgebra, b: &Superalgebra) -> Result<Superalgebra> {
    a.characteristic().ensure_same(b.characteristic())?;
    let n = a.dim();
    let entries = a
        .entries()
        .map(|(i, j, k, c)| (i, j, k, c.clone()))
        .chain(b.entries().map(|(i, j, k, c)| (i + n, j + n, k + n, c.clone())))
        .collect::<Vec<_>>();
    let mut parity = a.parities().to_vec();
    parity.extend_from_slice(b.parities());
    let mut names = a.names().to_vec();
    names.extend(b.names().iter().map(|s| format!("{s}'")));
    Superalgebra::new(a.characteristic(), parity, names, entries)
}

/// Inclusion of a subalgebra: `images[i]` is the ambient element for basis
/// vector `i` of `sub`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub sub: Superalgebra,
    pub ambient: Superalgebra,
    pub images: Vec<Element>,
}

impl Embedding {
    pub fn apply(&self, x: &Element) -> Result<Element> {
        if x.algebra() != &self.sub {
            return Err(Error::MismatchedParents);
        }
        let mut out = Element::zero(&self.ambient);
        for (c, img) in x.coeffs().iter().zip(&self.images) {
            if !c.is_zero() {
                out = out.add(&img.scale(c))?;
            }
        }
        Ok(out)
    }
}

/// Structure constants of a multiplicatively closed span. Elements are split
/// into homogeneous parts; each part is row reduced, even basis first.
/// Fails with [`Error::NotClosed`] naming the first escaping product.
pub fn subalgebra(a: &Superalgebra, span: &[Element]) -> Result<Embedding> {
    let ch = a.characteristic();
    let mut even = EchelonBasis::new(ch, a.dim());
    let mut odd = EchelonBasis::new(ch, a.dim());
    for x in span {
        if x.algebra() != a {
            return Err(Error::MismatchedParents);
        }
        even.insert(x.part(Parity::Even).into_coeffs());
        odd.insert(x.part(Parity::Odd).into_coeffs());
    }
    let basis: Vec<Element> =
        even.rows().iter().chain(odd.rows()).map(|r| Element::new(a, r.clone())).collect::<Result<_>>()?;
    let ne = even.dim();
    let mut t = TableBuilder::new(ch);
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let p = x.mul(y)?;
            if p.is_zero() {
                continue;
            }
            let ce = even.coordinates(p.part(Parity::Even).coeffs());
            let co = odd.coordinates(p.part(Parity::Odd).coeffs());
            let (Some(ce), Some(co)) = (ce, co) else {
                return Err(Error::NotClosed { left: i, right: j, product: p.into_coeffs() });
            };
            for (k, c) in ce.into_iter().enumerate() {
                t.add(i, j, k, c);
            }
            for (k, c) in co.into_iter().enumerate() {
                t.add(i, j, ne + k, c);
            }
        }
    }
    let parity: Vec<Parity> = (0..basis.len()).map(|i| if i < ne { Parity::Even } else { Parity::Odd }).collect();
    let names = basis.iter().map(|b| b.to_string()).collect();
    let sub = t.build(parity, names)?;
    Ok(Embedding { sub, ambient: a.clone(), images: basis })
}

/// Whether `b_i ↦ images[i]` is a parity-preserving multiplicative linear
/// map from `a`.
pub fn is_homomorphism(a: &Superalgebra, images: &[Element]) -> Result<bool> {
    if images.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: images.len() });
    }
    for (i, img) in images.iter().enumerate() {
        if !img.is_zero() && img.parity() != Some(a.parity(i)) {
            return Ok(false);
        }
    }
    let Some(target) = images.first().map(|x| x.algebra().clone()) else {
        return Ok(true);
    };
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let mut lhs = Element::zero(&target);
            for (k, c) in a.product(i, j) {
                lhs = lhs.add(&images[*k].scale(c))?;
            }
            if lhs != images[i].mul(&images[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Homomorphism whose images are linearly independent and span the target.
pub fn is_isomorphism(a: &Superalgebra, images: &[Element]) -> Result<bool> {
    let Some(target) = images.first().map(|x| x.algebra().clone()) else {
        return Ok(a.dim() == 0);
    };
    let span = EchelonBasis::from_vectors(a.characteristic(), target.dim(), images.iter().map(|x| x.coeffs().to_vec()));
    Ok(span.dim() == a.dim() && a.dim() == target.dim() && is_homomorphism(a, images)?)
}
