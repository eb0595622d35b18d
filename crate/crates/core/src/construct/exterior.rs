use std::cmp::Reverse;
use std::collections::BTreeMap;

use crate::algebra::{Parity, Superalgebra, TableBuilder};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::operator::Operator;
use crate::scalar::{Characteristic, Scalar};

/// All subsets of `0..n` as bitmasks, ordered by size and then
/// lexicographically by their sorted elements.
pub fn subset_basis(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), elements(m)));
    masks
}

fn elements(mask: u32) -> Vec<u32> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

fn monomial_name(prefix: &str, mask: u32) -> String {
    if mask == 0 {
        return "1".into();
    }
    elements(mask).iter().map(|i| format!("{prefix}{}", i + 1)).collect()
}

fn index_of_masks(masks: &[u32]) -> Vec<usize> {
    let mut at = vec![0; masks.len()];
    for (i, &m) in masks.iter().enumerate() {
        at[m as usize] = i;
    }
    at
}

/// Exterior algebra on `n` odd generators, `n ≤ 12`.
pub fn grassmann(ch: Characteristic, n: usize) -> Result<Superalgebra> {
    if n > 12 {
        return Err(Error::SizeBound(format!("grassmann algebra on {n} generators (at most 12)")));
    }
    let masks = subset_basis(n);
    let at = index_of_masks(&masks);
    let mut t = TableBuilder::new(ch);
    for (i, &s) in masks.iter().enumerate() {
        for (j, &u) in masks.iter().enumerate() {
            if s & u != 0 {
                continue;
            }
            // Sign of the shuffle: pairs (a in s, b in u) with a > b.
            let inversions: u32 = elements(u).iter().map(|&b| (s >> (b + 1)).count_ones()).sum();
            let c = Scalar::one(ch).signed(inversions % 2 == 1);
            t.add(i, j, at[(s | u) as usize], c);
        }
    }
    let parity = masks.iter().map(|m| Parity::from_bit((m.count_ones() % 2) as u8)).collect();
    let names = masks.iter().map(|&m| monomial_name("e", m)).collect();
    t.build(parity, names)
}

fn poly_exponents(p: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|e| {
                (0..p).map(move |k| {
                    let mut e = e.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    out.sort_by_key(|e| (e.iter().sum::<usize>(), Reverse(e.clone())));
    out
}

fn poly_name(e: &[usize]) -> String {
    let single = e.len() == 1;
    let s: String = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            let var = if single { "t".to_string() } else { format!("t{}", i + 1) };
            if k == 1 {
                var
            } else {
                format!("{var}^{k}")
            }
        })
        .collect();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// `F[t_1..t_n] / (t_i^p)` over `GF(p)`, `p^n ≤ 4096`. Basis monomials are
/// ordered by total degree.
pub fn truncated_poly(ch: Characteristic, n: usize) -> Result<Superalgebra> {
    let p = ch.get() as usize;
    if p == 0 {
        return Err(Error::Invalid("truncated polynomials need a prime characteristic".into()));
    }
    if (p as f64).powi(n as i32) > 4096.0 {
        return Err(Error::SizeBound(format!("{p}^{n} truncated monomials (at most 4096)")));
    }
    let exps = poly_exponents(p, n);
    let index: BTreeMap<Vec<usize>, usize> = exps.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut t = TableBuilder::new(ch);
    for (i, a) in exps.iter().enumerate() {
        for (j, b) in exps.iter().enumerate() {
            let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if s.iter().all(|&k| k < p) {
                t.add(i, j, index[&s], Scalar::one(ch));
            }
        }
    }
    t.build(vec![Parity::Even; exps.len()], exps.iter().map(|e| poly_name(e)).collect())
}

/// `∂/∂t_var` on [`truncated_poly`]`(ch, n)`.
pub fn truncated_poly_partial(ch: Characteristic, n: usize, var: usize) -> Result<Operator> {
    if var >= n {
        return Err(Error::Invalid(format!("variable {var} out of range for {n} variables")));
    }
    let alg = truncated_poly(ch, n)?;
    let exps = poly_exponents(ch.get() as usize, n);
    let index: BTreeMap<&[usize], usize> = exps.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    let mut m = Matrix::zeros(ch, alg.dim(), alg.dim());
    for (j, e) in exps.iter().enumerate() {
        if e[var] == 0 {
            continue;
        }
        let mut d = e.clone();
        d[var] -= 1;
        m.set(index[d.as_slice()], j, Scalar::from_int(ch, e[var] as i64));
    }
    Operator::new(&alg, m, Parity::Even)
}

/// Clifford algebra of a symmetric bilinear form, `v_i v_j + v_j v_i =
/// 2 gram(i, j)`. All basis monomials are even.
pub fn clifford(gram: &Matrix) -> Result<Superalgebra> {
    let k = gram.rows();
    if gram.cols() != k {
        return Err(Error::Invalid("gram matrix is not square".into()));
    }
    if gram.transpose() != *gram {
        return Err(Error::Invalid("gram matrix is not symmetric".into()));
    }
    if k > 12 {
        return Err(Error::SizeBound(format!("clifford algebra on {k} generators (at most 12)")));
    }
    let ch = gram.characteristic();
    let masks = subset_basis(k);
    let at = index_of_masks(&masks);
    let two = Scalar::from_int(ch, 2);
    let mut t = TableBuilder::new(ch);
    for (i, &s) in masks.iter().enumerate() {
        for (j, &u) in masks.iter().enumerate() {
            let mut acc: BTreeMap<u32, Scalar> = BTreeMap::from([(s, Scalar::one(ch))]);
            for g in elements(u) {
                let mut next: BTreeMap<u32, Scalar> = BTreeMap::new();
                for (m, c) in acc {
                    for (m2, c2) in times_generator(gram, &two, &elements(m), g as usize) {
                        let e = next.entry(m2).or_insert_with(|| Scalar::zero(ch));
                        *e += &(&c * &c2);
                    }
                }
                acc = next;
            }
            for (m, c) in acc {
                t.add(i, j, at[m as usize], c);
            }
        }
    }
    let names = masks.iter().map(|&m| monomial_name("v", m)).collect();
    t.build(vec![Parity::Even; masks.len()], names)
}

/// Sorted monomial `v_{mono[0]} ... v_{mono[r-1]}` times `v_j`.
fn times_generator(gram: &Matrix, two: &Scalar, mono: &[u32], j: usize) -> Vec<(u32, Scalar)> {
    let ch = gram.characteristic();
    let mask = |m: &[u32]| m.iter().fold(0u32, |acc, &i| acc | 1 << i);
    let Some((&last, prefix)) = mono.split_last() else {
        return vec![(1 << j, Scalar::one(ch))];
    };
    let last = last as usize;
    if last < j {
        return vec![(mask(mono) | 1 << j, Scalar::one(ch))];
    }
    if last == j {
        return vec![(mask(prefix), gram.get(j, j).clone())];
    }
    // prefix v_last v_j = -(prefix v_j) v_last + 2 g(last, j) prefix
    let mut out = Vec::new();
    let g = gram.get(last, j);
    if !g.is_zero() {
        out.push((mask(prefix), two * g));
    }
    for (m, c) in times_generator(gram, two, prefix, j) {
        for (m2, c2) in times_generator(gram, two, &elements(m), last) {
            out.push((m2, -&(&c * &c2)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_order() {
        assert_eq!(subset_basis(3), vec![0, 1, 2, 4, 3, 5, 6, 7]);
    }

    #[test]
    fn grassmann_signs() {
        let g = grassmann(Characteristic::ZERO, 2).unwrap();
        assert_eq!(g.names(), ["1", "e1", "e2", "e1e2"]);
        let one = g.one();
        assert_eq!(g.product(1, 2), [(3, one.clone())]);
        assert_eq!(g.product(2, 1), [(3, -&one)]);
        assert!(g.product(1, 1).is_empty());
    }

    #[test]
    fn truncated_names_and_nilpotency() {
        let o = truncated_poly(Characteristic::new(3).unwrap(), 1).unwrap();
        assert_eq!(o.names(), ["1", "t", "t^2"]);
        assert!(o.product(1, 2).is_empty());
        assert!(truncated_poly(Characteristic::new(3).unwrap(), 8).is_err());
    }

    #[test]
    fn clifford_rank_two() {
        let ch = Characteristic::ZERO;
        let c = clifford(&Matrix::identity(ch, 2)).unwrap();
        let one = Scalar::one(ch);
        // v1 v2 = -v2 v1, (v1 v2)^2 = -1
        assert_eq!(c.product(1, 2), [(3, one.clone())]);
        assert_eq!(c.product(2, 1), [(3, -&one)]);
        assert_eq!(c.product(3, 3), [(0, -&one)]);
        assert_eq!(c.product(1, 1), [(0, one)]);
    }
}
