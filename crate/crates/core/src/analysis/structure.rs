use std::collections::VecDeque;

use crate::algebra::{Element, Parity, Superalgebra};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Matrix};
use crate::operator::{left_mult, right_mult, Operator};
use crate::scalar::Scalar;

use super::poly::{is_irreducible, trim};
use super::subspace::Subspace;

pub const MAX_DIM: usize = 64;

fn check_size(a: &Superalgebra) -> Result<()> {
    if a.dim() > MAX_DIM {
        return Err(Error::SizeBound(format!("dimension {} (at most {MAX_DIM})", a.dim())));
    }
    Ok(())
}

/// An associative algebra of operators, split by parity.
#[derive(Clone, Debug)]
pub struct OperatorAlgebra {
    pub even: Vec<Operator>,
    pub odd: Vec<Operator>,
}

impl OperatorAlgebra {
    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }
}

fn generators(a: &Superalgebra) -> Vec<Operator> {
    let mut g = Vec::with_capacity(2 * a.dim());
    for i in 0..a.dim() {
        let b = Element::basis(a, i);
        g.push(left_mult(&b).expect("basis vectors are homogeneous"));
        g.push(right_mult(&b).expect("basis vectors are homogeneous"));
    }
    g
}

/// Span of all nonempty products of `gens`, by worklist closure with exact
/// incremental row reduction.
fn closure(a: &Superalgebra, gens: &[Operator]) -> OperatorAlgebra {
    let n = a.dim();
    let ch = a.characteristic();
    let mut bases = [EchelonBasis::new(ch, n * n), EchelonBasis::new(ch, n * n)];
    let mut kept: [Vec<Operator>; 2] = [Vec::new(), Vec::new()];
    let mut queue = VecDeque::new();
    let add =
        |op: Operator, bases: &mut [EchelonBasis; 2], kept: &mut [Vec<Operator>; 2], queue: &mut VecDeque<Operator>| {
            if op.is_zero() {
                return;
            }
            let p = op.parity().bit() as usize;
            if bases[p].insert(op.matrix().as_slice().to_vec()) {
                kept[p].push(op.clone());
                queue.push_back(op);
            }
        };
    for g in gens {
        add(g.clone(), &mut bases, &mut kept, &mut queue);
    }
    while let Some(b) = queue.pop_front() {
        if bases[0].dim() + bases[1].dim() == n * n {
            break;
        }
        for g in gens {
            add(&b * g, &mut bases, &mut kept, &mut queue);
        }
    }
    let [even, odd] = kept;
    OperatorAlgebra { even, odd }
}

/// The associative algebra generated by all left and right multiplications.
pub fn mult_algebra(a: &Superalgebra) -> Result<OperatorAlgebra> {
    check_size(a)?;
    Ok(closure(a, &generators(a)))
}

/// The algebra generated by the multiplications together with the grading
/// operator; its invariant subspaces are exactly the graded ideals.
pub fn graded_mult_algebra(a: &Superalgebra) -> Result<OperatorAlgebra> {
    check_size(a)?;
    let mut g = generators(a);
    g.push(Operator::grading(a));
    Ok(closure(a, &g))
}

/// Even operators commuting with every left and right multiplication.
pub fn centroid(a: &Superalgebra) -> Result<Vec<Operator>> {
    check_size(a)?;
    let n = a.dim();
    let ch = a.characteristic();
    // Unknowns: entries (r, c) of a parity-preserving matrix.
    let mut slot = vec![vec![None; n]; n];
    let mut unknowns = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if a.parity(r) == a.parity(c) {
                slot[r][c] = Some(unknowns.len());
                unknowns.push((r, c));
            }
        }
    }
    let u = unknowns.len();
    let mut eqs = EchelonBasis::new(ch, u);
    'outer: for g in generators(a) {
        let m = g.matrix();
        for r in 0..n {
            for c in 0..n {
                // (phi G - G phi)[r][c]
                let mut row = vec![Scalar::zero(ch); u];
                for k in 0..n {
                    if let Some(s) = slot[r][k] {
                        row[s] += m.get(k, c);
                    }
                    if let Some(s) = slot[k][c] {
                        row[s] -= m.get(r, k);
                    }
                }
                if row.iter().all(Scalar::is_zero) {
                    continue;
                }
                eqs.insert(row);
                if eqs.is_full() {
                    break 'outer;
                }
            }
        }
    }
    let sys = if eqs.dim() == 0 { Matrix::zeros(ch, 1, u) } else { Matrix::from_rows(ch, eqs.rows().to_vec()) };
    sys.nullspace()
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zeros(ch, n, n);
            for (s, &(r, c)) in unknowns.iter().enumerate() {
                m.set(r, c, v[s].clone());
            }
            Operator::new(a, m, Parity::Even)
        })
        .collect()
}

/// Minimal polynomial of `c` (lowest degree first, monic).
fn minimal_polynomial(c: &Operator) -> Vec<Scalar> {
    let ch = c.algebra().characteristic();
    let n = c.algebra().dim();
    let mut powers = vec![Operator::identity(c.algebra())];
    loop {
        let k = powers.len() - 1;
        let next = &powers[k] * c;
        powers.push(next);
        let cols = Matrix::from_fn(ch, n * n, powers.len(), |r, j| powers[j].matrix().as_slice()[r].clone());
        if let Some(v) = cols.nullspace().into_iter().next() {
            let lead = v.last().cloned().expect("nonempty");
            let inv = lead.inv().expect("the newest power is dependent");
            return trim(v.iter().map(|x| x * &inv).collect());
        }
    }
}

/// Whether a commutative centroid is a field: some element has reducible
/// minimal polynomial (not a field) or an irreducible one of full degree
/// (a field).
pub fn centroid_is_field(basis: &[Operator]) -> Result<bool> {
    let d = basis.len();
    if d <= 1 {
        return Ok(d == 1);
    }
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i + 1..] {
            if (x * y).matrix() != (y * x).matrix() {
                return Ok(false);
            }
        }
    }
    let ch = basis[0].algebra().characteristic();
    let mut candidates: Vec<Operator> = basis.to_vec();
    for k in 1..(4 * d as i64 + 8) {
        let kk = Scalar::from_int(ch, k);
        let mut pow = Scalar::one(ch);
        let mut c = Operator::zero(basis[0].algebra());
        for b in basis {
            c = c.add(&b.scale(&pow));
            pow = &pow * &kk;
        }
        candidates.push(c);
    }
    for c in &candidates {
        let mp = minimal_polynomial(c);
        match is_irreducible(&mp, ch) {
            Some(false) => return Ok(false),
            Some(true) if mp.len() == d + 1 => return Ok(true),
            _ => {}
        }
    }
    Err(Error::Undecided("could not decide whether the centroid is a field".into()))
}

/// Smallest subspace containing `v` and closed under multiplication by
/// every basis vector on either side.
pub fn ideal_generated(a: &Superalgebra, v: &Element) -> Result<Subspace> {
    check_size(a)?;
    let mut s = Subspace::zero(a);
    let mut queue = VecDeque::new();
    if s.insert(v)? {
        queue.push_back(v.clone());
    }
    let gens: Vec<Element> = (0..a.dim()).map(|i| Element::basis(a, i)).collect();
    while let Some(u) = queue.pop_front() {
        for g in &gens {
            for w in [u.mul(g)?, g.mul(&u)?] {
                if s.insert(&w)? {
                    queue.push_back(w);
                }
            }
        }
    }
    if !s.is_ideal() {
        return Err(Error::Invalid("generated span failed the ideal re-check".into()));
    }
    Ok(s)
}

/// Outcome of the simplicity test.
#[derive(Clone, Debug)]
pub struct Simplicity {
    pub simple: bool,
    pub dim: usize,
    pub centroid_dim: usize,
    pub mult_algebra_dim: usize,
    pub graded_mult_algebra_dim: usize,
    pub witness_ideal: Option<Subspace>,
    pub reason: String,
}

/// Simple iff products do not all vanish, the centroid `C` is a field, and
/// the algebra generated by the multiplications and the grading operator has
/// dimension `n² / dim C` (so it is all `C`-linear maps).
pub fn is_simple(a: &Superalgebra) -> Result<Simplicity> {
    let n = a.dim();
    if n == 0 {
        return Err(Error::Precondition("simplicity needs a nonzero algebra".into()));
    }
    check_size(a)?;
    let m = mult_algebra(a)?.dim();
    let mt = graded_mult_algebra(a)?.dim();
    let c = centroid(a)?;
    let d = c.len();
    let mut out = Simplicity {
        simple: false,
        dim: n,
        centroid_dim: d,
        mult_algebra_dim: m,
        graded_mult_algebra_dim: mt,
        witness_ideal: None,
        reason: String::new(),
    };
    let zero_product = a.entries().next().is_none();
    if zero_product {
        out.reason = "all products vanish".into();
        out.witness_ideal = Some(Subspace::spanned(a, &[Element::basis(a, 0)])?);
        return Ok(out);
    }
    if !centroid_is_field(&c)? {
        out.reason = "centroid is not a field".into();
    } else if !(n * n).is_multiple_of(d) {
        out.reason = format!("n²/d = {}/{d} is not an integer", n * n);
    } else if mt != n * n / d {
        out.reason = format!("graded multiplication algebra has dimension {mt}, expected {}", n * n / d);
    } else {
        out.simple = true;
        out.reason = "simple".into();
        return Ok(out);
    }
    out.witness_ideal = find_proper_ideal(a, &c)?;
    Ok(out)
}

fn find_proper_ideal(a: &Superalgebra, centroid: &[Operator]) -> Result<Option<Subspace>> {
    let n = a.dim();
    for i in 0..n {
        let s = ideal_generated(a, &Element::basis(a, i))?;
        if !s.is_zero() && !s.is_full() {
            return Ok(Some(s));
        }
    }
    // The image of a non-invertible centroid element is an ideal.
    let mut candidates: Vec<Operator> = centroid.to_vec();
    for (i, x) in centroid.iter().enumerate() {
        for y in &centroid[i + 1..] {
            candidates.push(x.sub(y));
        }
    }
    for c in candidates {
        let images: Vec<Element> = (0..n).map(|j| c.apply(&Element::basis(a, j))).collect::<Result<_>>()?;
        let s = Subspace::spanned(a, &images)?;
        if !s.is_zero() && !s.is_full() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
