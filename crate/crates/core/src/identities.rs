//! Identity checkers.
//!
//! Every identity here is multilinear, so it holds on the whole algebra iff
//! it holds on all tuples of (homogeneous) basis vectors. Checkers walk the
//! basis tuples in lexicographic order and report the lexicographically least
//! failing tuple, whatever the execution mode.

use std::fmt;

use crate::algebra::{koszul, normalize_sparse, Element, Parity, Sparse, Superalgebra};
use crate::error::Result;
use crate::exec::Exec;
use crate::operator::{right_mult, Operator};
use crate::scalar::Scalar;

/// Failing basis tuple and the nonzero residual it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub residual: Element,
}

/// Outcome of an identity or structure check. `passed` holds exactly when
/// there is no witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    identity: String,
    checked: u64,
    witness: Option<Witness>,
}

impl Report {
    pub fn pass(identity: impl Into<String>, checked: u64) -> Report {
        Report { identity: identity.into(), checked, witness: None }
    }

    pub fn fail(identity: impl Into<String>, checked: u64, witness: Witness) -> Report {
        Report { identity: identity.into(), checked, witness: Some(witness) }
    }

    pub fn identity(&self) -> &str {
        &self.identity
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// Number of tuples evaluated: all of them on success, otherwise those up
    /// to and including the witness in lexicographic order.
    pub fn checked(&self) -> u64 {
        self.checked
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: pass ({} tuples)", self.identity, self.checked),
            Some(w) => write!(f, "{}: FAIL at {:?}, residual {}", self.identity, w.tuple, w.residual),
        }
    }
}

/// The identities the checkers know about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `xy = (-1)^{|x||y|} yx`
    SuperCommutative,
    /// The four-variable super-linearized Jordan identity.
    JordanSuper,
    /// `R(x)R(y)R(z) + (-1)^{|x||y|+|x||z|+|y||z|} R(z)R(y)R(x) + (-1)^{|y||z|} R((xz)y)
    ///  = R(xy)R(z) + (-1)^{|y||z|} R(xz)R(y) + (-1)^{|x||y|+|x||z|} R(yz)R(x)`,
    /// with operators acting on the right.
    OperatorIdentity,
    /// `D(a^2, z) = 2 D(a, az)` for even `a`.
    DSquare,
    /// `D(x, y)` is a super-derivation.
    Leibniz,
    Associative,
    /// Ordinary `xy = yx`.
    Commutative,
    /// Full linearization of `(x^2 y) x = x^2 (y x)`, ignoring the grading.
    LinearizedJordan,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::SuperCommutative,
        Identity::JordanSuper,
        Identity::OperatorIdentity,
        Identity::DSquare,
        Identity::Leibniz,
        Identity::Associative,
        Identity::Commutative,
        Identity::LinearizedJordan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::SuperCommutative => "sj1",
            Identity::JordanSuper => "sj2",
            Identity::OperatorIdentity => "op3",
            Identity::DSquare => "dsq",
            Identity::Leibniz => "leibniz",
            Identity::Associative => "assoc",
            Identity::Commutative => "comm",
            Identity::LinearizedJordan => "jordan_lin",
        }
    }

    pub fn from_name(s: &str) -> Option<Identity> {
        Identity::ALL.into_iter().find(|i| i.name() == s)
    }

    pub fn check(self, alg: &Superalgebra, exec: Exec) -> Report {
        let all: Vec<usize> = (0..alg.dim()).collect();
        match self {
            Identity::SuperCommutative => run(alg, self, exec, vec![all; 2], |a, t| {
                let (x, y) = (t[0], t[1]);
                let mut acc = Acc::default();
                acc.push(false, a.product(x, y).to_vec());
                acc.push(!koszul(a.parity(x), a.parity(y)), a.product(y, x).to_vec());
                acc.finish()
            }),
            Identity::Commutative => run(alg, self, exec, vec![all; 2], |a, t| {
                let mut acc = Acc::default();
                acc.push(false, a.product(t[0], t[1]).to_vec());
                acc.push(true, a.product(t[1], t[0]).to_vec());
                acc.finish()
            }),
            Identity::Associative => run(alg, self, exec, vec![all; 3], |a, t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                let mut acc = Acc::default();
                acc.push(false, rb(a, a.product(x, y), z));
                acc.push(true, lb(a, x, a.product(y, z)));
                acc.finish()
            }),
            Identity::JordanSuper => run(alg, self, exec, vec![all; 4], sj2_basis),
            Identity::OperatorIdentity => run(alg, self, exec, vec![all; 4], op3_basis),
            Identity::LinearizedJordan => run(alg, self, exec, vec![all; 4], linearized_jordan_basis),
            Identity::DSquare => {
                let even = alg.even_indices();
                run(alg, self, exec, vec![even, all.clone(), all], dsq_basis)
            }
            Identity::Leibniz => run(alg, self, exec, vec![all; 4], leibniz_basis),
        }
    }
}

pub fn check_supercommutative(alg: &Superalgebra) -> Report {
    Identity::SuperCommutative.check(alg, Exec::default())
}

pub fn check_jordan_super(alg: &Superalgebra) -> Report {
    Identity::JordanSuper.check(alg, Exec::default())
}

pub fn check_operator_identity(alg: &Superalgebra) -> Report {
    Identity::OperatorIdentity.check(alg, Exec::default())
}

pub fn check_associative(alg: &Superalgebra) -> Report {
    Identity::Associative.check(alg, Exec::default())
}

pub fn check_d_square(alg: &Superalgebra) -> Report {
    Identity::DSquare.check(alg, Exec::default())
}

pub fn check_leibniz(alg: &Superalgebra) -> Report {
    Identity::Leibniz.check(alg, Exec::default())
}

/// Ordinary commutativity plus the fully linearized Jordan identity; the
/// first failure wins. Meant for ungraded algebras such as Grassmann
/// envelopes.
pub fn check_jordan_ordinary(alg: &Superalgebra, exec: Exec) -> Report {
    let comm = Identity::Commutative.check(alg, exec);
    if !comm.passed() {
        return comm;
    }
    Identity::LinearizedJordan.check(alg, exec)
}

/// Drives a basis-tuple check over the product of `domains`.
fn run<F>(alg: &Superalgebra, id: Identity, exec: Exec, domains: Vec<Vec<usize>>, residual: F) -> Report
where
    F: Fn(&Superalgebra, &[usize]) -> Sparse + Sync + Send,
{
    let total: u64 = domains.iter().map(|d| d.len() as u64).product();
    let outer = domains.first().map_or(0, Vec::len);
    let hit = exec.find_first(outer, |i0| {
        let mut idx = vec![0usize; domains.len()];
        idx[0] = i0;
        loop {
            let tuple: Vec<usize> = idx.iter().zip(&domains).map(|(&i, d)| d[i]).collect();
            let r = residual(alg, &tuple);
            if !r.is_empty() {
                return Some((idx.clone(), tuple, r));
            }
            // Odometer over the inner slots.
            let mut s = domains.len() - 1;
            loop {
                if s == 0 {
                    return None;
                }
                idx[s] += 1;
                if idx[s] < domains[s].len() {
                    break;
                }
                idx[s] = 0;
                s -= 1;
            }
        }
    });
    match hit {
        None => Report::pass(id.name(), total),
        Some((idx, tuple, r)) => {
            let mut rank = 0u64;
            for (i, d) in idx.iter().zip(&domains) {
                rank = rank * d.len() as u64 + *i as u64;
            }
            Report::fail(id.name(), rank + 1, Witness { tuple, residual: Element::from_sparse(alg, &r) })
        }
    }
}

/// Signed accumulation of sparse terms.
#[derive(Default)]
struct Acc {
    terms: Vec<(usize, Scalar)>,
}

impl Acc {
    fn push(&mut self, negate: bool, v: Sparse) {
        for (k, c) in v {
            self.terms.push((k, c.signed(negate)));
        }
    }

    fn finish(self) -> Sparse {
        normalize_sparse(self.terms)
    }
}

/// `v * b_j`.
fn rb(a: &Superalgebra, v: &[(usize, Scalar)], j: usize) -> Sparse {
    let mut out = Vec::new();
    for (i, c) in v {
        for (k, d) in a.product(*i, j) {
            out.push((*k, c * d));
        }
    }
    normalize_sparse(out)
}

/// `b_i * v`.
fn lb(a: &Superalgebra, i: usize, v: &[(usize, Scalar)]) -> Sparse {
    let mut out = Vec::new();
    for (j, c) in v {
        for (k, d) in a.product(i, *j) {
            out.push((*k, c * d));
        }
    }
    normalize_sparse(out)
}

fn unit(a: &Superalgebra, i: usize) -> Sparse {
    vec![(i, a.one())]
}

fn sj2_basis(a: &Superalgebra, t: &[usize]) -> Sparse {
    let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
    let (py, pz, pw) = (a.parity(y), a.parity(z), a.parity(w));
    let xy = a.product(x, y);
    let xz = a.product(x, z);
    let xw = a.product(x, w);
    let mut acc = Acc::default();
    // ((xy)z)t
    acc.push(false, rb(a, &rb(a, xy, z), w));
    // (-1)^{|y||z|+|y||t|+|z||t|} ((xt)z)y
    let s1 = koszul(py, pz) ^ koszul(py, pw) ^ koszul(pz, pw);
    acc.push(s1, rb(a, &rb(a, xw, z), y));
    // (-1)^{|z||t|} x((yt)z)
    acc.push(koszul(pz, pw), lb(a, x, &rb(a, a.product(y, w), z)));
    // minus the right-hand side
    acc.push(true, a.mul_sparse(xy, a.product(z, w)));
    acc.push(!koszul(py, pz), a.mul_sparse(xz, a.product(y, w)));
    let s4 = pw.is_odd() && (py + pz).is_odd();
    acc.push(!s4, a.mul_sparse(xw, a.product(y, z)));
    acc.finish()
}

/// Applies the operator identity to basis vector `t[3]`.
fn op3_basis(a: &Superalgebra, t: &[usize]) -> Sparse {
    let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
    let (px, py, pz) = (a.parity(x), a.parity(y), a.parity(z));
    let wx = a.product(w, x);
    let wz = a.product(w, z);
    let mut acc = Acc::default();
    // w R(x)R(y)R(z) = ((wx)y)z
    acc.push(false, rb(a, &rb(a, wx, y), z));
    // (-1)^{|x||y|+|x||z|+|y||z|} w R(z)R(y)R(x)
    let s1 = koszul(px, py) ^ koszul(px, pz) ^ koszul(py, pz);
    acc.push(s1, rb(a, &rb(a, wz, y), x));
    // (-1)^{|y||z|} w R((xz)y)
    let xzy = rb(a, a.product(x, z), y);
    acc.push(koszul(py, pz), a.mul_sparse(&unit(a, w), &xzy));
    // minus: w R(xy)R(z), (-1)^{|y||z|} w R(xz)R(y), (-1)^{|x||y|+|x||z|} w R(yz)R(x)
    acc.push(true, rb(a, &lb(a, w, a.product(x, y)), z));
    acc.push(!koszul(py, pz), rb(a, &lb(a, w, a.product(x, z)), y));
    let s3 = koszul(px, py) ^ koszul(px, pz);
    acc.push(!s3, rb(a, &lb(a, w, a.product(y, z)), x));
    acc.finish()
}

/// Tuple `(x1, x2, x3, y)`: sum over `c` of `((xa xb) y) xc - (xa xb)(y xc)`.
fn linearized_jordan_basis(a: &Superalgebra, t: &[usize]) -> Sparse {
    let xs = [t[0], t[1], t[2]];
    let y = t[3];
    let mut acc = Acc::default();
    for c in 0..3 {
        let (p, q) = match c {
            0 => (xs[1], xs[2]),
            1 => (xs[0], xs[2]),
            _ => (xs[0], xs[1]),
        };
        let pq = a.product(p, q);
        acc.push(false, rb(a, &rb(a, pq, y), xs[c]));
        acc.push(true, a.mul_sparse(pq, a.product(y, xs[c])));
    }
    acc.finish()
}

/// `w D(u, v) = (wu)v - (-1)^{|u||v|} (wv)u` for sparse homogeneous `u, v`.
fn apply_d(a: &Superalgebra, w: usize, u: &[(usize, Scalar)], pu: Parity, v: &[(usize, Scalar)], pv: Parity) -> Sparse {
    let wu = a.mul_sparse(&unit(a, w), u);
    let wv = a.mul_sparse(&unit(a, w), v);
    let mut acc = Acc::default();
    acc.push(false, a.mul_sparse(&wu, v));
    acc.push(!koszul(pu, pv), a.mul_sparse(&wv, u));
    acc.finish()
}

/// Tuple `(a, z, w)` with `a` even: `w D(a^2, z) - 2 w D(a, az)`.
fn dsq_basis(alg: &Superalgebra, t: &[usize]) -> Sparse {
    let (a, z, w) = (t[0], t[1], t[2]);
    let pz = alg.parity(z);
    let aa = alg.product(a, a);
    let az = alg.product(a, z);
    let lhs = apply_d(alg, w, aa, Parity::Even, &unit(alg, z), pz);
    let rhs = apply_d(alg, w, &unit(alg, a), Parity::Even, az, pz);
    let two = Scalar::from_int(alg.characteristic(), 2);
    let mut acc = Acc::default();
    acc.push(false, lhs);
    acc.push(true, rhs.into_iter().map(|(k, c)| (k, &two * &c)).collect());
    acc.finish()
}

/// Tuple `(x, y, u, v)`: `(uv)D - u(vD) - (-1)^{|D||v|} (uD)v` with
/// `D = D(x, y)`.
fn leibniz_basis(a: &Superalgebra, t: &[usize]) -> Sparse {
    let (x, y, u, v) = (t[0], t[1], t[2], t[3]);
    let (px, py) = (a.parity(x), a.parity(y));
    let pd = px + py;
    let d_of = |vec: &[(usize, Scalar)]| -> Sparse {
        let mut acc = Acc::default();
        for (w, c) in vec {
            let img = apply_d(a, *w, &unit(a, x), px, &unit(a, y), py);
            acc.push(false, img.into_iter().map(|(k, d)| (k, c * &d)).collect());
        }
        acc.finish()
    };
    let uv = a.product(u, v);
    let mut acc = Acc::default();
    acc.push(false, d_of(uv));
    acc.push(true, lb(a, u, &d_of(&unit(a, v))));
    acc.push(!koszul(pd, a.parity(v)), rb(a, &d_of(&unit(a, u)), v));
    acc.finish()
}

/// The super-linearized Jordan identity evaluated on arbitrary homogeneous
/// elements through element arithmetic (left side minus right side). Used to
/// cross-check the basis reduction.
pub fn sj2_residual(x: &Element, y: &Element, z: &Element, t: &Element) -> Result<Element> {
    let py = y.homogeneous_parity()?;
    let pz = z.homogeneous_parity()?;
    let pt = t.homogeneous_parity()?;
    x.homogeneous_parity()?;
    let sign = |neg: bool, e: Element| if neg { e.scale(&-x.algebra().one()) } else { e };
    let l1 = x.mul(y)?.mul(z)?.mul(t)?;
    let l2 = sign(koszul(py, pz) ^ koszul(py, pt) ^ koszul(pz, pt), x.mul(t)?.mul(z)?.mul(y)?);
    let l3 = sign(koszul(pz, pt), x.mul(&y.mul(t)?.mul(z)?)?);
    let r1 = x.mul(y)?.mul(&z.mul(t)?)?;
    let r2 = sign(koszul(py, pz), x.mul(z)?.mul(&y.mul(t)?)?);
    let r3 = sign(pt.is_odd() && (py + pz).is_odd(), x.mul(t)?.mul(&y.mul(z)?)?);
    l1.add(&l2)?.add(&l3)?.sub(&r1)?.sub(&r2)?.sub(&r3)
}

/// Left side minus right side of the operator identity, assembled from
/// `R`-matrices.
pub fn operator_identity_residual(x: &Element, y: &Element, z: &Element) -> Result<Operator> {
    let (px, py, pz) = (x.homogeneous_parity()?, y.homogeneous_parity()?, z.homogeneous_parity()?);
    let (rx, ry, rz) = (right_mult(x)?, right_mult(y)?, right_mult(z)?);
    let minus = |neg: bool, op: Operator| if neg { op.scale(&-x.algebra().one()) } else { op };
    let l1 = &(&rx * &ry) * &rz;
    let l2 = minus(koszul(px, py) ^ koszul(px, pz) ^ koszul(py, pz), &(&rz * &ry) * &rx);
    let l3 = minus(koszul(py, pz), right_mult(&x.mul(z)?.mul(y)?)?);
    let r1 = &right_mult(&x.mul(y)?)? * &rz;
    let r2 = minus(koszul(py, pz), &right_mult(&x.mul(z)?)? * &ry);
    let r3 = minus(koszul(px, py) ^ koszul(px, pz), &right_mult(&y.mul(z)?)? * &rx);
    Ok(l1.add(&l2).add(&l3).sub(&r1).sub(&r2).sub(&r3))
}
