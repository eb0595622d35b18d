use crate::error::Result;
use crate::extend::{adjoin_sqrt1, plus_algebra};
use crate::linalg::Matrix;
use crate::scalar::{Characteristic, Scalar};

use super::exterior::{grassmann, truncated_poly_partial};
use super::kantor::{kantor_double, poisson_bracket_grassmann, twisted_double, vector_bracket, SecondaryGrading};
use super::matrix::{fixed_points, matrix_super, osp_superinvolution, transpose_superinvolution};
use super::small::{d_t, k3, superform};
use crate::algebra::Superalgebra;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: Superalgebra,
}

/// Standard symplectic form on `2k` coordinates.
pub fn symplectic(ch: Characteristic, k: usize) -> Matrix {
    Matrix::from_fn(ch, 2 * k, 2 * k, |i, j| {
        if j == i + k && i < k {
            Scalar::one(ch)
        } else if i == j + k && j < k {
            -Scalar::one(ch)
        } else {
            Scalar::zero(ch)
        }
    })
}

/// The Jordan superalgebras used for identity sweeps, at small parameters.
pub fn catalog() -> Result<Vec<CatalogEntry>> {
    let q = Characteristic::ZERO;
    let mut out = Vec::new();
    let mut push = |name: String, algebra: Superalgebra| out.push(CatalogEntry { name, algebra });
    push("K3".into(), k3(q));
    for (n, d) in [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2)] {
        let t = Scalar::frac(q, n, d)?;
        push(format!("D_t(t={t})"), d_t(&t));
    }
    for m in 0..=3 {
        for k in 0..=2 {
            let s = superform(&Matrix::identity(q, m), &symplectic(q, k))?;
            push(format!("superform(m={m},2k={})", 2 * k), s.algebra);
        }
    }
    push("M(1|1)+".into(), plus_algebra(&matrix_super(q, 1, 1)?)?);
    push("M(2|1)+".into(), plus_algebra(&matrix_super(q, 2, 1)?)?);
    push("M2(sqrt1)+".into(), plus_algebra(&adjoin_sqrt1(&matrix_super(q, 2, 0)?)?)?);
    push("JP1".into(), fixed_points(&transpose_superinvolution(q, 1)?.0)?);
    push("Josp(1|2)".into(), fixed_points(&osp_superinvolution(q, 1, 1)?)?);
    for n in 1..=3 {
        push(format!("Kan(G({n}),poisson)"), kantor_double(&poisson_bracket_grassmann(q, n)?)?);
    }
    let p5 = Characteristic::new(5)?;
    push("Kan(O1,d/dt) p=5".into(), kantor_double(&vector_bracket(&truncated_poly_partial(p5, 1, 0)?)?)?);
    let br = poisson_bracket_grassmann(q, 2)?;
    let g2 = grassmann(q, 2)?;
    let degree = g2.parities().iter().map(|p| p.bit()).collect();
    push("twisted(G(2),poisson)".into(), twisted_double(&br, &SecondaryGrading::new(&g2, degree)?)?);
    Ok(out)
}
