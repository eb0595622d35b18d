use crate::algebra::{koszul, Parity, Superalgebra, TableBuilder};
use crate::error::{Error, Result};

use super::exterior::grassmann;

/// `A_0 ⊗ G(m)_0 + A_1 ⊗ G(m)_1` inside `A ⊗ G(m)`, returned as an ordinary
/// (purely even) algebra. Basis pairs `(i, g)` are listed in lexicographic
/// order; `m ≤ 8`.
pub fn grassmann_envelope(a: &Superalgebra, m: usize) -> Result<Superalgebra> {
    if m > 8 {
        return Err(Error::SizeBound(format!("grassmann envelope with {m} generators (at most 8)")));
    }
    let g = grassmann(a.characteristic(), m)?;
    let mut pairs = Vec::new();
    let mut at = vec![vec![None; g.dim()]; a.dim()];
    for i in 0..a.dim() {
        for x in 0..g.dim() {
            if a.parity(i) == g.parity(x) {
                at[i][x] = Some(pairs.len());
                pairs.push((i, x));
            }
        }
    }
    let mut t = TableBuilder::new(a.characteristic());
    for (p, &(i, x)) in pairs.iter().enumerate() {
        for (q, &(j, y)) in pairs.iter().enumerate() {
            let ab = a.product(i, j);
            let xy = g.product(x, y);
            if ab.is_empty() || xy.is_empty() {
                continue;
            }
            let sign = koszul(g.parity(x), a.parity(j));
            for (k, c) in ab {
                for (z, d) in xy {
                    let r = at[*k][*z].expect("products of envelope elements stay in the envelope");
                    t.add(p, q, r, (c * d).signed(sign));
                }
            }
        }
    }
    let names = pairs.iter().map(|&(i, x)| format!("{}⊗{}", a.name(i), g.name(x))).collect();
    t.build(vec![Parity::Even; pairs.len()], names)
}
