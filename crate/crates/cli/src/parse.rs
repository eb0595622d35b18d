use superalg::linalg::Matrix;
use superalg::{Characteristic, Element, Scalar, Superalgebra};

pub fn scalar(ch: Characteristic, s: &str) -> Result<Scalar, String> {
    Scalar::parse(ch, s).map_err(|e| e.to_string())
}

/// Rows separated by `;`, entries by `,`: `"1,0;0,1"`. The empty string is
/// the 0×0 matrix.
pub fn matrix(ch: Characteristic, s: &str) -> Result<Matrix, String> {
    if s.trim().is_empty() {
        return Ok(Matrix::zeros(ch, 0, 0));
    }
    let rows: Vec<Vec<Scalar>> = s
        .split(';')
        .map(|r| r.split(',').map(|c| scalar(ch, c)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(format!("matrix {s:?} has rows of different lengths"));
    }
    Ok(Matrix::from_rows(ch, rows))
}

/// Either `dim` comma-separated coefficients (`"1,0,1/2"`) or a sum of
/// named terms (`"e1 + 1/2*x - y"`).
pub fn element(a: &Superalgebra, s: &str) -> Result<Element, String> {
    let ch = a.characteristic();
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() == a.dim() {
        if let Ok(cs) = parts.iter().map(|p| Scalar::parse(ch, p)).collect::<Result<Vec<_>, _>>() {
            return Element::new(a, cs).map_err(|e| e.to_string());
        }
    }
    let mut coeffs = vec![Scalar::zero(ch); a.dim()];
    let normalized = s.replace('-', "+-");
    for term in normalized.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (neg, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, term),
        };
        let (c, name) = match body.split_once('*') {
            Some((c, name)) => (scalar(ch, c)?, name.trim()),
            None => (Scalar::one(ch), body),
        };
        let i = a.index_of(name).ok_or_else(|| format!("no basis vector named {name:?}"))?;
        let c = if neg { -c } else { c };
        coeffs[i] += &c;
    }
    Element::new(a, coeffs).map_err(|e| e.to_string())
}

/// Elements separated by `;`.
pub fn elements(a: &Superalgebra, s: &str) -> Result<Vec<Element>, String> {
    s.split(';').filter(|p| !p.trim().is_empty()).map(|p| element(a, p)).collect()
}
