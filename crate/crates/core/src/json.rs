//! JSON encodings of algebras, brackets, reports, certificates and suite
//! results. Output is compact and canonical (table entries in ascending
//! `(i, j, k)` order, coefficients always written as `"num/den"`), so equal
//! values serialize to identical bytes.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{Element, Parity, Superalgebra};
use crate::analysis::{Simplicity, Subspace};
use crate::construct::Bracket;
use crate::error::{Error, Result};
use crate::identities::Report;
use crate::scalar::{Characteristic, Scalar};
use crate::verifier::SuiteResult;

type Entry = (usize, usize, usize, String);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    char: u64,
    dim: usize,
    parity: Vec<u8>,
    names: Vec<String>,
    table: Vec<Entry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketDoc {
    char: u64,
    dim: usize,
    bracket: Vec<Entry>,
}

fn parse_doc<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json { line: e.line(), column: e.column(), message: e.to_string() })
}

fn entries_out<'a>(it: impl Iterator<Item = (usize, usize, usize, &'a Scalar)>) -> Vec<Entry> {
    it.map(|(i, j, k, c)| (i, j, k, c.to_fraction_string())).collect()
}

fn entries_in(ch: Characteristic, entries: Vec<Entry>) -> Result<Vec<(usize, usize, usize, Scalar)>> {
    entries.into_iter().map(|(i, j, k, c)| Ok((i, j, k, Scalar::parse(ch, &c)?))).collect()
}

pub fn algebra_to_json(a: &Superalgebra) -> String {
    let doc = AlgebraDoc {
        char: a.characteristic().get() as u64,
        dim: a.dim(),
        parity: a.parities().iter().map(|p| p.bit()).collect(),
        names: a.names().to_vec(),
        table: entries_out(a.entries()),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn algebra_from_json(text: &str) -> Result<Superalgebra> {
    let doc: AlgebraDoc = parse_doc(text)?;
    let ch = Characteristic::new(doc.char)?;
    if doc.parity.len() != doc.dim {
        return Err(Error::InvalidTable(format!("{} parities for dimension {}", doc.parity.len(), doc.dim)));
    }
    if let Some(b) = doc.parity.iter().find(|&&b| b > 1) {
        return Err(Error::InvalidTable(format!("parity {b} is not 0 or 1")));
    }
    let parity = doc.parity.iter().map(|&b| Parity::from_bit(b)).collect();
    Superalgebra::new(ch, parity, doc.names, entries_in(ch, doc.table)?)
}

pub fn bracket_to_json(br: &Bracket) -> String {
    let a = br.algebra();
    let doc = BracketDoc { char: a.characteristic().get() as u64, dim: a.dim(), bracket: entries_out(br.entries()) };
    serde_json::to_string(&doc).expect("serializable")
}

/// Parses a bracket on `a`; characteristic and dimension must match.
pub fn bracket_from_json(a: &Superalgebra, text: &str) -> Result<Bracket> {
    let doc: BracketDoc = parse_doc(text)?;
    let ch = Characteristic::new(doc.char)?;
    a.characteristic().ensure_same(ch)?;
    if doc.dim != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: doc.dim });
    }
    Bracket::new(a, entries_in(ch, doc.bracket)?)
}

pub fn element_value(x: &Element) -> Value {
    Value::from(x.coeffs().iter().map(Scalar::to_fraction_string).collect::<Vec<_>>())
}

pub fn subspace_value(s: &Subspace) -> Value {
    Value::from(s.basis().iter().map(element_value).collect::<Vec<_>>())
}

pub fn report_value(r: &Report) -> Value {
    let witness = match r.witness() {
        None => Value::Null,
        Some(w) => json!({ "tuple": w.tuple, "residual": element_value(&w.residual) }),
    };
    json!({ "identity": r.identity(), "passed": r.passed(), "checked": r.checked(), "witness": witness })
}

pub fn certificate_value(s: &Simplicity) -> Value {
    json!({
        "simple": s.simple,
        "dim": s.dim,
        "centroid_dim": s.centroid_dim,
        "mult_algebra_dim": s.mult_algebra_dim,
        "graded_mult_algebra_dim": s.graded_mult_algebra_dim,
        "witness_ideal": s.witness_ideal.as_ref().map(subspace_value),
    })
}

pub fn suite_value(r: &SuiteResult) -> Value {
    let cases: Vec<Value> =
        r.cases.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "witness": c.witness })).collect();
    json!({ "suite": r.suite, "passed": r.passed, "cases": cases })
}

/// Compact rendering with keys in insertion order.
pub fn render(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable")
}
