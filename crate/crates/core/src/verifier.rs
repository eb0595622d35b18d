//! Property suites over the catalog, each with a corrupted-input control.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, Parity, Superalgebra};
use crate::analysis::{
    conjugation_matrix, idempotent_pairs, is_simple, joint_eigenspaces, peirce_pair, u_grading, GradingTag,
    PeirceComponent, Subspace,
};
use crate::construct::{
    catalog, clifford, d_t, grassmann_envelope, k3, matrix_super, subset_basis, superform, CatalogEntry,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::identities::{check_jordan_ordinary, check_jordan_super, Identity, Report};
use crate::linalg::Matrix;
use crate::operator::{triple, u_operator};
use crate::scalar::{Characteristic, Scalar};

/// One named check inside a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Case {
    pub fn pass(name: impl Into<String>) -> Case {
        Case { name: name.into(), passed: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Case {
        Case { name: name.into(), passed: false, witness: Some(witness.into()) }
    }

    pub fn from_report(name: impl Into<String>, r: &Report) -> Case {
        match r.witness() {
            None => Case::pass(name),
            Some(w) => Case::fail(name, format!("tuple {:?}, residual {}", w.tuple, w.residual)),
        }
    }

    fn from_result(name: impl Into<String>, r: Result<Option<String>>) -> Case {
        match r {
            Ok(None) => Case::pass(name),
            Ok(Some(w)) => Case::fail(name, w),
            Err(e) => Case::fail(name, e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub suite: String,
    pub cases: Vec<Case>,
    pub passed: bool,
}

impl SuiteResult {
    pub fn new(suite: impl Into<String>, cases: Vec<Case>) -> SuiteResult {
        let passed = cases.iter().all(|c| c.passed);
        SuiteResult { suite: suite.into(), cases, passed }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        write!(
            f,
            "{}: {} ({} cases, {failed} failed)",
            self.suite,
            if self.passed { "pass" } else { "FAIL" },
            self.cases.len()
        )
    }
}

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 9] = [
    "lemma2_1",
    "lemma3_2",
    "peirce_inclusion",
    "d_t_simplicity",
    "catalog_identity_sweep",
    "envelope_agreement",
    "amitsur_levitzki",
    "u_grading",
    "negative_controls",
];

/// Runs a suite at its default parameters.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteResult> {
    let q = Characteristic::ZERO;
    match name {
        "lemma2_1" => {
            let mut cases = Vec::new();
            for n in 1..=3 {
                cases.extend(prefixed(&format!("n={n}"), lemma2_1_check(n)?));
            }
            Ok(SuiteResult::new(name, cases))
        }
        "lemma3_2" => lemma3_2_sweep(),
        "peirce_inclusion" => {
            let mut cases = Vec::new();
            for entry in peirce_instances()? {
                cases.extend(prefixed(&entry.name, peirce_inclusion_check(&entry.algebra)));
            }
            Ok(SuiteResult::new(name, cases))
        }
        "d_t_simplicity" => {
            let ts = [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2)]
                .map(|(n, d)| Scalar::frac(q, n, d))
                .into_iter()
                .collect::<Result<Vec<_>>>()?;
            Ok(d_t_simplicity_sweep(&ts))
        }
        "catalog_identity_sweep" => catalog_identity_sweep(),
        "envelope_agreement" => {
            let mut cases = Vec::new();
            for (label, a) in envelope_instances() {
                for m in [2, 4] {
                    cases.extend(prefixed(&format!("{label}, m={m}"), envelope_agreement_check(&a, m)?));
                }
            }
            Ok(SuiteResult::new(name, cases))
        }
        "amitsur_levitzki" => {
            let mut cases = amitsur_levitzki_check(2, 100, seed)?.cases;
            cases.extend(amitsur_levitzki_check(3, 50, seed)?.cases);
            Ok(SuiteResult::new(name, cases))
        }
        "u_grading" => u_grading_sweep(),
        "negative_controls" => {
            let cases = negative_controls(seed)?
                .into_iter()
                .map(|r| {
                    let name = format!("{} rejects its corrupted input", r.suite);
                    if r.passed {
                        Case::fail(name, "suite passed on corrupted input")
                    } else {
                        Case::pass(name)
                    }
                })
                .collect();
            Ok(SuiteResult::new(name, cases))
        }
        other => Err(Error::Invalid(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    }
}

fn prefixed(prefix: &str, r: SuiteResult) -> Vec<Case> {
    r.cases.into_iter().map(|c| Case { name: format!("{prefix}: {}", c.name), ..c }).collect()
}

fn names_of(vs: &[Element]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

/// For the Clifford algebra of the identity form on `2n` generators: every
/// joint eigenclass of the conjugations `x ↦ v_i x v_i` is spanned by exactly
/// one basis monomial, namely the one assigned by [`GradingTag::monomial`].
pub fn lemma2_1_check(n: usize) -> Result<SuiteResult> {
    if !(1..=3).contains(&n) {
        return Err(Error::SizeBound(format!("n = {n} (expected 1 ≤ n ≤ 3)")));
    }
    let q = Characteristic::ZERO;
    let a = clifford(&Matrix::identity(q, 2 * n))?;
    Ok(conjugation_classes("lemma2_1", &a, 2 * n))
}

/// The generator `v_i` sits at basis position `1 + i` and the monomial with
/// generator set `Y` at the position of `Y` in [`subset_basis`].
fn conjugation_classes(suite: &str, a: &Superalgebra, k: usize) -> SuiteResult {
    let masks = subset_basis(k);
    let mats: Result<Vec<Matrix>> = (0..k).map(|i| conjugation_matrix(&Element::basis(a, 1 + i))).collect();
    let parts = match mats.and_then(|m| joint_eigenspaces(a, &m)) {
        Ok(p) => p,
        Err(e) => return SuiteResult::new(suite, vec![Case::fail("eigenclasses exhaust the algebra", e.to_string())]),
    };
    let mut cases = vec![Case::pass("eigenclasses exhaust the algebra")];
    for tag in GradingTag::all(k) {
        let name = format!("class {tag}");
        let s = &parts[&tag];
        let mask = tag.monomial().iter().fold(0u32, |m, &i| m | 1 << i);
        let idx = masks.iter().position(|&m| m == mask).expect("every mask is listed");
        let expected = Element::basis(a, idx);
        if s.dim() != 1 {
            cases.push(Case::fail(name, format!("class has dimension {}", s.dim())));
        } else if !s.contains(&expected) {
            cases.push(Case::fail(name, format!("class is spanned by {}, expected {}", s.basis()[0], a.name(idx))));
        } else {
            cases.push(Case::pass(name));
        }
    }
    SuiteResult::new(suite, cases)
}

/// For `e` even idempotent acting as `½` on every odd basis vector and with
/// odd products in `Fe`, writes `xy = [x,y] e` and checks
/// `[x,y]z = [z,y]x - [z,x]y` on all odd basis triples, then that either the
/// bracket vanishes or the odd part has dimension 2.
pub fn lemma3_2_check(a: &Superalgebra, e: &Element) -> Result<SuiteResult> {
    let odd = a.odd_indices();
    bracket_hypothesis(a, e)?;
    let pivot = e.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero idempotent");
    let inv = e.coeffs()[pivot].inv().expect("nonzero");
    let bracket = |i: usize, j: usize| -> Result<Scalar> {
        let p = Element::basis(a, i).mul(&Element::basis(a, j))?;
        Ok(&p.coeffs()[pivot] * &inv)
    };
    let mut br = vec![vec![Scalar::zero(a.characteristic()); odd.len()]; odd.len()];
    for (s, &i) in odd.iter().enumerate() {
        for (t, &j) in odd.iter().enumerate() {
            br[s][t] = bracket(i, j)?;
        }
    }
    let basis = |s: usize| Element::basis(a, odd[s]);
    let mut failure = None;
    'search: for x in 0..odd.len() {
        for y in 0..odd.len() {
            for z in 0..odd.len() {
                let lhs = basis(z).scale(&br[x][y]);
                let rhs = basis(x).scale(&br[z][y]).sub(&basis(y).scale(&br[z][x]))?;
                if lhs != rhs {
                    failure = Some(format!("x={}, y={}, z={}", a.name(odd[x]), a.name(odd[y]), a.name(odd[z])));
                    break 'search;
                }
            }
        }
    }
    let identity = match failure {
        None => Case::pass("[x,y]z = [z,y]x - [z,x]y"),
        Some(w) => Case::fail("[x,y]z = [z,y]x - [z,x]y", w),
    };
    let zero_bracket = br.iter().flatten().all(Scalar::is_zero);
    let dichotomy = if zero_bracket || odd.len() == 2 {
        Case::pass("[M,M] = 0 or dim M = 2")
    } else {
        Case::fail("[M,M] = 0 or dim M = 2", format!("dim M = {} with a nonzero bracket", odd.len()))
    };
    Ok(SuiteResult::new("lemma3_2", vec![identity, dichotomy]))
}

fn bracket_hypothesis(a: &Superalgebra, e: &Element) -> Result<()> {
    if e.algebra() != a {
        return Err(Error::MismatchedParents);
    }
    if e.is_zero() || e.parity() != Some(Parity::Even) {
        return Err(Error::NotEven);
    }
    if &e.mul(e)? != e {
        return Err(Error::NotIdempotent);
    }
    let half = Scalar::half(a.characteristic());
    let line = Subspace::spanned(a, std::slice::from_ref(e))?;
    for &i in &a.odd_indices() {
        let x = Element::basis(a, i);
        if e.mul(&x)? != x.scale(&half) {
            return Err(Error::Precondition(format!("e·{} ≠ ½{}", a.name(i), a.name(i))));
        }
        for &j in &a.odd_indices() {
            if !line.contains(&x.mul(&Element::basis(a, j))?) {
                return Err(Error::Precondition(format!("{}·{} is not a multiple of e", a.name(i), a.name(j))));
            }
        }
    }
    Ok(())
}

/// Every catalog algebra and every even basis vector or idempotent that
/// satisfies the bracket hypothesis.
pub fn lemma3_2_sweep() -> Result<SuiteResult> {
    let mut cases = Vec::new();
    let mut instances = catalog()?;
    instances.push(CatalogEntry { name: "Fe+M, zero bracket, dim M = 5".into(), algebra: zero_bracket_algebra(5) });
    for entry in instances {
        let a = &entry.algebra;
        let mut candidates: Vec<Element> = a.even_indices().into_iter().map(|i| Element::basis(a, i)).collect();
        candidates.extend(idempotent_pairs(a).into_iter().map(|(e, _)| e));
        if let Some(u) = a.identity_element() {
            candidates.push(u);
        }
        let mut seen = Vec::new();
        for e in candidates {
            if seen.contains(&e) || bracket_hypothesis(a, &e).is_err() {
                continue;
            }
            let r = lemma3_2_check(a, &e)?;
            cases.extend(prefixed(&format!("{}, e = {e}", entry.name), r));
            seen.push(e);
        }
    }
    Ok(SuiteResult::new("lemma3_2", cases))
}

/// `Fe + M` with `e² = e`, `ex = xe = x/2` and `M·M = 0`.
pub fn zero_bracket_algebra(m: usize) -> Superalgebra {
    let q = Characteristic::ZERO;
    let half = Scalar::half(q);
    let mut b = crate::algebra::TableBuilder::new(q);
    b.add(0, 0, 0, Scalar::one(q));
    for i in 1..=m {
        b.add(0, i, i, half.clone());
        b.add(i, 0, i, half.clone());
    }
    let mut parity = vec![Parity::Even];
    parity.extend(std::iter::repeat_n(Parity::Odd, m));
    let mut names = vec!["e".to_string()];
    names.extend((1..=m).map(|i| format!("x{i}")));
    b.build(parity, names).expect("valid table")
}

fn triple_span_failure(
    xs: &PeirceComponent,
    ys: &PeirceComponent,
    target: Option<&PeirceComponent>,
) -> Result<Option<String>> {
    let total = target.map(|t| t.total());
    for x in xs.basis() {
        for y in ys.basis() {
            for z in xs.basis() {
                let t = triple(&x, &y, &z)?;
                let ok = match &total {
                    Some(s) => s.contains(&t),
                    None => t.is_zero(),
                };
                if !ok {
                    return Ok(Some(format!("{{{x}, {y}, {z}}} = {t}")));
                }
            }
        }
    }
    Ok(None)
}

/// For every ordered pair of orthogonal idempotents `(e, f)` with `e + f`
/// the unit: `{A_ef, A_ff, A_ef} ⊆ A_ee` and `{A_ff, A_ef, A_ff} = 0`, where
/// `A_ef` is the joint `½` component and so on.
pub fn peirce_inclusion_check(a: &Superalgebra) -> SuiteResult {
    let suite = "peirce_inclusion";
    let jordan = check_jordan_super(a);
    let mut cases = vec![Case::from_report("Jordan superalgebra", &jordan)];
    let pairs = idempotent_pairs(a);
    if pairs.is_empty() {
        cases.push(Case::pass("skipped: no orthogonal idempotent pair"));
        return SuiteResult::new(suite, cases);
    }
    for (e, f) in pairs {
        let label = format!("e = {e}, f = {f}");
        let pp = match peirce_pair(a, &e, &f) {
            Ok(pp) => pp,
            Err(err) => {
                cases.push(Case::fail(format!("{label}: decomposition"), err.to_string()));
                continue;
            }
        };
        cases.push(Case::from_result(
            format!("{label}: {{A_ef, A_ff, A_ef}} in A_ee"),
            triple_span_failure(&pp.ef, &pp.ff, Some(&pp.ee)),
        ));
        cases.push(Case::from_result(
            format!("{label}: {{A_ff, A_ef, A_ff}} = 0"),
            triple_span_failure(&pp.ff, &pp.ef, None),
        ));
    }
    SuiteResult::new(suite, cases)
}

fn peirce_instances() -> Result<Vec<CatalogEntry>> {
    let q = Characteristic::ZERO;
    let mut out = Vec::new();
    for (n, d) in [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2)] {
        let t = Scalar::frac(q, n, d)?;
        out.push(CatalogEntry { name: format!("D_t(t={t})"), algebra: d_t(&t) });
    }
    for entry in catalog()? {
        if entry.name == "M(1|1)+" || entry.name == "Josp(1|2)" {
            out.push(entry);
        }
    }
    Ok(out)
}

/// `D_t` is simple exactly when `t ≠ 0`; for `t = 0` the witness ideal is
/// three-dimensional and contains `e1`.
pub fn d_t_simplicity_sweep(ts: &[Scalar]) -> SuiteResult {
    let cases = ts.iter().map(|t| (format!("t = {t}"), d_t(t), !t.is_zero())).collect::<Vec<_>>();
    simplicity_cases("d_t_simplicity", &cases)
}

fn simplicity_cases(suite: &str, cases: &[(String, Superalgebra, bool)]) -> SuiteResult {
    let out = Exec::default().map(cases, |(name, a, expect)| {
        let r = is_simple(a).map(|s| {
            if s.simple != *expect {
                return Some(format!("simple = {}, expected {expect} ({})", s.simple, s.reason));
            }
            if s.simple {
                return None;
            }
            let e1 = Element::basis(a, 0);
            match &s.witness_ideal {
                Some(w) if w.dim() == 3 && w.contains(&e1) => None,
                Some(w) => Some(format!("witness ideal {w:?} is not a 3-dimensional ideal containing {}", a.name(0))),
                None => Some("no witness ideal".into()),
            }
        });
        Case::from_result(name.clone(), r)
    });
    SuiteResult::new(suite, out)
}

const SWEEP_IDENTITIES: [Identity; 4] =
    [Identity::SuperCommutative, Identity::JordanSuper, Identity::OperatorIdentity, Identity::DSquare];

/// Supercommutativity, the super Jordan identity, the operator identity and
/// `D(a², x) = 2 D(a, ax)` on every catalog algebra.
pub fn catalog_identity_sweep() -> Result<SuiteResult> {
    Ok(identity_sweep("catalog_identity_sweep", &catalog()?))
}

pub fn identity_sweep(suite: &str, entries: &[CatalogEntry]) -> SuiteResult {
    let jobs: Vec<(usize, Identity)> =
        (0..entries.len()).flat_map(|i| SWEEP_IDENTITIES.iter().map(move |&id| (i, id))).collect();
    // Each check parallelizes internally.
    let cases = jobs
        .iter()
        .map(|&(i, id)| {
            Case::from_report(
                format!("{}: {}", entries[i].name, id.name()),
                &id.check(&entries[i].algebra, Exec::default()),
            )
        })
        .collect();
    SuiteResult::new(suite, cases)
}

/// The super Jordan identity on `A` passes exactly when the Grassmann
/// envelope on `m` generators is a Jordan algebra.
pub fn envelope_agreement_check(a: &Superalgebra, m: usize) -> Result<SuiteResult> {
    if a.characteristic().get() == 3 {
        return Err(Error::Precondition("the envelope comparison needs characteristic other than 3".into()));
    }
    Ok(envelope_agreement(a, &grassmann_envelope(a, m)?))
}

fn envelope_agreement(a: &Superalgebra, env: &Superalgebra) -> SuiteResult {
    let sup = check_jordan_super(a);
    let ord = check_jordan_ordinary(env, Exec::default());
    let case = if sup.passed() == ord.passed() {
        Case::pass(format!("agree (both {})", if sup.passed() { "pass" } else { "fail" }))
    } else {
        Case::fail("agree", format!("super check: {sup}; envelope check: {ord}"))
    };
    SuiteResult::new("envelope_agreement", vec![case])
}

fn envelope_instances() -> Vec<(String, Superalgebra)> {
    let q = Characteristic::ZERO;
    vec![
        ("K3".into(), k3(q)),
        ("D_1".into(), d_t(&Scalar::one(q))),
        ("non-Jordan control".into(), crate::construct::non_jordan_control(q)),
    ]
}

/// `S_d(x_1..x_d)` evaluated with the algebra product, nesting to the right.
fn standard_in_algebra(a: &Superalgebra, xs: &[Element]) -> Result<Element> {
    let d = xs.len();
    if d > crate::analysis::MAX_DEGREE {
        return Err(Error::SizeBound(format!("degree {d}")));
    }
    if d == 0 {
        return a.identity_element().ok_or_else(|| Error::Precondition("S_0 needs a unit".into()));
    }
    let mut f: Vec<Option<Element>> = vec![None; 1 << d];
    for t in 1usize..(1 << d) {
        let mut acc = Element::zero(a);
        for i in 0..d {
            if t >> i & 1 == 0 {
                continue;
            }
            let rest = t & !(1 << i);
            let term =
                if rest == 0 { xs[i].clone() } else { xs[i].mul(f[rest].as_ref().expect("smaller subsets first"))? };
            let below = (t & ((1 << i) - 1)).count_ones();
            acc = if below % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
        }
        f[t] = Some(acc);
    }
    Ok(f[(1 << d) - 1].take().expect("computed"))
}

/// A random rational with numerator in `[-9, 9]` and denominator in `[1, 9]`.
pub fn random_scalar(rng: &mut ChaCha8Rng, ch: Characteristic) -> Scalar {
    let n: i64 = rng.random_range(-9..=9);
    let d: i64 = rng.random_range(1..=9);
    Scalar::frac(ch, n, d).unwrap_or_else(|_| Scalar::from_int(ch, n))
}

fn random_element(rng: &mut ChaCha8Rng, a: &Superalgebra) -> Element {
    let coeffs = (0..a.dim()).map(|_| random_scalar(rng, a.characteristic())).collect();
    Element::new(a, coeffs).expect("length matches")
}

/// `S_2k` vanishes on `trials` seeded random tuples of `k × k` matrices and
/// `S_{2k-2}` does not vanish on the staircase `E12, E22, E23, …, Ekk`.
pub fn amitsur_levitzki_check(k: usize, trials: usize, seed: u64) -> Result<SuiteResult> {
    if !(1..=3).contains(&k) {
        return Err(Error::SizeBound(format!("k = {k} (expected 1 ≤ k ≤ 3)")));
    }
    if trials > 1000 {
        return Err(Error::SizeBound(format!("{trials} trials (at most 1000)")));
    }
    let a = matrix_super(Characteristic::ZERO, k, 0)?;
    amitsur_levitzki_on(&a, k, trials, seed)
}

/// As [`amitsur_levitzki_check`] on a given algebra whose basis contains the
/// matrix units `Eij`.
pub fn amitsur_levitzki_on(a: &Superalgebra, k: usize, trials: usize, seed: u64) -> Result<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failure = None;
    for trial in 0..trials {
        let xs: Vec<Element> = (0..2 * k).map(|_| random_element(&mut rng, a)).collect();
        let s = standard_in_algebra(a, &xs)?;
        if failure.is_none() && !s.is_zero() {
            failure = Some(format!("trial {trial}: S_{} = {s} on [{}]", 2 * k, names_of(&xs)));
        }
    }
    let vanish = format!("k={k}: S_{} vanishes on {trials} random tuples (seed {seed})", 2 * k);
    let mut cases = vec![match failure {
        None => Case::pass(vanish),
        Some(w) => Case::fail(vanish, w),
    }];
    let unit = |i: usize, j: usize| -> Result<Element> {
        let name = format!("E{i}{j}");
        a.index_of(&name)
            .map(|idx| Element::basis(a, idx))
            .ok_or_else(|| Error::Invalid(format!("no basis vector {name}")))
    };
    let mut stair = Vec::new();
    if k >= 2 {
        stair.push(unit(1, 2)?);
        for i in 2..=k {
            stair.push(unit(i, i)?);
            if i < k {
                stair.push(unit(i, i + 1)?);
            }
        }
    }
    let s = standard_in_algebra(a, &stair)?;
    let name = format!("k={k}: S_{} is nonzero on the staircase", 2 * k - 2);
    cases.push(if s.is_zero() { Case::fail(name, "S vanishes") } else { Case::pass(name) });
    Ok(SuiteResult::new("amitsur_levitzki", cases))
}

/// `U(v_i)² = id`, pairwise commutation, exhaustion by joint eigenspaces and
/// `J_α J_β ⊆ J_{α+β}` on basis vectors of the components.
pub fn u_grading_check(a: &Superalgebra, vs: &[Element]) -> SuiteResult {
    let suite = "u_grading";
    let mut cases = Vec::new();
    let id = Matrix::identity(a.characteristic(), a.dim());
    let ops = match vs.iter().map(u_operator).collect::<Result<Vec<_>>>() {
        Ok(o) => o,
        Err(e) => return SuiteResult::new(suite, vec![Case::fail("U operators", e.to_string())]),
    };
    for (i, u) in ops.iter().enumerate() {
        let name = format!("U(v{})² = id", i + 1);
        cases.push(if (u * u).matrix() == &id {
            Case::pass(name)
        } else {
            Case::fail(name, format!("fails for {}", vs[i]))
        });
        for (j, w) in ops.iter().enumerate().skip(i + 1) {
            let name = format!("U(v{}) U(v{}) = U(v{}) U(v{})", i + 1, j + 1, j + 1, i + 1);
            cases.push(if (u * w).matrix() == (w * u).matrix() {
                Case::pass(name)
            } else {
                Case::fail(name, "operators differ")
            });
        }
    }
    if cases.iter().any(|c| !c.passed) {
        return SuiteResult::new(suite, cases);
    }
    let g = match u_grading(a, vs) {
        Ok(g) => g,
        Err(e) => {
            cases.push(Case::fail("eigenspaces exhaust the algebra", e.to_string()));
            return SuiteResult::new(suite, cases);
        }
    };
    cases.push(Case::pass("eigenspaces exhaust the algebra"));
    let parts: Vec<(&GradingTag, Vec<Element>)> = g.parts.iter().map(|(t, s)| (t, s.basis())).collect();
    let mut failure = None;
    'search: for (ta, xs) in &parts {
        for (tb, ys) in &parts {
            let target = &g.parts[&ta.add(tb)];
            for x in xs {
                for y in ys {
                    let p = x.mul(y).expect("same parent");
                    if !target.contains(&p) {
                        failure = Some(format!("({x})({y}) = {p} is not in the {} component", ta.add(tb)));
                        break 'search;
                    }
                }
            }
        }
    }
    cases.push(match failure {
        None => Case::pass("components multiply additively"),
        Some(w) => Case::fail("components multiply additively", w),
    });
    SuiteResult::new(suite, cases)
}

fn superform_instance(m: usize, k: usize) -> Result<(String, Superalgebra)> {
    let q = Characteristic::ZERO;
    let s = superform(&Matrix::identity(q, m), &crate::construct::symplectic(q, k))?;
    Ok((format!("superform(m={m},2k={})", 2 * k), s.algebra))
}

/// Superform algebras with the first `2n` even basis vectors as orthonormal
/// vectors, `n ≤ 2`.
pub fn u_grading_sweep() -> Result<SuiteResult> {
    let mut cases = Vec::new();
    for m in 2..=5 {
        for k in 0..=2 {
            let (name, a) = superform_instance(m, k)?;
            for n in 1..=(m / 2).min(2) {
                let vs: Vec<Element> = (1..=2 * n).map(|i| Element::basis(&a, i)).collect();
                cases.extend(prefixed(&format!("{name}, n={n}"), u_grading_check(&a, &vs)));
            }
        }
    }
    Ok(SuiteResult::new("u_grading", cases))
}

fn corrupt(a: &Superalgebra, i: &str, j: &str, value: &[(&str, Scalar)]) -> Result<Superalgebra> {
    let idx = |n: &str| a.index_of(n).ok_or_else(|| Error::Invalid(format!("no basis vector {n}")));
    let v: Vec<(usize, Scalar)> = value.iter().map(|(n, c)| Ok((idx(n)?, c.clone()))).collect::<Result<_>>()?;
    a.with_product(idx(i)?, idx(j)?, &v)
}

/// Every suite run on an input with one mutated table entry. Each result is
/// expected to fail.
pub fn negative_controls(seed: u64) -> Result<Vec<SuiteResult>> {
    let q = Characteristic::ZERO;
    let one = Scalar::one(q);
    let two = Scalar::from_int(q, 2);
    let mut out = Vec::new();

    let cl = clifford(&Matrix::identity(q, 2))?;
    out.push(conjugation_classes("lemma2_1", &corrupt(&cl, "v1", "v1", &[("1", two.clone())])?, 2));

    let bad_k3 = corrupt(&k3(q), "x", "y", &[("e", two.clone())])?;
    out.push(lemma3_2_check(&bad_k3, &Element::basis(&bad_k3, 0))?);

    let mut entries = catalog()?;
    let m21 = entries.iter().find(|e| e.name == "M(2|1)+").expect("listed").algebra.clone();
    out.push(peirce_inclusion_check(&corrupt(&m21, "E12", "E12", &[("E11", one.clone())])?));

    let bad_d0 = corrupt(&d_t(&Scalar::zero(q)), "x", "y", &[("e2", one.clone())])?;
    out.push(simplicity_cases("d_t_simplicity", &[("t = 0, x·y = e2".into(), bad_d0, false)]));

    entries[0].algebra = corrupt(&entries[0].algebra, "e", "x", &[("x", one.clone())])?;
    out.push(identity_sweep("catalog_identity_sweep", &entries));

    let a = k3(q);
    let env = grassmann_envelope(&a, 2)?;
    let bad_env = env.with_product(0, 0, &[(0, two.clone())])?;
    out.push(envelope_agreement(&a, &bad_env));

    let m2 = matrix_super(q, 2, 0)?;
    out.push(amitsur_levitzki_on(&corrupt(&m2, "E11", "E11", &[])?, 2, 20, seed)?);

    let (_, sf) = superform_instance(2, 0)?;
    let bad_sf = corrupt(&sf, "v1", "v1", &[("1", two)])?;
    let vs: Vec<Element> = (1..=2).map(|i| Element::basis(&bad_sf, i)).collect();
    out.push(u_grading_check(&bad_sf, &vs));
    Ok(out)
}
