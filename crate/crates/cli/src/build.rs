use superalg::construct::{
    clifford, d_t, fixed_points, grassmann, grassmann_envelope, k3, kantor_double, matrix_super, osp_superinvolution,
    poisson_bracket_grassmann, superform, symplectic, transpose_superinvolution, truncated_poly,
    truncated_poly_partial, twisted_double, vector_bracket, Bracket, SecondaryGrading,
};
use superalg::extend::{adjoin_sqrt1, plus_algebra};
use superalg::json::{algebra_from_json, algebra_to_json, bracket_to_json};
use superalg::linalg::Matrix;
use superalg::{Characteristic, Superalgebra};

use crate::parse;
use crate::BuildArgs;

pub const NAMES: [&str; 15] = [
    "grassmann",
    "clifford",
    "superform",
    "k3",
    "dt",
    "matrix",
    "o_n",
    "kantor",
    "twisted",
    "envelope",
    "plus",
    "sqrt1",
    "jp",
    "josp",
    "poisson_bracket",
];

fn allowed(name: &str) -> &'static [&'static str] {
    match name {
        "grassmann" | "o_n" | "jp" | "twisted" | "poisson_bracket" => &["n"],
        "clifford" => &["n", "gram"],
        "superform" => &["m", "k", "gram", "skew"],
        "k3" => &[],
        "dt" => &["t"],
        "matrix" | "josp" => &["m", "n", "k"],
        "kantor" => &["n", "bracket", "var"],
        "envelope" => &["input", "m"],
        "plus" | "sqrt1" => &["input"],
        _ => &[],
    }
}

fn given(args: &BuildArgs) -> Vec<&'static str> {
    let mut out = Vec::new();
    let flags: [(&'static str, bool); 9] = [
        ("n", args.n.is_some()),
        ("m", args.m.is_some()),
        ("k", args.k.is_some()),
        ("t", args.t.is_some()),
        ("gram", args.gram.is_some()),
        ("skew", args.skew.is_some()),
        ("input", args.input.is_some()),
        ("bracket", args.bracket.is_some()),
        ("var", args.var.is_some()),
    ];
    for (name, present) in flags {
        if present {
            out.push(name);
        }
    }
    out
}

/// Validates the parameter set for `name` before any construction.
pub fn check_params(args: &BuildArgs) -> Result<(), String> {
    if !NAMES.contains(&args.name.as_str()) {
        return Err(format!("unknown constructor {:?}; expected one of {}", args.name, NAMES.join(", ")));
    }
    let ok = allowed(&args.name);
    for p in given(args) {
        if !ok.contains(&p) {
            return Err(format!("parameter --{p} does not apply to {}", args.name));
        }
    }
    Ok(())
}

fn need<T: Copy>(v: Option<T>, flag: &str, name: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("{name} needs --{flag}"))
}

fn read_input(args: &BuildArgs) -> Result<Superalgebra, String> {
    let path = args.input.as_deref().ok_or_else(|| format!("{} needs --input", args.name))?;
    let text = crate::read_source(path)?;
    algebra_from_json(&text).map_err(|e| format!("{path}: {e}"))
}

/// The JSON document for `build`.
pub fn build(args: &BuildArgs, ch: Characteristic) -> Result<String, String> {
    check_params(args)?;
    let e = |err: superalg::Error| err.to_string();
    let name = args.name.as_str();
    let alg: Superalgebra = match name {
        "grassmann" => grassmann(ch, need(args.n, "n", name)?).map_err(e)?,
        "clifford" => {
            let gram = match (&args.gram, args.n) {
                (Some(g), None) => parse::matrix(ch, g)?,
                (None, Some(n)) => Matrix::identity(ch, n),
                _ => return Err("clifford needs exactly one of --gram or --n".into()),
            };
            clifford(&gram).map_err(e)?
        }
        "superform" => {
            let gram = match (&args.gram, args.m) {
                (Some(g), None) => parse::matrix(ch, g)?,
                (None, m) => Matrix::identity(ch, m.unwrap_or(0)),
                _ => return Err("superform takes --gram or --m, not both".into()),
            };
            let skew = match (&args.skew, args.k) {
                (Some(s), None) => parse::matrix(ch, s)?,
                (None, k) => symplectic(ch, k.unwrap_or(0)),
                _ => return Err("superform takes --skew or --k, not both".into()),
            };
            superform(&gram, &skew).map_err(e)?.algebra
        }
        "k3" => k3(ch),
        "dt" => d_t(&parse::scalar(ch, need(args.t.as_deref(), "t", name)?)?),
        "matrix" => {
            if args.k.is_some() {
                return Err("matrix takes --m and --n".into());
            }
            matrix_super(ch, need(args.m, "m", name)?, args.n.unwrap_or(0)).map_err(e)?
        }
        "o_n" => truncated_poly(ch, need(args.n, "n", name)?).map_err(e)?,
        "kantor" => {
            let n = need(args.n, "n", name)?;
            let br = match args.bracket.as_deref().unwrap_or("poisson") {
                "poisson" => poisson_bracket_grassmann(ch, n).map_err(e)?,
                "vector" => {
                    vector_bracket(&truncated_poly_partial(ch, n, args.var.unwrap_or(0)).map_err(e)?).map_err(e)?
                }
                other => return Err(format!("unknown bracket {other:?}; expected poisson or vector")),
            };
            kantor_double(&br).map_err(e)?
        }
        "twisted" => {
            let n = need(args.n, "n", name)?;
            let br: Bracket = poisson_bracket_grassmann(ch, n).map_err(e)?;
            let g = grassmann(ch, n).map_err(e)?;
            let degree = g.parities().iter().map(|p| p.bit()).collect();
            twisted_double(&br, &SecondaryGrading::new(&g, degree).map_err(e)?).map_err(e)?
        }
        "envelope" => grassmann_envelope(&read_input(args)?, need(args.m, "m", name)?).map_err(e)?,
        "plus" => plus_algebra(&read_input(args)?).map_err(e)?,
        "sqrt1" => adjoin_sqrt1(&read_input(args)?).map_err(e)?,
        "jp" => fixed_points(&transpose_superinvolution(ch, need(args.n, "n", name)?).map_err(e)?.0).map_err(e)?,
        "josp" => {
            if args.n.is_some() {
                return Err("josp takes --m and --k".into());
            }
            fixed_points(&osp_superinvolution(ch, need(args.m, "m", name)?, need(args.k, "k", name)?).map_err(e)?)
                .map_err(e)?
        }
        "poisson_bracket" => {
            return Ok(bracket_to_json(&poisson_bracket_grassmann(ch, need(args.n, "n", name)?).map_err(e)?))
        }
        _ => unreachable!("checked above"),
    };
    Ok(algebra_to_json(&alg))
}
