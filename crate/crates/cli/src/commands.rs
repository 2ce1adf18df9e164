use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rlk::dialgebra::{
    check_commutative_diagram, check_lemdias_basis, check_operator_condition, dialgebra_from_operator, dleib_with,
    matrix_dialgebra, Dialgebra,
};
use rlk::document::ReportDocument;
use rlk::envelope::{ulp_relations_check, ulp_truncated_with, LeibnizModule, SignConvention};
use rlk::free::{check_ud_unit, free_assoc, free_dias, free_zinbiel, truncated_ideal_quotient, ud_p};
use rlk::identities::{
    check_associative, check_dias, check_dleib_jacobson_random, check_leibniz, check_lie, check_prelie,
    check_restricted_leibniz, check_restricted_lie, check_restricted_prelie, check_zinbiel,
};
use rlk::linalg::Matrix;
use rlk::prelie::{check_corollary_with, check_tensor_restricted, prelie_to_lie, tensor_prelie};
use rlk::{fixtures, format, Algebra, CheckReport, PrimeField, SweepConfig};
use thiserror::Error;

use crate::{
    CheckArgs, Construction, DeriveArgs, EnvelopeArgs, FixtureArgs, FixtureName, Format, FreeArgs, FreeKindArg,
    GlobalArgs, Signs, Which,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: rlk::Error },
    #[error("{}", describe(.0))]
    Core(#[from] rlk::Error),
}

fn describe(e: &rlk::Error) -> String {
    match e {
        rlk::Error::Precondition(r) => format!("precondition failed: {}", r.summary()),
        other => other.to_string(),
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Identity names accepted by `check`, with the default operation.
pub const IDENTITIES: [(&str, &str); 12] = [
    ("leibniz", "bracket"),
    ("restricted-leibniz", "bracket"),
    ("lie", "lie|bracket"),
    ("restricted-lie", "lie|bracket"),
    ("associative", "assoc"),
    ("commutative-diagram", "assoc"),
    ("dias", "left,right"),
    ("lemdias", "left,right"),
    ("dleib-jacobson", "left,right"),
    ("zinbiel", "zinbiel"),
    ("prelie", "prelie"),
    ("restricted-prelie", "prelie"),
];

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> Result<(String, Algebra)> {
    let text = read(path)?;
    let alg = format::parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    Ok((text, alg))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn label(alg: &Algebra) -> String {
    if alg.label().is_empty() {
        "input".into()
    } else {
        alg.label().to_string()
    }
}

/// `--pmap`, else `p` if present, else the only p-map.
fn resolve_pmap(alg: &Algebra, given: Option<&str>) -> Result<String> {
    if let Some(name) = given {
        alg.pmap(name)?;
        return Ok(name.to_string());
    }
    let names: Vec<&str> = alg.pmaps().map(|(n, _)| n).collect();
    if names.contains(&"p") {
        return Ok("p".into());
    }
    match names.as_slice() {
        [one] => Ok(one.to_string()),
        [] => Err(CliError::Usage("the algebra declares no p-map".into())),
        many => Err(CliError::Usage(format!(
            "several p-maps declared ({}); choose one with --pmap",
            many.join(", ")
        ))),
    }
}

fn resolve_op(alg: &Algebra, given: Option<&str>, default: &str) -> Result<String> {
    if let Some(op) = given {
        if op.trim().is_empty() {
            return Err(CliError::Usage("empty op name".into()));
        }
        return Ok(op.to_string());
    }
    let found = default.split('|').find(|name| alg.has_op(name));
    Ok(found
        .unwrap_or(default.split('|').next_back().unwrap_or(default))
        .to_string())
}

/// Runs a check, turning precondition failures into the failing report.
fn recorded(r: rlk::Result<CheckReport>) -> Result<CheckReport> {
    match r {
        Ok(report) => Ok(report),
        Err(rlk::Error::Precondition(report)) => Ok(*report),
        Err(e) => Err(e.into()),
    }
}

fn as_dialgebra(alg: &Algebra, op: Option<&str>) -> rlk::Result<Dialgebra> {
    if op.is_none() && alg.has_op("left") && alg.has_op("right") {
        Dialgebra::new(alg.clone())
    } else {
        Dialgebra::associative(alg, op.unwrap_or("assoc"))
    }
}

fn run_identity(alg: &Algebra, id: &str, args: &CheckArgs, cfg: &SweepConfig) -> Result<CheckReport> {
    let default = IDENTITIES
        .iter()
        .find(|(n, _)| *n == id)
        .map(|(_, d)| *d)
        .expect("names validated");
    let op = args.op.as_deref();
    let one = |d| resolve_op(alg, op, d);
    let pmap = || resolve_pmap(alg, args.pmap.as_deref());
    match id {
        "leibniz" => recorded(check_leibniz(alg, &one(default)?, cfg)),
        "restricted-leibniz" => recorded(check_restricted_leibniz(alg, &one(default)?, &pmap()?, cfg)),
        "lie" => recorded(check_lie(alg, &one(default)?, cfg)),
        "restricted-lie" => recorded(check_restricted_lie(alg, &one(default)?, &pmap()?, cfg)),
        "associative" => recorded(check_associative(alg, &one(default)?, cfg)),
        "commutative-diagram" => recorded(check_commutative_diagram(alg, &one(default)?, cfg)),
        "zinbiel" => recorded(check_zinbiel(alg, &one(default)?, cfg)),
        "prelie" => recorded(check_prelie(alg, &one(default)?, cfg)),
        "restricted-prelie" => recorded(check_restricted_prelie(alg, &one(default)?, &pmap()?, cfg)),
        "dias" => recorded(check_dias(alg, "left", "right", cfg)),
        "lemdias" => recorded(as_dialgebra(alg, op).map(|d| check_lemdias_basis(&d, args.max_power))),
        "dleib-jacobson" => {
            recorded(as_dialgebra(alg, op).map(|d| check_dleib_jacobson_random(&d, cfg.samples, cfg.seed)))
        }
        _ => unreachable!("names validated"),
    }
}

fn emit(doc: &mut ReportDocument, g: &GlobalArgs, start: Instant, to_stderr: bool) -> u8 {
    if g.timing {
        doc.wall_clock_ms = Some(start.elapsed().as_millis() as u64);
    }
    let text = match g.format {
        Format::Text => doc.to_text(),
        Format::Json => doc.to_json() + "\n",
    };
    if to_stderr {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    doc.exit_code() as u8
}

pub fn check(g: &GlobalArgs, args: &CheckArgs) -> Result<u8> {
    if args.list {
        for (name, op) in IDENTITIES {
            println!("{name:<22} default op: {op}");
        }
        return Ok(0);
    }
    let start = Instant::now();
    if args.identities.is_empty() {
        return Err(CliError::Usage("no identities given; see --list".into()));
    }
    let unknown: Vec<&str> = args
        .identities
        .iter()
        .map(String::as_str)
        .filter(|id| !IDENTITIES.iter().any(|(n, _)| n == id))
        .collect();
    if !unknown.is_empty() {
        let known: Vec<&str> = IDENTITIES.iter().map(|(n, _)| *n).collect();
        return Err(CliError::Usage(format!(
            "unknown identities: {}; available: {}",
            unknown.join(", "),
            known.join(", ")
        )));
    }
    if args.op.as_deref().is_some_and(|op| op.trim().is_empty()) {
        return Err(CliError::Usage("empty op name".into()));
    }
    let (text, alg) = load(&args.file)?;
    let cfg = g.sweep();
    let mut doc = ReportDocument::new(format!("check {}", args.identities.join(" ")), &[text.as_bytes()], &cfg);
    let target = label(&alg);
    for id in &args.identities {
        let report = run_identity(&alg, id, args, &cfg)?;
        doc.push_check(format!("{target}: {id}"), report);
    }
    Ok(emit(&mut doc, g, start, false))
}

fn parse_matrix(field: PrimeField, spec: &str) -> Result<Matrix> {
    let rows = spec
        .split(';')
        .map(|row| {
            row.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|w| !w.is_empty())
                .map(|w| {
                    w.parse::<i64>()
                        .map(|v| v.rem_euclid(field.p() as i64) as u64)
                        .map_err(|_| CliError::Usage(format!("bad matrix entry `{w}`")))
                })
                .collect::<Result<Vec<u64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(field, &rows)?)
}

pub fn derive(g: &GlobalArgs, args: &DeriveArgs) -> Result<u8> {
    let start = Instant::now();
    let (text, alg) = load(&args.file)?;
    let cfg = g.sweep();
    let op = args.op.as_deref();
    if op.is_some_and(|o| o.trim().is_empty()) {
        return Err(CliError::Usage("empty op name".into()));
    }
    let mut inputs = vec![text.into_bytes()];
    let mut reports: Vec<(String, CheckReport)> = Vec::new();
    let (name, out) = match args.construction {
        Construction::Dleib => {
            let d = as_dialgebra(&alg, op)?;
            let (out, rs) = dleib_with(&d, &cfg)?;
            reports.extend(rs.into_iter().map(|r| (r.identity.clone(), r)));
            ("dleib", out)
        }
        Construction::Gln => {
            let d = matrix_dialgebra(&as_dialgebra(&alg, op)?, args.n)?;
            reports.push(("dias".into(), check_dias(d.algebra(), "left", "right", &cfg)?));
            ("gln", d.into_algebra())
        }
        Construction::OperatorDialgebra => {
            let spec = args
                .matrix
                .as_deref()
                .ok_or_else(|| CliError::Usage("operator-dialgebra needs --matrix".into()))?;
            let m = parse_matrix(alg.field(), spec)?;
            let aop = op.unwrap_or("assoc");
            inputs.push(spec.as_bytes().to_vec());
            let d = dialgebra_from_operator(&alg, aop, &m)?;
            reports.push(("operator-condition".into(), check_operator_condition(&alg, aop, &m)?));
            reports.push(("dias".into(), check_dias(d.algebra(), "left", "right", &cfg)?));
            ("operator-dialgebra", d.into_algebra())
        }
        Construction::TensorPrelie => {
            let with = args
                .with
                .as_deref()
                .ok_or_else(|| CliError::Usage("tensor-prelie needs --with <zinbiel file>".into()))?;
            let (rtext, r) = load(with)?;
            inputs.push(rtext.into_bytes());
            let t = tensor_prelie(&alg, op.unwrap_or("bracket"), &r, "zinbiel")?;
            reports.push(("prelie".into(), check_prelie(t.product(), "prelie", &cfg)?));
            reports.push(("tensor-restricted".into(), check_tensor_restricted(&t, &cfg)?));
            reports.push(("corollary".into(), check_corollary_with(&t, "prelie_power", &cfg)?));
            ("tensor-prelie", t.into_product())
        }
        Construction::Antisymmetrize => {
            let out = prelie_to_lie(&alg, op.unwrap_or("prelie"))?;
            reports.push(("lie".into(), check_lie(&out, "lie", &cfg)?));
            ("antisymmetrize", out)
        }
    };
    let refs: Vec<&[u8]> = inputs.iter().map(Vec::as_slice).collect();
    let mut doc = ReportDocument::new(format!("derive {name}"), &refs, &cfg);
    let target = label(&out);
    for (id, r) in reports {
        doc.push_check(format!("{target}: {id}"), r);
    }
    let printed = format::print(&out);
    match &args.out {
        Some(path) => {
            write(path, &printed)?;
            Ok(emit(&mut doc, g, start, false))
        }
        None => {
            print!("{printed}");
            Ok(emit(&mut doc, g, start, true))
        }
    }
}

pub fn envelope(g: &GlobalArgs, args: &EnvelopeArgs) -> Result<u8> {
    let start = Instant::now();
    let (text, alg) = load(&args.file)?;
    let cfg = g.sweep();
    let pmap = resolve_pmap(&alg, args.pmap.as_deref())?;
    let bracket = args.bracket.as_str();
    let d = args.degree;
    let target = label(&alg);
    let which = match args.which {
        Which::Ud => "ud",
        Which::Ul => "ul",
    };
    let mut doc = ReportDocument::new(format!("envelope {which} --degree {d}"), &[text.as_bytes()], &cfg);
    match args.which {
        Which::Ud => {
            let q = ud_p(&alg, bracket, &pmap, d, &cfg)?;
            doc.push_quotient(q.summary(format!("Ud_p({target})")));
            doc.push_check(
                format!("{target}: ud-unit"),
                check_ud_unit(&alg, bracket, &pmap, d, &cfg)?,
            );
        }
        Which::Ul => {
            let conv = match args.signs {
                Signs::Derived => SignConvention::Derived,
                Signs::Printed => SignConvention::Printed,
            };
            let q = ulp_truncated_with(&alg, bracket, &pmap, d, conv, &cfg)?;
            doc.push_quotient(q.summary(format!("UL_p({target})")));
            let m = LeibnizModule::adjoint(&alg, bracket)?;
            let r = recorded(ulp_relations_check(&alg, bracket, &pmap, &m, conv, &cfg))?;
            doc.push_check(format!("{target}: adjoint module"), r);
        }
    }
    Ok(emit(&mut doc, g, start, false))
}

pub fn free(g: &GlobalArgs, args: &FreeArgs) -> Result<u8> {
    let start = Instant::now();
    let field = PrimeField::new(args.p)?;
    let cfg = g.sweep();
    let (kind, ambient) = match args.kind {
        FreeKindArg::Dias => ("dias", free_dias(field, args.generators, args.degree)?),
        FreeKindArg::Zinbiel => ("zinbiel", free_zinbiel(field, args.generators, args.degree)?),
        FreeKindArg::Assoc => ("assoc", free_assoc(field, args.generators, args.degree)?),
    };
    let spec = format!(
        "{kind} p={} generators={} degree={}",
        args.p, args.generators, args.degree
    );
    let mut doc = ReportDocument::new(format!("free {kind}"), &[spec.as_bytes()], &cfg);
    let alg = ambient.algebra();
    let report = match args.kind {
        FreeKindArg::Dias => check_dias(alg, "left", "right", &cfg)?,
        FreeKindArg::Zinbiel => check_zinbiel(alg, "zinbiel", &cfg)?,
        FreeKindArg::Assoc => check_associative(alg, "assoc", &cfg)?,
    };
    doc.push_check(format!("free {kind}: axioms"), report);
    let q = truncated_ideal_quotient(&ambient, &[])?;
    doc.push_quotient(q.summary(format!("free {kind}")));
    if let Some(path) = &args.out {
        write(path, &format::print(alg))?;
    }
    Ok(emit(&mut doc, g, start, false))
}

pub fn fixture(args: &FixtureArgs) -> Result<u8> {
    PrimeField::new(args.p)?;
    let p = args.p;
    let alg = match args.name {
        FixtureName::L2 => fixtures::l2(p),
        FixtureName::Abelian => fixtures::abelian(p, args.size),
        FixtureName::Broken => fixtures::broken(p),
        FixtureName::DualNumbers => fixtures::truncated_polynomials(p, 2),
        FixtureName::Mat2 => fixtures::matrix_algebra(p, 2),
        FixtureName::UpperTriangular => fixtures::upper_triangular(p),
        FixtureName::Zinbiel => free_zinbiel(PrimeField::new(p)?, 1, args.size.max(1))?.to_algebra(),
    };
    print!("{}", format::print(&alg));
    Ok(0)
}
