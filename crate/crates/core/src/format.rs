//! Plain-text algebra files.
//!
//! ```text
//! # comment
//! p=3 dim=2
//! label L2
//! degrees 3: 1 1
//! op bracket:
//! 0 1 0 1
//! pmap zero zero
//! pmap frob right_power bracket
//! pmap t tensor_formula prelie 2 3
//! pmap p table:
//! 0 0
//! …one row per element, p^dim rows in enumeration order
//! pmap b basis_jacobson lie:
//! …one row per basis element
//! ```
//!
//! Op lines are `i j k value`; values are reduced mod p and duplicate
//! `(i, j, k)` entries are rejected.

use std::fmt::Write as _;

use crate::algebra::{Algebra, BilinearOp, Element, Grading, PMap};
use crate::error::{Error, Result};
use crate::scalars::PrimeField;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Reattaches a line number to errors raised while assembling a block.
fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => parse_err(line, other.to_string()),
    }
}

enum Block {
    Op {
        line: usize,
        name: String,
        triples: Vec<(usize, usize, usize, u64)>,
    },
    Rows {
        line: usize,
        name: String,
        kind: RowKind,
        rows: Vec<Element>,
    },
}

#[derive(Clone)]
enum RowKind {
    Table,
    Jacobson(String),
}

struct Parser {
    field: PrimeField,
    dim: usize,
    alg: Algebra,
    block: Option<Block>,
}

impl Parser {
    fn close(&mut self) -> Result<()> {
        let Some(block) = self.block.take() else {
            return Ok(());
        };
        let alg = std::mem::replace(&mut self.alg, Algebra::new(self.field, 0));
        self.alg = match block {
            Block::Op { line, name, triples } => {
                if alg.has_op(&name) {
                    return Err(parse_err(line, format!("duplicate op `{name}`")));
                }
                let op = BilinearOp::from_triples(self.dim, self.field, &triples).map_err(|e| at_line(line, e))?;
                alg.with_op(&name, op).map_err(|e| at_line(line, e))?
            }
            Block::Rows { line, name, kind, rows } => {
                let pmap = match kind {
                    RowKind::Table => PMap::Table(rows),
                    RowKind::Jacobson(op) => PMap::BasisJacobson { op, values: rows },
                };
                self.attach(alg, line, &name, pmap)?
            }
        };
        Ok(())
    }

    fn attach(&self, alg: Algebra, line: usize, name: &str, pmap: PMap) -> Result<Algebra> {
        if alg.pmaps().any(|(n, _)| n == name) {
            return Err(parse_err(line, format!("duplicate p-map `{name}`")));
        }
        alg.with_pmap(name, pmap).map_err(|e| at_line(line, e))
    }

    fn numbers(&self, line: usize, words: &[&str]) -> Result<Vec<u64>> {
        words
            .iter()
            .map(|w| {
                w.parse::<i64>()
                    .map(|v| v.rem_euclid(self.field.p() as i64) as u64)
                    .map_err(|_| parse_err(line, format!("expected an integer, found `{w}`")))
            })
            .collect()
    }

    fn data_line(&mut self, line: usize, words: &[&str]) -> Result<()> {
        let values = self.numbers(line, words)?;
        let dim = self.dim;
        match &mut self.block {
            None => Err(parse_err(line, "data line outside an op or p-map block")),
            Some(Block::Op { triples, .. }) => {
                if words.len() != 4 {
                    return Err(parse_err(line, "op entries have the form `i j k value`"));
                }
                // Indices are not reduced: re-read them as plain integers.
                let idx: Vec<usize> = words[..3]
                    .iter()
                    .map(|w| {
                        w.parse::<usize>()
                            .map_err(|_| parse_err(line, format!("bad index `{w}`")))
                    })
                    .collect::<Result<_>>()?;
                triples.push((idx[0], idx[1], idx[2], values[3]));
                Ok(())
            }
            Some(Block::Rows { rows, .. }) => {
                if values.len() != dim {
                    return Err(parse_err(line, format!("expected {dim} coordinates")));
                }
                rows.push(Element::from(values.into_iter().map(|v| v as u32).collect::<Vec<_>>()));
                Ok(())
            }
        }
    }

    fn pmap_line(&mut self, line: usize, rest: &str) -> Result<()> {
        let (head, opens_block) = match rest.strip_suffix(':') {
            Some(h) => (h, true),
            None => (rest, false),
        };
        let words: Vec<&str> = head.split_whitespace().collect();
        let (name, variant, args) = match words.as_slice() {
            [name, variant, args @ ..] => (*name, *variant, args),
            _ => return Err(parse_err(line, "expected `pmap <name> <variant> …`")),
        };
        let want_block = matches!(variant, "table" | "basis_jacobson");
        if want_block != opens_block {
            return Err(parse_err(
                line,
                if want_block {
                    format!("p-map variant `{variant}` opens a block and must end with `:`")
                } else {
                    format!("p-map variant `{variant}` takes no block")
                },
            ));
        }
        let arity = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(parse_err(
                    line,
                    format!("p-map variant `{variant}` takes {n} argument(s)"),
                ))
            }
        };
        let pmap = match variant {
            "zero" => {
                arity(0)?;
                PMap::Zero
            }
            "right_power" => {
                arity(1)?;
                PMap::RightPower { op: args[0].into() }
            }
            "matrix_power" => {
                arity(1)?;
                PMap::MatrixPower { op: args[0].into() }
            }
            "tensor_formula" => {
                arity(3)?;
                let dims: Vec<usize> = args[1..]
                    .iter()
                    .map(|w| w.parse().map_err(|_| parse_err(line, format!("bad dimension `{w}`"))))
                    .collect::<Result<_>>()?;
                PMap::TensorFormula {
                    op: args[0].into(),
                    gdim: dims[0],
                    rdim: dims[1],
                }
            }
            "table" => {
                arity(0)?;
                self.block = Some(Block::Rows {
                    line,
                    name: name.into(),
                    kind: RowKind::Table,
                    rows: Vec::new(),
                });
                return Ok(());
            }
            "basis_jacobson" => {
                arity(1)?;
                self.block = Some(Block::Rows {
                    line,
                    name: name.into(),
                    kind: RowKind::Jacobson(args[0].into()),
                    rows: Vec::new(),
                });
                return Ok(());
            }
            other => return Err(parse_err(line, format!("unknown p-map variant `{other}`"))),
        };
        let alg = std::mem::replace(&mut self.alg, Algebra::new(self.field, 0));
        self.alg = self.attach(alg, line, name, pmap)?;
        Ok(())
    }
}

fn parse_header(line: usize, text: &str) -> Result<(PrimeField, usize)> {
    let mut p = None;
    let mut dim = None;
    for word in text.split_whitespace() {
        match word.split_once('=') {
            Some(("p", v)) => p = v.parse::<u64>().ok(),
            Some(("dim", v)) => dim = v.parse::<usize>().ok(),
            _ => return Err(parse_err(line, format!("unexpected `{word}` in header"))),
        }
    }
    let (Some(p), Some(dim)) = (p, dim) else {
        return Err(parse_err(line, "header must read `p=<prime> dim=<n>`"));
    };
    let field = PrimeField::new(p).map_err(|e| parse_err(line, e.to_string()))?;
    Ok((field, dim))
}

/// Parses an algebra file.
pub fn parse(text: &str) -> Result<Algebra> {
    let mut parser: Option<Parser> = None;
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some(ps) = parser.as_mut() else {
            let (field, dim) = parse_header(line, content)?;
            parser = Some(Parser {
                field,
                dim,
                alg: Algebra::new(field, dim),
                block: None,
            });
            continue;
        };
        let first = content.split_whitespace().next().unwrap_or("");
        match first {
            "label" => {
                ps.close()?;
                let label = content["label".len()..].trim().to_string();
                let alg = std::mem::replace(&mut ps.alg, Algebra::new(ps.field, 0));
                ps.alg = alg.with_label(label);
            }
            "degrees" => {
                ps.close()?;
                let rest = content["degrees".len()..].trim();
                let (cap, degs) = rest
                    .split_once(':')
                    .ok_or_else(|| parse_err(line, "expected `degrees <cap>: <d_0> … <d_n-1>`"))?;
                let cap = cap.trim().parse().map_err(|_| parse_err(line, "bad degree cap"))?;
                let degrees = degs
                    .split_whitespace()
                    .map(|w| w.parse().map_err(|_| parse_err(line, format!("bad degree `{w}`"))))
                    .collect::<Result<Vec<usize>>>()?;
                let alg = std::mem::replace(&mut ps.alg, Algebra::new(ps.field, 0));
                ps.alg = alg
                    .with_grading(Grading { degrees, cap })
                    .map_err(|e| at_line(line, e))?;
            }
            "op" => {
                ps.close()?;
                let name = content["op".len()..]
                    .trim()
                    .strip_suffix(':')
                    .ok_or_else(|| parse_err(line, "expected `op <name>:`"))?
                    .trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(parse_err(line, format!("invalid op name `{name}`")));
                }
                ps.block = Some(Block::Op {
                    line,
                    name: name.to_string(),
                    triples: Vec::new(),
                });
            }
            "pmap" => {
                ps.close()?;
                ps.pmap_line(line, content["pmap".len()..].trim())?;
            }
            _ => {
                let words: Vec<&str> = content.split_whitespace().collect();
                ps.data_line(line, &words)?;
            }
        }
    }
    let Some(mut ps) = parser else {
        return Err(parse_err(last.max(1), "missing header `p=<prime> dim=<n>`"));
    };
    ps.close()?;
    Ok(ps.alg)
}

fn row(out: &mut String, v: &Element) {
    let parts: Vec<String> = v.iter().map(u32::to_string).collect();
    out.push_str(&parts.join(" "));
    out.push('\n');
}

/// Prints an algebra in the file format; [`parse`] inverts it exactly.
pub fn print(alg: &Algebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p={} dim={}", alg.p(), alg.dim());
    if !alg.label().is_empty() {
        let _ = writeln!(out, "label {}", alg.label());
    }
    if let Some(g) = alg.grading() {
        let degs: Vec<String> = g.degrees.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "degrees {}: {}", g.cap, degs.join(" "));
    }
    for (name, op) in alg.ops() {
        let _ = writeln!(out, "op {name}:");
        for (i, j, k, v) in op.triples() {
            let _ = writeln!(out, "{i} {j} {k} {v}");
        }
    }
    for (name, pmap) in alg.pmaps() {
        match pmap {
            PMap::Zero => {
                let _ = writeln!(out, "pmap {name} zero");
            }
            PMap::RightPower { op } => {
                let _ = writeln!(out, "pmap {name} right_power {op}");
            }
            PMap::MatrixPower { op } => {
                let _ = writeln!(out, "pmap {name} matrix_power {op}");
            }
            PMap::TensorFormula { op, gdim, rdim } => {
                let _ = writeln!(out, "pmap {name} tensor_formula {op} {gdim} {rdim}");
            }
            PMap::Table(values) => {
                let _ = writeln!(out, "pmap {name} table:");
                values.iter().for_each(|v| row(&mut out, v));
            }
            PMap::BasisJacobson { op, values } => {
                let _ = writeln!(out, "pmap {name} basis_jacobson {op}:");
                values.iter().for_each(|v| row(&mut out, v));
            }
        }
    }
    out
}
