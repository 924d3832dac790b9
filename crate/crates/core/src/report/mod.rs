//! Command dispatch and versioned reports.
//!
//! Every command returns a [`Report`] with the fields `schema, command,
//! quiver, n, m, d, verdict, data, version, millis`. Reports are
//! deterministic except for `millis`, which is `null` when timing is off.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::dsl::QuiverDoc;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::filtrep::{build_general_rep, GeneralRep, RepConfig};
use crate::invariants::{
    invariant_basis_with, verify_theorem1_with, verify_theorem2_with, KernelOptions, SpanComparison,
};
use crate::polyring::Polynomial;
use crate::quiver::{enumerate_pathways, Classification, FramedQuiver, Quiver};
use crate::tableaux::{
    enumerate_block_standard_with, enumerate_row_generators, eval_bideterminant, is_block_standard,
    Bitableau,
};

pub const SCHEMA: u32 = 1;
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Built-in example ids accepted by `verify-example`.
pub const EXAMPLES: &[&str] = &["bideterminant", "4.6"];

const EXAMPLE_BITABLEAU: &str = "(2 | 1)@[0]\n(2 | 2)@[0]\n(1 2 | 1 2)@[1,0]\n(2 | 1)@[1,0]";
const EXAMPLE_VALUE: &str = "x_2_1^2*x_2_2*a1_1_1*a1_2_2^2*(x_1_1*x_2_2 - x_1_2*x_2_1)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Classify {
        doc: QuiverDoc,
    },
    Pathways {
        doc: QuiverDoc,
    },
    Invariants {
        doc: QuiverDoc,
        n: usize,
        m: Option<usize>,
        d: u32,
    },
    Generators {
        doc: QuiverDoc,
        n: usize,
        m: usize,
        d: u32,
    },
    VerifyThm1 {
        doc: QuiverDoc,
        n: usize,
        d: u32,
    },
    VerifyThm2 {
        doc: QuiverDoc,
        n: usize,
        m: usize,
        d: u32,
    },
    VerifyExample {
        id: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Pathways { .. } => "pathways",
            Command::Invariants { .. } => "invariants",
            Command::Generators { .. } => "generators",
            Command::VerifyThm1 { .. } => "verify-thm1",
            Command::VerifyThm2 { .. } => "verify-thm2",
            Command::VerifyExample { .. } => "verify-example",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub exec: Exec,
    pub timing: bool,
    pub max_monomials: u128,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            exec: Exec::default(),
            timing: true,
            max_monomials: KernelOptions::default().max_monomials,
        }
    }
}

impl RunOptions {
    fn kernel(&self) -> KernelOptions {
        KernelOptions {
            max_monomials: self.max_monomials,
            exec: self.exec,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub quiver: Option<String>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub d: Option<u32>,
    pub verdict: String,
    pub data: Value,
    pub version: String,
    pub millis: Option<u64>,
}

/// Verdicts that make a run exit with status 1.
const FAILING: &[&str] = &["FAIL", "INCONSISTENT"];

impl Report {
    pub fn passed(&self) -> bool {
        !FAILING.contains(&self.verdict.as_str())
    }

    /// `0` on success, `1` on a failed verification.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// `key: value` lines in schema order; lists of strings print one item
    /// per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let _ = writeln!(out, "schema: {}", self.schema);
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "quiver: {}", opt(self.quiver.clone()));
        let _ = writeln!(out, "n: {}", opt(self.n.map(|x| x.to_string())));
        let _ = writeln!(out, "m: {}", opt(self.m.map(|x| x.to_string())));
        let _ = writeln!(out, "d: {}", opt(self.d.map(|x| x.to_string())));
        let _ = writeln!(out, "verdict: {}", self.verdict);
        if let Value::Object(fields) = &self.data {
            for (k, v) in fields {
                write_text_value(&mut out, k, v, 0);
            }
        }
        let _ = writeln!(out, "version: {}", self.version);
        let _ = writeln!(out, "millis: {}", opt(self.millis.map(|x| x.to_string())));
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(items) if items.iter().all(|x| matches!(x, Value::Number(_))) => {
            Some(v.to_string())
        }
        _ => None,
    }
}

fn write_text_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        if s.contains('\n') {
            let _ = writeln!(out, "{pad}{key}:");
            for line in s.lines() {
                let _ = writeln!(out, "{pad}  {line}");
            }
        } else {
            let _ = writeln!(out, "{pad}{key}: {s}");
        }
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match v {
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}  - {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}  -");
                        if let Value::Object(fields) = item {
                            for (k, x) in fields {
                                write_text_value(out, k, x, depth + 2);
                            }
                        } else {
                            write_text_value(out, "items", item, depth + 2);
                        }
                    }
                }
            }
        }
        Value::Object(fields) => {
            for (k, item) in fields {
                write_text_value(out, k, item, depth + 1);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

fn plain_quiver(doc: &QuiverDoc) -> Result<Quiver> {
    if doc.is_framed() {
        return Err(Error::Precondition(format!(
            "quiver `{}` is framed; this command takes an unframed quiver",
            doc.name
        )));
    }
    doc.quiver()
}

fn polys(ps: &[Polynomial]) -> Value {
    ps.iter().map(ToString::to_string).collect()
}

fn span_json(c: &SpanComparison) -> Value {
    json!({
        "verdict": c.verdict.label(),
        "rank_a": c.rank_a,
        "rank_b": c.rank_b,
        "rank_union": c.rank_union,
    })
}

fn classification_json(q: &Quiver, c: &Classification) -> Value {
    let vname = |id: usize| {
        q.vertex(id)
            .map_or_else(|| id.to_string(), |v| v.name.clone())
    };
    match c {
        Classification::AtMostTwo => json!({ "classification": c.label() }),
        Classification::MoreThanTwo {
            source,
            target,
            witnesses,
        } => json!({
            "classification": c.label(),
            "pair": [vname(*source), vname(*target)],
            "witnesses": witnesses.iter().map(|w| w.display(q).to_string()).collect::<Vec<_>>(),
        }),
    }
}

struct Header {
    quiver: Option<String>,
    n: Option<usize>,
    m: Option<usize>,
    d: Option<u32>,
}

pub fn run_command(cmd: &Command, opts: &RunOptions) -> Result<Report> {
    let start = Instant::now();
    let (header, verdict, data) = dispatch(cmd, opts)?;
    Ok(Report {
        schema: SCHEMA,
        command: cmd.name().to_string(),
        quiver: header.quiver,
        n: header.n,
        m: header.m,
        d: header.d,
        verdict,
        data,
        version: VERSION.to_string(),
        millis: opts.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

fn framed_rep(fq: &FramedQuiver, n: usize, m: usize) -> Result<GeneralRep> {
    Ok(build_general_rep(&RepConfig::framed(fq.clone(), n, m)?))
}

fn dispatch(cmd: &Command, opts: &RunOptions) -> Result<(Header, String, Value)> {
    let header = |doc: &QuiverDoc, n, m, d| Header {
        quiver: Some(doc.name.clone()),
        n,
        m,
        d,
    };
    match cmd {
        Command::Classify { doc } => {
            let q = doc.quiver()?;
            let report = enumerate_pathways(&q)?;
            let data = classification_json(&q, &report.classification);
            Ok((
                header(doc, None, None, None),
                report.classification.label().into(),
                data,
            ))
        }
        Command::Pathways { doc } => {
            let q = doc.quiver()?;
            let report = enumerate_pathways(&q)?;
            let vname = |id: usize| q.vertex(id).map_or_else(String::new, |v| v.name.clone());
            let pairs: Vec<Value> = report
                .pathways
                .iter()
                .filter(|(_, ps)| !ps.is_empty())
                .map(|(&(s, t), ps)| {
                    json!({
                        "source": vname(s),
                        "target": vname(t),
                        "count": ps.len(),
                        "pathways": ps.iter().map(|p| p.display(&q).to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut data = classification_json(&q, &report.classification);
            data["explored_length"] = json!(report.explored_length);
            data["pairs"] = Value::Array(pairs);
            Ok((
                header(doc, None, None, None),
                report.classification.label().into(),
                data,
            ))
        }
        Command::Invariants { doc, n, m, d } => {
            let rep = match (doc.framed()?, m) {
                (Some(fq), Some(m)) => framed_rep(&fq, *n, *m)?,
                (Some(_), None) => {
                    return Err(Error::Precondition(
                        "framed quivers need the framed dimension m".into(),
                    ));
                }
                (None, Some(_)) => {
                    return Err(Error::Precondition(
                        "m applies only to framed quivers".into(),
                    ));
                }
                (None, None) => build_general_rep(&RepConfig::plain(doc.quiver()?, *n)?),
            };
            let kernel = invariant_basis_with(&rep, *d, opts.kernel())?;
            let data = json!({
                "dims": kernel.dims,
                "dimension": kernel.dimension(),
                "monomials": kernel.monomials.to_string(),
                "basis": polys(&kernel.basis),
            });
            Ok((header(doc, Some(*n), *m, Some(*d)), "OK".into(), data))
        }
        Command::Generators { doc, n, m, d } => {
            let fq = doc.require_framed()?;
            let rep = framed_rep(&fq, *n, *m)?;
            let rows = enumerate_row_generators(&fq, &rep)?;
            let terms = enumerate_block_standard_with(&fq, &rep, *d, opts.exec)?;
            let data = json!({
                "row_generators": rows.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "count": terms.len(),
                "terms": terms.iter().map(|t| json!({
                    "diagonal": t.diagonal.to_string(),
                    "bitableau": t.bitableau.rows().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "polynomial": t.polynomial.to_string(),
                })).collect::<Vec<_>>(),
            });
            Ok((header(doc, Some(*n), Some(*m), Some(*d)), "OK".into(), data))
        }
        Command::VerifyThm1 { doc, n, d } => {
            let q = plain_quiver(doc)?;
            let r = verify_theorem1_with(&q, *n, *d, opts.kernel())?;
            let mut data = classification_json(&q, &r.classification);
            data["kernel_dims"] = json!(r.kernel.dims);
            data["kernel_dimension"] = json!(r.kernel.dimension());
            data["diagonal_dimension"] = json!(r.diagonal_dimension.to_string());
            data["span"] = span_json(&r.comparison);
            data["witness"] = json!(r.witness().map(ToString::to_string));
            Ok((
                header(doc, Some(*n), None, Some(*d)),
                r.verdict().into(),
                data,
            ))
        }
        Command::VerifyThm2 { doc, n, m, d } => {
            let fq = doc.require_framed()?;
            let r = verify_theorem2_with(&fq, *n, *m, *d, opts.kernel())?;
            let data = json!({
                "kernel_dims": r.kernel.dims,
                "kernel_dimension": r.kernel.dimension(),
                "generator_count": r.generators.len(),
                "span": span_json(&r.comparison),
                "missing_invariant": r.missing_invariant().map(ToString::to_string),
                "non_invariant_generator": r.non_invariant_generator().map(ToString::to_string),
            });
            Ok((
                header(doc, Some(*n), Some(*m), Some(*d)),
                r.verdict().into(),
                data,
            ))
        }
        Command::VerifyExample { id } => {
            if !EXAMPLES.contains(&id.as_str()) {
                return Err(Error::Precondition(format!(
                    "unknown example `{id}`; available: {}",
                    EXAMPLES.join(", ")
                )));
            }
            let doc: QuiverDoc =
                "quiver A1\nvertex 1\nvertex 2\narrow a1 : 1 -> 2\nframe a0 : * -> 1".parse()?;
            let fq = doc.require_framed()?;
            let rep = framed_rep(&fq, 2, 2)?;
            let bt: Bitableau = EXAMPLE_BITABLEAU.parse()?;
            let value = eval_bideterminant(&bt, &rep)?;
            let expected: Polynomial = EXAMPLE_VALUE.parse()?;
            let block_standard = is_block_standard(&bt);
            let pass = block_standard && value == expected;
            let data = json!({
                "example": id,
                "bitableau": bt.rows().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "block_standard": block_standard,
                "polynomial": value.to_string(),
                "expected": expected.to_string(),
            });
            let verdict = if pass { "PASS" } else { "FAIL" };
            Ok((header(&doc, Some(2), Some(2), None), verdict.into(), data))
        }
    }
}

/// Process exit status for an error: `3` for resource-guard aborts, `1` for
/// disagreeing invariance oracles, `2` for everything else (bad input).
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceGuard(_) => 3,
        Error::OracleDisagreement(_) => 1,
        _ => 2,
    }
}

#[cfg(test)]
mod tests;
