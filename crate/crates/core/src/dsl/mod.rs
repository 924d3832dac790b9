//! Line-oriented text format for quivers.
//!
//! ```text
//! quiver J2          # header, exactly once, first
//! vertex 1
//! arrow a1 : 1 -> 1
//! arrow a2 : 1 -> 1
//! frame f : * -> 1   # optional framing arrow
//! ```
//!
//! Vertex and arrow ids are runs of ASCII letters, digits, `_` and `'`; the
//! quiver name is any run without whitespace or `#`. Whitespace between
//! tokens is optional and `#` starts a comment.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quiver::{FramedQuiver, Quiver};

/// 1-based line and column of a declaration or token.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexDecl {
    pub id: String,
    pub at: Location,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub id: String,
    pub tail: String,
    pub head: String,
    pub at: Location,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameDecl {
    pub id: String,
    pub target: String,
    pub at: Location,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverDoc {
    pub name: String,
    pub vertices: Vec<VertexDecl>,
    pub arrows: Vec<ArrowDecl>,
    pub frame: Option<FrameDecl>,
}

/// Name of the framed vertex in quivers built from a document.
pub const FRAMED_VERTEX_NAME: &str = "*";

fn syntax(at: Location, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: at.line,
        column: at.column,
        message: message.into(),
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

pub fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(is_ident_char)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Colon,
    Arrow,
    Star,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => f.write_str(s),
            Tok::Colon => f.write_str(":"),
            Tok::Arrow => f.write_str("->"),
            Tok::Star => f.write_str("*"),
        }
    }
}

fn tokenize(line_no: usize, line: &str) -> Result<Vec<(Tok, Location)>> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let at = Location {
            line: line_no,
            column: k + 1,
        };
        let c = chars[k];
        match c {
            '#' => break,
            c if c.is_whitespace() => k += 1,
            ':' => {
                out.push((Tok::Colon, at));
                k += 1;
            }
            '*' => {
                out.push((Tok::Star, at));
                k += 1;
            }
            '-' if chars.get(k + 1) == Some(&'>') => {
                out.push((Tok::Arrow, at));
                k += 2;
            }
            c if is_ident_char(c) => {
                let start = k;
                while k < chars.len() && is_ident_char(chars[k]) {
                    k += 1;
                }
                out.push((Tok::Ident(chars[start..k].iter().collect()), at));
            }
            other => return Err(syntax(at, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// Cursor over one line's tokens.
struct Line {
    toks: Vec<(Tok, Location)>,
    pos: usize,
    end: Location,
}

impl Line {
    fn ident(&mut self, what: &str) -> Result<(String, Location)> {
        match self.toks.get(self.pos) {
            Some((Tok::Ident(s), at)) => {
                self.pos += 1;
                Ok((s.clone(), *at))
            }
            Some((t, at)) => Err(syntax(*at, format!("expected {what}, found `{t}`"))),
            None => Err(syntax(self.end, format!("expected {what}"))),
        }
    }

    fn punct(&mut self, want: Tok) -> Result<()> {
        match self.toks.get(self.pos) {
            Some((t, _)) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            Some((t, at)) => Err(syntax(*at, format!("expected `{want}`, found `{t}`"))),
            None => Err(syntax(self.end, format!("expected `{want}`"))),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.toks.get(self.pos) {
            Some((t, at)) => Err(syntax(*at, format!("unexpected `{t}`"))),
            None => Ok(()),
        }
    }
}

/// Endpoint references, checked once every vertex is known.
struct Reference {
    vertex: String,
    at: Location,
}

/// A `quiver <name>` line. The name is any run of characters other than
/// whitespace and `#`.
fn header_name(line_no: usize, body: &str) -> Result<Option<(String, Location)>> {
    let indent = body.len() - body.trim_start().len();
    let Some(rest) = body[indent..].strip_prefix("quiver") else {
        return Ok(None);
    };
    if rest.starts_with(|c: char| !c.is_whitespace()) {
        return Ok(None);
    }
    let col = |byte: usize| body[..byte].chars().count() + 1;
    let at = Location {
        line: line_no,
        column: col(indent),
    };
    let name_start = body.len() - rest.trim_start().len();
    let mut words = rest.split_whitespace();
    let Some(name) = words.next() else {
        return Err(syntax(
            Location {
                line: line_no,
                column: col(body.trim_end().len()),
            },
            "expected a quiver name",
        ));
    };
    if let Some(extra) = words.next() {
        let offset =
            name_start + name.len() + body[name_start + name.len()..].find(extra).unwrap_or(0);
        return Err(syntax(
            Location {
                line: line_no,
                column: col(offset),
            },
            format!("unexpected `{extra}`"),
        ));
    }
    Ok(Some((name.to_string(), at)))
}

pub fn parse_quiver_dsl(text: &str) -> Result<QuiverDoc> {
    let mut name: Option<String> = None;
    let mut vertices: Vec<VertexDecl> = Vec::new();
    let mut arrows: Vec<ArrowDecl> = Vec::new();
    let mut frame: Option<FrameDecl> = None;
    let mut refs: Vec<Reference> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        if let Some((header, at)) = header_name(line_no, body)? {
            if name.is_some() {
                return Err(syntax(at, "duplicate `quiver` header"));
            }
            name = Some(header);
            continue;
        }
        let toks = tokenize(line_no, raw)?;
        if toks.is_empty() {
            continue;
        }
        let end = Location {
            line: line_no,
            column: body.trim_end().chars().count() + 1,
        };
        let mut line = Line { toks, pos: 0, end };
        let (keyword, at) = line.ident("a declaration")?;
        if name.is_none() {
            return Err(syntax(at, "expected `quiver <name>` header first"));
        }
        match keyword.as_str() {
            "vertex" => {
                let (id, id_at) = line.ident("a vertex id")?;
                if vertices.iter().any(|v| v.id == id) {
                    return Err(syntax(id_at, format!("duplicate vertex {id}")));
                }
                vertices.push(VertexDecl { id, at });
            }
            "arrow" | "frame" => {
                let (id, id_at) = line.ident("an arrow id")?;
                let taken =
                    arrows.iter().any(|a| a.id == id) || frame.as_ref().is_some_and(|f| f.id == id);
                if taken {
                    return Err(syntax(id_at, format!("duplicate arrow {id}")));
                }
                line.punct(Tok::Colon)?;
                if keyword == "arrow" {
                    let (tail, tail_at) = line.ident("a tail vertex")?;
                    line.punct(Tok::Arrow)?;
                    let (head, head_at) = line.ident("a head vertex")?;
                    refs.push(Reference {
                        vertex: tail.clone(),
                        at: tail_at,
                    });
                    refs.push(Reference {
                        vertex: head.clone(),
                        at: head_at,
                    });
                    arrows.push(ArrowDecl { id, tail, head, at });
                } else {
                    if frame.is_some() {
                        return Err(syntax(at, "multiple framings"));
                    }
                    line.punct(Tok::Star)?;
                    line.punct(Tok::Arrow)?;
                    let (target, target_at) = line.ident("a target vertex")?;
                    refs.push(Reference {
                        vertex: target.clone(),
                        at: target_at,
                    });
                    frame = Some(FrameDecl { id, target, at });
                }
            }
            other => return Err(syntax(at, format!("unknown declaration `{other}`"))),
        }
        line.finish()?;
    }

    let Some(name) = name else {
        return Err(syntax(
            Location { line: 1, column: 1 },
            "missing `quiver <name>` header",
        ));
    };
    if let Some(r) = refs
        .iter()
        .find(|r| !vertices.iter().any(|v| v.id == r.vertex))
    {
        return Err(syntax(r.at, format!("undeclared vertex {}", r.vertex)));
    }
    Ok(QuiverDoc {
        name,
        vertices,
        arrows,
        frame,
    })
}

impl FromStr for QuiverDoc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_quiver_dsl(s)
    }
}

impl QuiverDoc {
    fn vertex_index(&self, id: &str) -> usize {
        1 + self
            .vertices
            .iter()
            .position(|v| v.id == id)
            .expect("endpoints are checked at parse time")
    }

    /// The base quiver: vertices numbered `1..` and arrows `1..` in
    /// declaration order, named by their ids.
    pub fn quiver(&self) -> Result<Quiver> {
        let mut q = Quiver::new(self.name.clone());
        for v in &self.vertices {
            q.add_vertex(v.id.clone())?;
        }
        for a in &self.arrows {
            q.add_arrow(
                a.id.clone(),
                self.vertex_index(&a.tail),
                self.vertex_index(&a.head),
            )?;
        }
        Ok(q)
    }

    pub fn is_framed(&self) -> bool {
        self.frame.is_some()
    }

    pub fn framed(&self) -> Result<Option<FramedQuiver>> {
        let Some(f) = &self.frame else {
            return Ok(None);
        };
        FramedQuiver::with_names(
            self.quiver()?,
            self.vertex_index(&f.target),
            FRAMED_VERTEX_NAME,
            &f.id,
        )
        .map(Some)
    }

    /// The framed quiver, or a precondition error if the document has no
    /// `frame` line.
    pub fn require_framed(&self) -> Result<FramedQuiver> {
        self.framed()?.ok_or_else(|| {
            Error::Precondition(format!("quiver `{}` has no `frame` declaration", self.name))
        })
    }

    /// A document for `q` laid out exactly as [`fmt::Display`] prints it.
    pub fn from_quiver(q: &Quiver) -> Result<Self> {
        Self::build(q, None)
    }

    pub fn from_framed(fq: &FramedQuiver) -> Result<Self> {
        Self::build(fq.base(), Some(fq))
    }

    fn build(q: &Quiver, fq: Option<&FramedQuiver>) -> Result<Self> {
        let check = |s: &str| {
            if is_identifier(s) {
                Ok(s.to_string())
            } else {
                Err(Error::InvalidQuiver(format!(
                    "`{s}` is not a valid identifier"
                )))
            }
        };
        let mut line = 1;
        let mut next = || {
            line += 1;
            Location { line, column: 1 }
        };
        let name = q.name().to_string();
        if name.is_empty() || name.contains(|c: char| c.is_whitespace() || c == '#') {
            return Err(Error::InvalidQuiver(format!(
                "`{name}` cannot be used as a quiver name"
            )));
        }
        let vertex_name = |id: usize| q.vertex(id).map(|v| v.name.clone()).unwrap_or_default();
        let vertices = q
            .vertices()
            .iter()
            .map(|v| {
                Ok(VertexDecl {
                    id: check(&v.name)?,
                    at: next(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let arrows = q
            .arrows()
            .iter()
            .map(|a| {
                Ok(ArrowDecl {
                    id: check(&a.name)?,
                    tail: vertex_name(a.tail),
                    head: vertex_name(a.head),
                    at: next(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let frame = fq
            .map(|fq| {
                Ok(FrameDecl {
                    id: check(fq.framing_name())?,
                    target: vertex_name(fq.target()),
                    at: next(),
                })
            })
            .transpose()?;
        let doc = QuiverDoc {
            name,
            vertices,
            arrows,
            frame,
        };
        parse_quiver_dsl(&doc.to_string())?;
        Ok(doc)
    }
}

impl fmt::Display for QuiverDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "quiver {}", self.name)?;
        for v in &self.vertices {
            writeln!(f, "vertex {}", v.id)?;
        }
        for a in &self.arrows {
            writeln!(f, "arrow {} : {} -> {}", a.id, a.tail, a.head)?;
        }
        if let Some(fr) = &self.frame {
            writeln!(f, "frame {} : * -> {}", fr.id, fr.target)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
