//! Quivers, framed quivers and paths.
//!
//! Vertices and arrows carry numeric ids and display names. A plain quiver
//! numbers its vertices `1..=|Q0|` and its arrows `1..=|Q1|` in declaration
//! order. A framed quiver adds vertex `0` (the framed vertex) and arrow `0`
//! (the framing arrow), so a path sequence `[phi_1, ..., 0]` reads arrow ids
//! directly.

mod family;
mod pathways;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use family::{make_family, DynkinType, Family, Orientation};
pub use pathways::{
    classify, classify_many, enumerate_pathways, enumerate_pathways_with, has_square,
    is_square_free, Classification, PathwayOptions, PathwayReport,
};

use crate::error::{Error, Result};

/// Id of the framed vertex and of the framing arrow in a framed quiver.
pub const FRAMED: usize = 0;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub id: usize,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: usize,
    pub name: String,
    pub tail: usize,
    pub head: usize,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    name: String,
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            vertices: Vec::new(),
            arrows: Vec::new(),
        }
    }

    /// Builds a quiver with vertices named `1..=vertex_count` and arrows given
    /// as `(name, tail, head)`.
    pub fn from_arrows(
        name: impl Into<String>,
        vertex_count: usize,
        arrows: &[(&str, usize, usize)],
    ) -> Result<Self> {
        let mut q = Quiver::new(name);
        for v in 1..=vertex_count {
            q.add_vertex(v.to_string())?;
        }
        for &(a, t, h) in arrows {
            q.add_arrow(a, t, h)?;
        }
        Ok(q)
    }

    /// Declares the next vertex; ids are assigned `1, 2, ...`.
    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize> {
        let id = self.vertices.len() + 1;
        self.push_vertex(id, name.into())?;
        Ok(id)
    }

    fn push_vertex(&mut self, id: usize, name: String) -> Result<()> {
        if self.vertices.iter().any(|v| v.name == name) {
            return Err(Error::InvalidQuiver(format!("duplicate vertex `{name}`")));
        }
        self.vertices.push(Vertex { id, name });
        Ok(())
    }

    /// Declares the next arrow; ids are assigned `1, 2, ...`.
    pub fn add_arrow(
        &mut self,
        name: impl Into<String>,
        tail: usize,
        head: usize,
    ) -> Result<usize> {
        let id = self.arrows.len() + 1;
        self.push_arrow(id, name.into(), tail, head)?;
        Ok(id)
    }

    fn push_arrow(&mut self, id: usize, name: String, tail: usize, head: usize) -> Result<()> {
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(Error::InvalidQuiver(format!("duplicate arrow `{name}`")));
        }
        for end in [tail, head] {
            if self.vertex(end).is_none() {
                return Err(Error::InvalidQuiver(format!(
                    "arrow `{name}` uses undeclared vertex {end}"
                )));
            }
        }
        self.arrows.push(Arrow {
            id,
            name,
            tail,
            head,
        });
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex(&self, id: usize) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn arrow(&self, id: usize) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.id == id)
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.name == name)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.name == name)
    }

    /// Arrows leaving each vertex, sorted by arrow id.
    pub fn out_arrows(&self) -> BTreeMap<usize, Vec<&Arrow>> {
        let mut out: BTreeMap<usize, Vec<&Arrow>> =
            self.vertices.iter().map(|v| (v.id, Vec::new())).collect();
        for a in &self.arrows {
            out.entry(a.tail).or_default().push(a);
        }
        for list in out.values_mut() {
            list.sort_by_key(|a| a.id);
        }
        out
    }

    /// Connectedness of the underlying undirected graph. The empty quiver
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        let Some(first) = self.vertices.first() else {
            return true;
        };
        let mut seen = BTreeSet::from([first.id]);
        let mut stack = vec![first.id];
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                let next = if a.tail == v {
                    a.head
                } else if a.head == v {
                    a.tail
                } else {
                    continue;
                };
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

/// A quiver with one extra vertex `1'` and one arrow `a0 : 1' -> target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedQuiver {
    base: Quiver,
    target: usize,
    framed_name: String,
    framing_name: String,
}

impl FramedQuiver {
    pub fn new(base: Quiver, target: usize) -> Result<Self> {
        Self::with_names(base, target, "1'", "a0")
    }

    pub fn with_names(
        base: Quiver,
        target: usize,
        framed_name: &str,
        framing_name: &str,
    ) -> Result<Self> {
        if base.vertex(target).is_none() {
            return Err(Error::InvalidQuiver(format!(
                "framing targets undeclared vertex {target}"
            )));
        }
        if base.vertex_by_name(framed_name).is_some() || base.arrow_by_name(framing_name).is_some()
        {
            return Err(Error::InvalidQuiver(format!(
                "framing names `{framed_name}`/`{framing_name}` clash with the base quiver"
            )));
        }
        Ok(Self {
            base,
            target,
            framed_name: framed_name.to_string(),
            framing_name: framing_name.to_string(),
        })
    }

    pub fn base(&self) -> &Quiver {
        &self.base
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn framing_name(&self) -> &str {
        &self.framing_name
    }

    pub fn framed_name(&self) -> &str {
        &self.framed_name
    }

    /// The framed quiver as an ordinary quiver: framed vertex `0`, framing
    /// arrow `0`, base ids unchanged.
    pub fn full(&self) -> Quiver {
        let mut q = Quiver::new(self.base.name.clone());
        q.vertices.push(Vertex {
            id: FRAMED,
            name: self.framed_name.clone(),
        });
        q.vertices.extend(self.base.vertices.iter().cloned());
        q.arrows.push(Arrow {
            id: FRAMED,
            name: self.framing_name.clone(),
            tail: FRAMED,
            head: self.target,
        });
        q.arrows.extend(self.base.arrows.iter().cloned());
        q
    }
}

/// A composable word of arrows, stored in traversal order: `arrows[0]` is
/// traversed first. The empty word is the trivial path at `start`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

impl PathWord {
    pub fn trivial(vertex: usize) -> Self {
        Self {
            start: vertex,
            end: vertex,
            arrows: Vec::new(),
        }
    }

    /// Validates the word against `q`. `arrows` is in traversal order, so
    /// the written path `a_k ... a_2 a_1` is passed as `[a_1, a_2, ..., a_k]`.
    pub fn new(q: &Quiver, start: usize, arrows: Vec<usize>) -> Result<Self> {
        if q.vertex(start).is_none() {
            return Err(Error::NonComposablePath(format!(
                "undeclared start vertex {start}"
            )));
        }
        let mut at = start;
        for &id in &arrows {
            let a = q
                .arrow(id)
                .ok_or_else(|| Error::NonComposablePath(format!("unknown arrow id {id}")))?;
            if a.tail != at {
                return Err(Error::NonComposablePath(format!(
                    "arrow `{}` starts at {} but the path is at {at}",
                    a.name, a.tail
                )));
            }
            at = a.head;
        }
        Ok(Self {
            start,
            end: at,
            arrows,
        })
    }

    /// Builds a path from arrow names in written (right-to-left) order, so
    /// `["a2", "a1"]` means `a1` first.
    pub fn from_written(q: &Quiver, written: &[&str]) -> Result<Self> {
        let ids = written
            .iter()
            .rev()
            .map(|n| {
                q.arrow_by_name(n)
                    .map(|a| a.id)
                    .ok_or_else(|| Error::NonComposablePath(format!("unknown arrow `{n}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let start = match ids.first() {
            Some(&id) => q.arrow(id).expect("looked up by name").tail,
            None => {
                return Err(Error::NonComposablePath(
                    "empty written path has no start".into(),
                ))
            }
        };
        Self::new(q, start, ids)
    }

    pub(crate) fn extended(&self, arrow: &Arrow) -> Self {
        let mut arrows = self.arrows.clone();
        arrows.push(arrow.id);
        Self {
            start: self.start,
            end: arrow.head,
            arrows,
        }
    }

    pub fn source(&self) -> usize {
        self.start
    }

    pub fn target(&self) -> usize {
        self.end
    }

    /// Arrow ids in traversal order.
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Written form `a_k...a_1` using arrow names, `e<vertex>` for trivial
    /// paths.
    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay {
            path: self,
            quiver: q,
        }
    }
}

pub struct PathDisplay<'a> {
    path: &'a PathWord,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.arrows.is_empty() {
            let name = self
                .quiver
                .vertex(self.path.start)
                .map_or("?", |v| v.name.as_str());
            return write!(f, "e{name}");
        }
        for id in self.path.arrows.iter().rev() {
            match self.quiver.arrow(*id) {
                Some(a) => write!(f, "{}", a.name)?,
                None => write!(f, "?{id}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
