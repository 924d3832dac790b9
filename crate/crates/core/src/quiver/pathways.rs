use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exec::Exec;

use super::{PathWord, Quiver};

/// True iff `word` contains a factor `q q` with `q` nonempty.
pub fn has_square<T: PartialEq>(word: &[T]) -> bool {
    let len = word.len();
    (1..=len / 2).any(|k| (0..=len - 2 * k).any(|i| word[i..i + k] == word[i + k..i + 2 * k]))
}

/// Whether `word` ends in a square. If every proper prefix is square-free,
/// this is equivalent to `has_square(word)`.
fn ends_with_square(word: &[usize]) -> bool {
    let len = word.len();
    (1..=len / 2).any(|k| word[len - 2 * k..len - k] == word[len - k..])
}

/// Checks that `p` is composable in `q` and contains no repeated factor.
pub fn is_square_free(q: &Quiver, p: &PathWord) -> Result<bool> {
    let checked = PathWord::new(q, p.source(), p.arrows().to_vec())?;
    Ok(!has_square(checked.arrows()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    AtMostTwo,
    /// Three distinct pathways from `source` to `target`, in discovery order.
    MoreThanTwo {
        source: usize,
        target: usize,
        witnesses: [PathWord; 3],
    },
}

impl Classification {
    pub fn is_at_most_two(&self) -> bool {
        matches!(self, Classification::AtMostTwo)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Classification::AtMostTwo => "AtMostTwo",
            Classification::MoreThanTwo { .. } => "MoreThanTwo",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathwayReport {
    pub classification: Classification,
    /// Pathways per ordered pair `(source, target)`, every pair present. When
    /// the search stopped early this holds only what was found so far.
    pub pathways: BTreeMap<(usize, usize), Vec<PathWord>>,
    /// Length of the longest word examined.
    pub explored_length: usize,
}

impl PathwayReport {
    pub fn count(&self, source: usize, target: usize) -> usize {
        self.pathways.get(&(source, target)).map_or(0, Vec::len)
    }

    /// Pathways leaving `source`, shortest first.
    pub fn from_vertex(&self, source: usize) -> Vec<&PathWord> {
        let mut out: Vec<&PathWord> = self
            .pathways
            .range((source, 0)..=(source, usize::MAX))
            .flat_map(|(_, ps)| ps.iter())
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PathwayOptions {
    /// Abort if a pathway longer than this is reached. `None` uses
    /// `4 * |Q1| * |Q0|`.
    pub max_length: Option<usize>,
}

pub fn enumerate_pathways(q: &Quiver) -> Result<PathwayReport> {
    enumerate_pathways_with(q, PathwayOptions::default())
}

/// Breadth-first search over square-free words by increasing length,
/// stopping as soon as some pair has three pathways.
pub fn enumerate_pathways_with(q: &Quiver, opts: PathwayOptions) -> Result<PathwayReport> {
    let cap = opts
        .max_length
        .unwrap_or_else(|| (4 * q.arrows().len() * q.vertices().len()).max(1));
    let out = q.out_arrows();
    let mut pathways: BTreeMap<(usize, usize), Vec<PathWord>> = BTreeMap::new();
    for s in q.vertices() {
        for t in q.vertices() {
            pathways.insert((s.id, t.id), Vec::new());
        }
    }
    let mut frontier: Vec<PathWord> = q
        .vertices()
        .iter()
        .map(|v| PathWord::trivial(v.id))
        .collect();
    for p in &frontier {
        pathways
            .get_mut(&(p.source(), p.target()))
            .expect("pair")
            .push(p.clone());
    }
    let mut length = 0;
    while !frontier.is_empty() {
        length += 1;
        let mut next = Vec::new();
        for p in &frontier {
            for a in &out[&p.target()] {
                let cand = p.extended(a);
                if ends_with_square(cand.arrows()) {
                    continue;
                }
                if length > cap {
                    return Err(Error::ResourceGuard(format!(
                        "pathway length exceeded the cap of {cap} in quiver `{}`",
                        q.name()
                    )));
                }
                let list = pathways
                    .get_mut(&(cand.source(), cand.target()))
                    .expect("pair");
                list.push(cand.clone());
                if list.len() == 3 {
                    let witnesses = [list[0].clone(), list[1].clone(), list[2].clone()];
                    return Ok(PathwayReport {
                        classification: Classification::MoreThanTwo {
                            source: cand.source(),
                            target: cand.target(),
                            witnesses,
                        },
                        pathways,
                        explored_length: length,
                    });
                }
                next.push(cand);
            }
        }
        frontier = next;
    }
    Ok(PathwayReport {
        classification: Classification::AtMostTwo,
        pathways,
        explored_length: length.saturating_sub(1),
    })
}

pub fn classify(q: &Quiver) -> Result<Classification> {
    enumerate_pathways(q).map(|r| r.classification)
}

/// Classifies each quiver independently; results follow input order.
pub fn classify_many(quivers: &[Quiver], exec: Exec) -> Vec<Result<Classification>> {
    exec.map(quivers, classify)
}
