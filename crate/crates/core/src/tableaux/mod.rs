//! Young tableaux, path-labelled bitableaux and bideterminants.
//!
//! A bitableau row `(j1 .. jk | i1 .. ik)@[phi1, .., 0]` stands for the minor
//! on rows `j` and columns `i` of the product `A_phi1 ... A_0`, the general
//! matrix of the path that starts with the framing arrow `0`. The
//! bideterminant of a bitableau is the product of its row minors.

mod checks;
mod generators;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::filtrep::{path_matrix, GeneralRep};
use crate::polyring::Polynomial;
use crate::quiver::{PathWord, FRAMED};

pub use checks::{
    grosshans_basis_check, lemma48_check, lemma48_report, GrosshansReport, Lemma48Case,
};
pub use generators::{
    enumerate_block_standard, enumerate_block_standard_with, enumerate_row_generators,
    BlockStandardTerm,
};

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!(
                "{parts:?} is not a partition"
            )));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Rows of positive integers. Row lengths are positive but need not
/// decrease; a bitableau of several blocks is only Young-shaped blockwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// The shape as a partition, if row lengths weakly decrease.
    pub fn partition(&self) -> Option<Partition> {
        Partition::new(self.shape()).ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableauClass {
    pub normal: bool,
    pub standard: bool,
}

/// Normal: rows strictly increase. Standard: normal, Young-shaped, and
/// columns weakly increase downward.
pub fn tableau_class(t: &Tableau) -> TableauClass {
    let normal = t.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
    let columns = t
        .rows
        .windows(2)
        .all(|w| w[0].iter().zip(&w[1]).all(|(above, below)| above <= below));
    TableauClass {
        normal,
        standard: normal && t.partition().is_some() && columns,
    }
}

/// Arrow ids `[phi1, phi2, .., 0]` of a product `A_phi1 A_phi2 ... A_0`,
/// leftmost factor first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathSequence(Vec<usize>);

impl PathSequence {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        match seq.split_last() {
            Some((&FRAMED, rest)) if !rest.contains(&FRAMED) => Ok(Self(seq)),
            _ => Err(Error::InvalidTableau(format!(
                "path sequence {seq:?} must end in the framing arrow 0 and contain it once"
            ))),
        }
    }

    /// The sequence of a path that starts with the framing arrow.
    pub fn from_path(p: &PathWord) -> Result<Self> {
        Self::new(p.arrows().iter().rev().copied().collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Number of arrows, i.e. the degree of each entry of the product.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The path in traversal order, starting at the framed vertex.
    pub fn path(&self, rep: &GeneralRep) -> Result<PathWord> {
        if !rep.is_framed() {
            return Err(Error::Precondition(
                "path sequences need a framed representation".into(),
            ));
        }
        PathWord::new(rep.quiver(), FRAMED, self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for PathSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Shorter sequences come first; equal lengths compare by the sign of the
/// rightmost nonzero entry of `psi - phi`.
pub fn seq_leq(phi: &PathSequence, psi: &PathSequence) -> bool {
    seq_cmp(phi, psi) != Ordering::Greater
}

pub fn seq_cmp(phi: &PathSequence, psi: &PathSequence) -> Ordering {
    phi.len().cmp(&psi.len()).then_with(|| {
        phi.0
            .iter()
            .zip(&psi.0)
            .rev()
            .find(|(a, b)| a != b)
            .map_or(Ordering::Equal, |(a, b)| a.cmp(b))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitableauRow {
    pub j: Vec<usize>,
    pub i: Vec<usize>,
    pub label: PathSequence,
}

impl BitableauRow {
    pub fn new(j: Vec<usize>, i: Vec<usize>, label: PathSequence) -> Result<Self> {
        if j.is_empty() || j.len() != i.len() {
            return Err(Error::InvalidTableau(format!(
                "row sides {j:?} and {i:?} differ in length"
            )));
        }
        if j.iter().chain(&i).any(|&x| x == 0) {
            return Err(Error::InvalidTableau("indices are 1-based".into()));
        }
        Ok(Self { j, i, label })
    }

    /// Total degree of the row minor.
    pub fn degree(&self) -> usize {
        self.j.len() * self.label.len()
    }

    pub fn evaluate(&self, rep: &GeneralRep) -> Result<Polynomial> {
        let mat = path_matrix(rep, &self.label.path(rep)?)?;
        if let Some(&bad) = self.j.iter().find(|&&r| r > mat.rows()) {
            return Err(Error::IndexOutOfRange(format!(
                "row index {bad} exceeds {}",
                mat.rows()
            )));
        }
        if let Some(&bad) = self.i.iter().find(|&&c| c > mat.cols()) {
            return Err(Error::IndexOutOfRange(format!(
                "column index {bad} exceeds {}",
                mat.cols()
            )));
        }
        mat.det_of_minor(&self.j, &self.i)
    }
}

impl fmt::Display for BitableauRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "({} | {})@{}", side(&self.j), side(&self.i), self.label)
    }
}

impl FromStr for BitableauRow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidTableau(format!("cannot parse bitableau row `{s}`"));
        let (minor, label) = s.trim().split_once('@').ok_or_else(bad)?;
        let minor = minor
            .trim()
            .strip_prefix('(')
            .and_then(|m| m.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (j, i) = minor.split_once('|').ok_or_else(bad)?;
        let ints = |t: &str, sep: char| -> Result<Vec<usize>> {
            t.split(sep)
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| bad()))
                .collect()
        };
        let label = label
            .trim()
            .strip_prefix('[')
            .and_then(|l| l.strip_suffix(']'))
            .ok_or_else(bad)?;
        BitableauRow::new(
            ints(j, ' ')?,
            ints(i, ' ')?,
            PathSequence::new(ints(label, ',')?)?,
        )
    }
}

/// Rows listed top to bottom.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bitableau {
    rows: Vec<BitableauRow>,
}

impl Bitableau {
    pub fn new(rows: Vec<BitableauRow>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[BitableauRow] {
        &self.rows
    }

    pub fn j_tableau(&self) -> Tableau {
        Tableau {
            rows: self.rows.iter().map(|r| r.j.clone()).collect(),
        }
    }

    pub fn i_tableau(&self) -> Tableau {
        Tableau {
            rows: self.rows.iter().map(|r| r.i.clone()).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.rows.iter().map(BitableauRow::degree).sum()
    }

    /// Maximal runs of rows sharing a label.
    pub fn blocks(&self) -> Vec<&[BitableauRow]> {
        self.rows.chunk_by(|a, b| a.label == b.label).collect()
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for Bitableau {
    type Err = Error;

    /// One row per nonblank line.
    fn from_str(s: &str) -> Result<Self> {
        s.lines()
            .filter(|l| !l.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(Bitableau::new)
    }
}

fn block_is_standard(block: &[BitableauRow]) -> bool {
    let side = |f: fn(&BitableauRow) -> &Vec<usize>| Tableau {
        rows: block.iter().map(|r| f(r).clone()).collect(),
    };
    tableau_class(&side(|r| &r.j)).standard && tableau_class(&side(|r| &r.i)).standard
}

/// Labels weakly increase down the rows and each equal-label block is a
/// standard bitableau.
pub fn is_block_standard(bt: &Bitableau) -> bool {
    bt.rows
        .windows(2)
        .all(|w| seq_leq(&w[0].label, &w[1].label))
        && bt.blocks().into_iter().all(block_is_standard)
}

/// Product of the row minors; the empty bitableau gives `1`.
pub fn eval_bideterminant(bt: &Bitableau, rep: &GeneralRep) -> Result<Polynomial> {
    let mut acc = Polynomial::one();
    for r in &bt.rows {
        acc = &acc * &r.evaluate(rep)?;
    }
    Ok(acc)
}
