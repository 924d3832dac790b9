use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A generator of the polynomial ring.
///
/// Variables are totally ordered by the derived `Ord`: every coordinate sorts
/// before every action parameter, which sorts before every group entry. Within
/// a kind the fields compare lexicographically in declaration order. Monomials
/// are compared lexicographically against this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Entry `(row, col)` of the general matrix of an arrow. Arrow `0` is the
    /// framing arrow; nonframed arrows only ever carry `row <= col`.
    Coord { arrow: u32, row: u16, col: u16 },
    /// The parameter `u` of the one-parameter subgroup at `vertex` whose
    /// matrix has `u` in entry `(row, col)`, `row < col`.
    Param { vertex: u32, row: u16, col: u16 },
    /// Entry `(row, col)` of a generic upper-triangular matrix acting by left
    /// translation.
    Group { row: u16, col: u16 },
}

impl Var {
    pub fn coord(arrow: usize, row: usize, col: usize) -> Self {
        Var::Coord {
            arrow: arrow as u32,
            row: row as u16,
            col: col as u16,
        }
    }

    pub fn param(vertex: usize, row: usize, col: usize) -> Self {
        Var::Param {
            vertex: vertex as u32,
            row: row as u16,
            col: col as u16,
        }
    }

    pub fn group(row: usize, col: usize) -> Self {
        Var::Group {
            row: row as u16,
            col: col as u16,
        }
    }

    pub fn is_coordinate(&self) -> bool {
        matches!(self, Var::Coord { .. })
    }

    /// True for coordinates on the diagonal of a nonframed arrow matrix.
    pub fn is_diagonal_coordinate(&self) -> bool {
        matches!(self, Var::Coord { arrow, row, col } if *arrow != 0 && row == col)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::Coord { arrow: 0, row, col } => write!(f, "x_{row}_{col}"),
            Var::Coord { arrow, row, col } => write!(f, "a{arrow}_{row}_{col}"),
            Var::Param { vertex, row, col } => write!(f, "u{vertex}_{row}_{col}"),
            Var::Group { row, col } => write!(f, "b_{row}_{col}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::PolynomialSyntax(format!("unknown variable `{s}`"));
        let (head, rest) = s.split_once('_').ok_or_else(bad)?;
        let (row, col) = rest.split_once('_').ok_or_else(bad)?;
        let row: u16 = row.parse().map_err(|_| bad())?;
        let col: u16 = col.parse().map_err(|_| bad())?;
        let index = |prefix: char| -> Result<u32, Error> {
            head.strip_prefix(prefix)
                .filter(|d| !d.is_empty())
                .and_then(|d| d.parse().ok())
                .ok_or_else(bad)
        };
        match head.chars().next() {
            Some('x') if head == "x" => Ok(Var::Coord { arrow: 0, row, col }),
            Some('b') if head == "b" => Ok(Var::Group { row, col }),
            Some('a') => {
                let arrow = index('a')?;
                if arrow == 0 {
                    return Err(bad());
                }
                Ok(Var::Coord { arrow, row, col })
            }
            Some('u') => Ok(Var::Param {
                vertex: index('u')?,
                row,
                col,
            }),
            _ => Err(bad()),
        }
    }
}
