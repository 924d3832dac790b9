use std::fmt;

use super::{Polynomial, Substitution};
use crate::error::{Error, Result};

/// Dense matrix with polynomial entries, row-major. Indices are 0-based
/// except in [`PolyMatrix::det_of_minor`], which takes the 1-based row and
/// column labels used by bitableaux.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols.min(r)).all(|c| self.get(r, c).is_zero()))
    }

    /// `self * rhs`; entry `(i, k)` is `sum_j self(i, j) * rhs(j, k)`.
    pub fn matrix_product(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(PolyMatrix::from_fn(self.rows, rhs.cols, |i, k| {
            (0..self.cols)
                .filter(|&j| !self.get(i, j).is_zero() && !rhs.get(j, k).is_zero())
                .map(|j| self.get(i, j) * rhs.get(j, k))
                .sum()
        }))
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn substitute(&self, sigma: &Substitution) -> PolyMatrix {
        self.map(|p| p.substitute(sigma))
    }

    /// Determinant of the square submatrix on the given 1-based rows and
    /// columns, by cofactor expansion. The empty minor is `1`.
    pub fn det_of_minor(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
        if rows.len() != cols.len() {
            return Err(Error::InvalidMinor(format!(
                "{} rows but {} columns selected",
                rows.len(),
                cols.len()
            )));
        }
        let check = |idx: &[usize], bound: usize, what: &str| -> Result<Vec<usize>> {
            let mut seen = vec![false; bound];
            idx.iter()
                .map(|&i| {
                    if i == 0 || i > bound {
                        return Err(Error::InvalidMinor(format!(
                            "{what} index {i} outside 1..={bound}"
                        )));
                    }
                    if std::mem::replace(&mut seen[i - 1], true) {
                        return Err(Error::InvalidMinor(format!("{what} index {i} repeated")));
                    }
                    Ok(i - 1)
                })
                .collect()
        };
        let r = check(rows, self.rows, "row")?;
        let c = check(cols, self.cols, "column")?;
        Ok(self.cofactor_det(&r, &c))
    }

    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::InvalidMinor(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let all: Vec<usize> = (0..self.rows).collect();
        Ok(self.cofactor_det(&all, &all))
    }

    fn cofactor_det(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        match rows.len() {
            0 => Polynomial::one(),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                let a = self.get(rows[0], cols[0]) * self.get(rows[1], cols[1]);
                let b = self.get(rows[0], cols[1]) * self.get(rows[1], cols[0]);
                a - b
            }
            _ => {
                let mut acc = Polynomial::zero();
                let sub_rows = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let entry = self.get(rows[0], c);
                    if entry.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = entry * &self.cofactor_det(sub_rows, &sub_cols);
                    acc = if k % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
