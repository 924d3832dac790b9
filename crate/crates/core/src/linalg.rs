//! Exact sparse linear algebra over the integers.
//!
//! Rows are sparse integer vectors kept primitive (content 1, positive
//! leading entry). Elimination is fraction-free: to clear an entry `e`
//! against a pivot `p` the row becomes `(p/g) row - (e/g) pivot_row` with
//! `g = gcd(p, e)`, followed by content removal. Rational input is scaled
//! by the common denominator first, which never changes a span.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse vector: `(column, value)` pairs, sorted by column, no zeros.
pub type SparseVec = Vec<(usize, BigInt)>;

/// Scales a rational vector to a primitive integer vector with the same span.
pub fn integer_row(entries: impl IntoIterator<Item = (usize, BigRational)>) -> SparseVec {
    let mut entries: Vec<(usize, BigRational)> =
        entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    entries.sort_by_key(|(col, _)| *col);
    let lcm = entries
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let row = entries
        .into_iter()
        .map(|(col, c)| {
            (
                col,
                (c * BigRational::from_integer(lcm.clone())).to_integer(),
            )
        })
        .collect();
    primitive(row)
}

/// Divides out the content and makes the leading entry positive.
pub fn primitive(mut v: SparseVec) -> SparseVec {
    let Some((_, lead)) = v.first() else {
        return v;
    };
    let negative = lead.is_negative();
    let content = v.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
    if content.is_one() && !negative {
        return v;
    }
    let content = if negative { -content } else { content };
    for (_, c) in &mut v {
        *c = &*c / &content;
    }
    v
}

/// `ca * a + cb * b`.
fn combine(a: &SparseVec, ca: &BigInt, b: &SparseVec, cb: &BigInt) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, ca * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, cb * &b[j].1));
            j += 1;
        } else {
            let c = ca * &a[i].1 + cb * &b[j].1;
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn entry(v: &SparseVec, col: usize) -> Option<&BigInt> {
    v.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|k| &v[k].1)
}

/// Clears column `col` of `v` using `pivot_row`, whose pivot sits at `col`.
fn eliminate(v: &SparseVec, pivot_row: &SparseVec, col: usize) -> SparseVec {
    let Some(e) = entry(v, col) else {
        return v.clone();
    };
    let p = &pivot_row[0].1;
    let g = p.gcd(e);
    primitive(combine(v, &(p / &g), pivot_row, &-(e / &g)))
}

/// Row echelon form built incrementally. Every stored row is primitive and
/// its first entry is its pivot.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_of: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_rows(rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Self::new();
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Stored rows in insertion order.
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_of.keys().copied()
    }

    /// Residue of `v` with every pivot column cleared, as a primitive
    /// vector. Zero iff `v` lies in the span. The residue depends only on
    /// the span and the column order, not on how the echelon was built.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        let mut v = primitive(v);
        let mut from = 0;
        loop {
            let next = v
                .iter()
                .map(|(c, _)| *c)
                .filter(|c| *c >= from)
                .find(|c| self.pivot_of.contains_key(c));
            let Some(col) = next else {
                return v;
            };
            v = eliminate(&v, &self.rows[self.pivot_of[&col]], col);
            from = col + 1;
        }
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether it was independent of the stored rows.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        match r.first() {
            None => false,
            Some(&(col, _)) => {
                self.pivot_of.insert(col, self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }

    /// Reduced row echelon form, rows sorted by pivot column.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = self
            .pivot_of
            .values()
            .map(|&k| self.rows[k].clone())
            .collect();
        for i in (0..rows.len()).rev() {
            let col = rows[i][0].0;
            let (above, rest) = rows.split_at_mut(i);
            let pivot_row = &rest[0];
            for r in above.iter_mut() {
                if entry(r, col).is_some() {
                    *r = eliminate(r, pivot_row, col);
                }
            }
        }
        rows
    }
}

pub fn rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    Echelon::from_rows(rows).rank()
}

/// Basis of `{ v in Q^ncols : row . v = 0 for every row }`, one primitive
/// integer vector per free column, in increasing free-column order.
pub fn nullspace(rows: impl IntoIterator<Item = SparseVec>, ncols: usize) -> Vec<SparseVec> {
    let ech = Echelon::from_rows(rows);
    let rref = ech.rref();
    let pivot_cols: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
    let mut by_free: BTreeMap<usize, Vec<(usize, &BigInt, &BigInt)>> = BTreeMap::new();
    for r in &rref {
        let (pc, p) = (r[0].0, &r[0].1);
        for (c, e) in &r[1..] {
            by_free.entry(*c).or_default().push((pc, p, e));
        }
    }
    (0..ncols)
        .filter(|c| pivot_cols.binary_search(c).is_err())
        .map(|f| {
            let deps = by_free.get(&f).map(Vec::as_slice).unwrap_or(&[]);
            let lcm = deps.iter().fold(BigInt::one(), |acc, (_, p, _)| acc.lcm(p));
            let mut v: SparseVec = deps
                .iter()
                .map(|&(pc, p, e)| (pc, -(e * (&lcm / p))))
                .collect();
            v.push((f, lcm));
            v.sort_by_key(|(c, _)| *c);
            primitive(v)
        })
        .collect()
}

/// Dot product of a sparse row with a sparse vector.
pub fn dot(a: &SparseVec, b: &SparseVec) -> BigInt {
    let (mut i, mut j) = (0, 0);
    let mut acc = BigInt::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}
