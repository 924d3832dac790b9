use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::filtrep::{build_general_rep, RepConfig};
use crate::invariants::{binomial_count, polynomial_rank};
use crate::polyring::{PolyMatrix, Polynomial, Substitution, Var};
use crate::quiver::{make_family, Family, FramedQuiver, FRAMED};

use super::generators::increasing_tuples;
use super::{eval_bideterminant, tableau_class, Bitableau, BitableauRow, PathSequence, Tableau};

/// One column tuple of a left-translation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma48Case {
    pub columns: Vec<usize>,
    /// `f(bX) = (b_pp ... b_nn) f(X)`.
    pub character: bool,
    /// With every `b_ii = 1`, `f(bX) = f(X)`.
    pub unipotent: bool,
}

fn generic(n: usize, m: usize) -> PolyMatrix {
    PolyMatrix::from_fn(n, m, |r, c| {
        Polynomial::var(Var::coord(FRAMED, r + 1, c + 1))
    })
}

fn upper_group(n: usize) -> PolyMatrix {
    PolyMatrix::from_fn(n, n, |r, c| {
        if r <= c {
            Polynomial::var(Var::group(r + 1, c + 1))
        } else {
            Polynomial::zero()
        }
    })
}

/// Checks the character of the minor `(p .. n | I)` of a generic `n x m`
/// matrix `X` under left translation `X -> bX` by a generic upper-triangular
/// `b`, for every column tuple `I`.
pub fn lemma48_report(n: usize, m: usize, p: usize) -> Result<Vec<Lemma48Case>> {
    if p == 0 || p > n || n - p + 1 > m {
        return Err(Error::Precondition(format!(
            "need 1 <= p <= n and n - p + 1 <= m, got n = {n}, m = {m}, p = {p}"
        )));
    }
    let x = generic(n, m);
    let b = upper_group(n);
    let bx = b.matrix_product(&x)?;
    let mut sigma = Substitution::new();
    for r in 0..n {
        for c in 0..m {
            sigma.insert(Var::coord(FRAMED, r + 1, c + 1), bx.get(r, c).clone());
        }
    }
    let chi: Polynomial = (p..=n).map(|i| Polynomial::var(Var::group(i, i))).product();
    let mut unipotent = Substitution::new();
    for i in 1..=n {
        unipotent.insert(Var::group(i, i), Polynomial::constant(BigRational::one()));
    }
    let rows: Vec<usize> = (p..=n).collect();
    increasing_tuples(m, rows.len())
        .into_iter()
        .map(|cols| {
            let f = x.det_of_minor(&rows, &cols)?;
            let moved = f.substitute(&sigma);
            Ok(Lemma48Case {
                character: moved == &chi * &f,
                unipotent: moved.substitute(&unipotent) == f,
                columns: cols,
            })
        })
        .collect()
}

pub fn lemma48_check(n: usize, m: usize, p: usize) -> Result<bool> {
    Ok(lemma48_report(n, m, p)?
        .iter()
        .all(|c| c.character && c.unipotent))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrosshansReport {
    pub n: usize,
    pub m: usize,
    pub d: u32,
    /// Standard bitableaux with at most `d` boxes.
    pub count: usize,
    /// `C(nm + d, d)`.
    pub expected: u128,
    pub rank: usize,
}

impl GrosshansReport {
    pub fn passed(&self) -> bool {
        self.count as u128 == self.expected && self.rank == self.count
    }
}

/// Standard bitableaux (rows strictly increasing, columns weakly
/// increasing, Young shape) with at most `d` boxes, on `n` rows and `m`
/// columns.
/// Row-index and column-index tableaux of one bitableau.
type TableauPair = (Vec<Vec<usize>>, Vec<Vec<usize>>);

fn standard_bitableaux(n: usize, m: usize, d: usize) -> Vec<TableauPair> {
    let mut rows: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for k in (1..=n.min(m)).rev() {
        for j in increasing_tuples(n, k) {
            for i in increasing_tuples(m, k) {
                rows.push((j.clone(), i));
            }
        }
    }
    fn rec(
        rows: &[(Vec<usize>, Vec<usize>)],
        from: usize,
        budget: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<TableauPair>,
    ) {
        out.push((
            cur.iter().map(|&k| rows[k].0.clone()).collect(),
            cur.iter().map(|&k| rows[k].1.clone()).collect(),
        ));
        for idx in from..rows.len() {
            let (j, i) = &rows[idx];
            if j.len() > budget {
                continue;
            }
            if let Some(&prev) = cur.last() {
                let (pj, pi) = &rows[prev];
                let fits =
                    pj.iter().zip(j).all(|(a, b)| a <= b) && pi.iter().zip(i).all(|(a, b)| a <= b);
                if !fits {
                    continue;
                }
            }
            cur.push(idx);
            rec(rows, idx, budget - j.len(), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&rows, 0, d, &mut Vec::new(), &mut out);
    out
}

/// Counts the standard bideterminants of degree `<= d` on a generic `n x m`
/// matrix and checks that they are linearly independent and as many as the
/// monomials of degree `<= d`.
pub fn grosshans_basis_check(n: usize, m: usize, d: u32) -> Result<GrosshansReport> {
    if n == 0 || m == 0 || n > 3 || m > 3 || d > 3 {
        return Err(Error::ResourceGuard(format!(
            "basis check limited to 1 <= n, m <= 3 and d <= 3, got ({n}, {m}, {d})"
        )));
    }
    let point = make_family(&Family::Jordan(0))?;
    let rep = build_general_rep(&RepConfig::framed(FramedQuiver::new(point, 1)?, n, m)?);
    let label = PathSequence::new(vec![FRAMED])?;
    let mut polys = Vec::new();
    for (js, is) in standard_bitableaux(n, m, d as usize) {
        debug_assert!(tableau_class(&Tableau { rows: js.clone() }).standard || js.is_empty());
        let rows = js
            .into_iter()
            .zip(is)
            .map(|(j, i)| BitableauRow::new(j, i, label.clone()))
            .collect::<Result<Vec<_>>>()?;
        polys.push(eval_bideterminant(&Bitableau::new(rows), &rep)?);
    }
    Ok(GrosshansReport {
        n,
        m,
        d,
        count: polys.len(),
        expected: binomial_count(n * m, d),
        rank: polynomial_rank(&polys),
    })
}
