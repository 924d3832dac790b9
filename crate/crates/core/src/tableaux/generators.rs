use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::filtrep::GeneralRep;
use crate::polyring::{monomials_up_to_degree, Monomial, Polynomial};
use crate::quiver::{enumerate_pathways, FramedQuiver, PathWord, Quiver, FRAMED};

use super::{seq_cmp, Bitableau, BitableauRow, PathSequence};

/// Strictly increasing `k`-tuples from `1..=m`, lexicographically.
pub(crate) fn increasing_tuples(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=m {
            cur.push(x);
            rec(x + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, m, k, &mut Vec::new(), &mut out);
    out
}

fn check_rep(fq: &FramedQuiver, rep: &GeneralRep) -> Result<()> {
    if !rep.is_framed() || *rep.quiver() != fq.full() {
        return Err(Error::Precondition(
            "representation does not belong to this framed quiver".into(),
        ));
    }
    Ok(())
}

/// Labels of the pathways leaving the framed vertex: the framing arrow
/// followed by each pathway of the base quiver leaving its target.
fn framed_labels(fq: &FramedQuiver) -> Result<Vec<PathSequence>> {
    let report = enumerate_pathways(fq.base())?;
    if !report.classification.is_at_most_two() {
        return Err(Error::Precondition(format!(
            "quiver `{}` has more than two pathways between some pair of vertices",
            fq.base().name()
        )));
    }
    let full: Quiver = fq.full();
    let mut labels = report
        .from_vertex(fq.target())
        .into_iter()
        .map(|p| {
            let mut arrows = vec![FRAMED];
            arrows.extend_from_slice(p.arrows());
            PathSequence::from_path(&PathWord::new(&full, FRAMED, arrows)?)
        })
        .collect::<Result<Vec<_>>>()?;
    labels.sort_by(seq_cmp);
    Ok(labels)
}

/// Rows `(p .. n | i_1 .. i_k)` with `k = n - p + 1 <= m` for every pathway
/// out of the framed vertex, ordered by label, then `p`, then columns.
pub fn enumerate_row_generators(fq: &FramedQuiver, rep: &GeneralRep) -> Result<Vec<BitableauRow>> {
    check_rep(fq, rep)?;
    let (n, m) = (rep.n(), rep.m());
    let mut out = Vec::new();
    for label in framed_labels(fq)? {
        for p in 1..=n {
            let k = n - p + 1;
            if k > m {
                continue;
            }
            for cols in increasing_tuples(m, k) {
                out.push(BitableauRow::new((p..=n).collect(), cols, label.clone())?);
            }
        }
    }
    Ok(out)
}

/// A diagonal monomial times a block-standard bideterminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStandardTerm {
    pub diagonal: Monomial,
    pub bitableau: Bitableau,
    pub polynomial: Polynomial,
}

/// Whether `lower` may sit directly below `upper` in one block: rows are
/// sorted so lengths weakly decrease, and the column-side entries must weakly
/// increase down each column. Row sides `(p..n)` always do.
fn stackable(upper: &BitableauRow, lower: &BitableauRow) -> bool {
    upper.i.iter().zip(&lower.i).all(|(a, b)| a <= b)
}

/// Every block-standard bitableau built from the row generators with total
/// degree `<= budget`, in label-then-row order.
fn block_standard_bitableaux(rows: &[BitableauRow], budget: usize) -> Vec<Bitableau> {
    let mut by_label: BTreeMap<usize, Vec<&BitableauRow>> = BTreeMap::new();
    let mut label_order: Vec<&PathSequence> = Vec::new();
    for r in rows {
        let k = match label_order.iter().position(|l| **l == r.label) {
            Some(k) => k,
            None => {
                label_order.push(&r.label);
                label_order.len() - 1
            }
        };
        by_label.entry(k).or_default().push(r);
    }
    let blocks: Vec<Vec<&BitableauRow>> = by_label.into_values().collect();

    // Blocks are chosen label by label; within a block rows are a weakly
    // increasing index sequence into the generator list.
    fn rec<'a>(
        blocks: &[Vec<&'a BitableauRow>],
        block: usize,
        from: usize,
        budget: usize,
        cur: &mut Vec<&'a BitableauRow>,
        out: &mut Vec<Bitableau>,
    ) {
        if block == blocks.len() {
            out.push(Bitableau::new(cur.iter().map(|r| (*r).clone()).collect()));
            return;
        }
        rec(blocks, block + 1, 0, budget, cur, out);
        let gens = &blocks[block];
        for (idx, &row) in gens.iter().enumerate().skip(from) {
            if row.degree() > budget {
                continue;
            }
            if let Some(prev) = cur.last() {
                if prev.label == row.label && !stackable(prev, row) {
                    continue;
                }
            }
            cur.push(row);
            rec(blocks, block, idx, budget - row.degree(), cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    rec(&blocks, 0, 0, budget, &mut Vec::new(), &mut out);
    out
}

pub fn enumerate_block_standard(
    fq: &FramedQuiver,
    rep: &GeneralRep,
    d: u32,
) -> Result<Vec<BlockStandardTerm>> {
    enumerate_block_standard_with(fq, rep, d, Exec::default())
}

/// All products (diagonal monomial) x (block-standard bideterminant of row
/// generators) of total degree `<= d`. Each (monomial, bitableau) pair
/// appears once.
pub fn enumerate_block_standard_with(
    fq: &FramedQuiver,
    rep: &GeneralRep,
    d: u32,
    exec: Exec,
) -> Result<Vec<BlockStandardTerm>> {
    let gens = enumerate_row_generators(fq, rep)?;
    let row_values = exec.try_map(&gens, |r| r.evaluate(rep))?;
    let value_of: BTreeMap<&BitableauRow, &Polynomial> = gens.iter().zip(&row_values).collect();
    let tableaux = block_standard_bitableaux(&gens, d as usize);
    let diagonal = monomials_up_to_degree(rep.diagonal(), d);
    let evaluated: Vec<Vec<BlockStandardTerm>> = exec.map(&tableaux, |bt| {
        let value: Polynomial = bt.rows().iter().map(|r| value_of[r].clone()).product();
        let room = d - bt.degree() as u32;
        diagonal
            .iter()
            .filter(|m| m.degree() <= room)
            .map(|m| BlockStandardTerm {
                diagonal: m.clone(),
                bitableau: bt.clone(),
                polynomial: value.mul_monomial(m),
            })
            .collect()
    });
    Ok(evaluated.into_iter().flatten().collect())
}
