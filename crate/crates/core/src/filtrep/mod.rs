//! General filtered representations and the unipotent group action.
//!
//! Every nonframed vertex carries `C^n` with the standard flag, so each
//! nonframed arrow is a generic upper-triangular `n x n` matrix. The framing
//! arrow of a framed quiver is a generic `n x m` matrix. The subgroup
//! `U_ij` at vertex `v` acts through `u_hat = I + u E_ij` by
//! `A -> u_hat A` on arrows into `v` and `A -> A u_hat^-1` on arrows out of
//! `v`; a loop gets both.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::polyring::{Derivation, PolyMatrix, Polynomial, Substitution, Var};
use crate::quiver::{FramedQuiver, PathWord, Quiver, FRAMED};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepQuiver {
    Plain(Quiver),
    Framed(FramedQuiver),
}

/// Dimension vector `(n, ..., n)` on the base vertices, plus `m` at the
/// framed vertex when there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepConfig {
    pub quiver: RepQuiver,
    pub n: usize,
    pub m: usize,
}

impl RepConfig {
    pub fn plain(quiver: Quiver, n: usize) -> Result<Self> {
        check_dim("n", n)?;
        Ok(Self {
            quiver: RepQuiver::Plain(quiver),
            n,
            m: 0,
        })
    }

    pub fn framed(quiver: FramedQuiver, n: usize, m: usize) -> Result<Self> {
        check_dim("n", n)?;
        check_dim("m", m)?;
        Ok(Self {
            quiver: RepQuiver::Framed(quiver),
            n,
            m,
        })
    }
}

fn check_dim(name: &str, value: usize) -> Result<()> {
    if value == 0 || value > u16::MAX as usize {
        return Err(Error::IndexOutOfRange(format!(
            "{name} = {value} is not a usable dimension"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralRep {
    quiver: Quiver,
    framed: bool,
    n: usize,
    m: usize,
    matrices: BTreeMap<usize, PolyMatrix>,
    coordinates: Vec<Var>,
    diagonal: Vec<Var>,
}

/// The substitution induced by `U_ij` at `vertex`, with parameter `param`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneParamAction {
    pub vertex: usize,
    pub i: usize,
    pub j: usize,
    pub param: Var,
    pub sigma: Substitution,
}

pub fn build_general_rep(cfg: &RepConfig) -> GeneralRep {
    let (quiver, framed) = match &cfg.quiver {
        RepQuiver::Plain(q) => (q.clone(), false),
        RepQuiver::Framed(fq) => (fq.full(), true),
    };
    let n = cfg.n;
    let mut matrices = BTreeMap::new();
    let mut coordinates = Vec::new();
    let mut diagonal = Vec::new();
    for a in quiver.arrows() {
        let framing = framed && a.id == FRAMED;
        let cols = if framing { cfg.m } else { n };
        let mat = PolyMatrix::from_fn(n, cols, |r, c| {
            if framing || r <= c {
                Polynomial::var(Var::coord(a.id, r + 1, c + 1))
            } else {
                Polynomial::zero()
            }
        });
        for r in 1..=n {
            for c in 1..=cols {
                if framing || r <= c {
                    coordinates.push(Var::coord(a.id, r, c));
                    if !framing && r == c {
                        diagonal.push(Var::coord(a.id, r, c));
                    }
                }
            }
        }
        matrices.insert(a.id, mat);
    }
    coordinates.sort();
    diagonal.sort();
    GeneralRep {
        quiver,
        framed,
        n,
        m: cfg.m,
        matrices,
        coordinates,
        diagonal,
    }
}

impl GeneralRep {
    /// The quiver whose arrows carry matrices, framing included.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn is_framed(&self) -> bool {
        self.framed
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Framed vertex dimension; `0` for plain representations.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix(&self, arrow: usize) -> Option<&PolyMatrix> {
        self.matrices.get(&arrow)
    }

    pub fn matrices(&self) -> &BTreeMap<usize, PolyMatrix> {
        &self.matrices
    }

    /// All coordinate variables, sorted.
    pub fn coordinates(&self) -> &[Var] {
        &self.coordinates
    }

    /// Diagonal coordinates of the nonframed arrows, sorted.
    pub fn diagonal(&self) -> &[Var] {
        &self.diagonal
    }

    /// Vertices carrying a unipotent factor: all but the framed vertex.
    pub fn acting_vertices(&self) -> Vec<usize> {
        self.quiver
            .vertices()
            .iter()
            .map(|v| v.id)
            .filter(|&v| !(self.framed && v == FRAMED))
            .collect()
    }

    fn dim_at(&self, vertex: usize) -> usize {
        if self.framed && vertex == FRAMED {
            self.m
        } else {
            self.n
        }
    }

    /// Polynomial at 1-based entry `(r, c)` of an arrow matrix; zero below
    /// the diagonal of nonframed arrows.
    fn entry(&self, arrow: usize, r: usize, c: usize) -> Polynomial {
        self.matrices[&arrow].get(r - 1, c - 1).clone()
    }

    fn is_coord(&self, arrow: usize, r: usize, c: usize) -> bool {
        (self.framed && arrow == FRAMED) || r <= c
    }

    fn check_generator(&self, v: usize, i: usize, j: usize) -> Result<()> {
        if self.quiver.vertex(v).is_none() || (self.framed && v == FRAMED) {
            return Err(Error::IndexOutOfRange(format!(
                "vertex {v} carries no unipotent factor"
            )));
        }
        if !(1 <= i && i < j && j <= self.n) {
            return Err(Error::IndexOutOfRange(format!(
                "need 1 <= i < j <= {}, got ({i}, {j})",
                self.n
            )));
        }
        Ok(())
    }

    /// Superdiagonal generators `(v, i, i+1)` of the unipotent Lie algebra.
    pub fn generators(&self) -> Vec<(usize, usize, usize)> {
        self.acting_vertices()
            .into_iter()
            .flat_map(|v| (1..self.n).map(move |i| (v, i, i + 1)))
            .collect()
    }

    /// Every root generator `(v, i, j)`, `i < j`.
    pub fn all_root_generators(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        self.acting_vertices()
            .into_iter()
            .flat_map(|v| (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (v, i, j))))
            .collect()
    }

    /// Rejects polynomials mentioning variables that are not coordinates.
    pub fn check_vars(&self, f: &Polynomial) -> Result<()> {
        for v in f.vars() {
            if self.coordinates.binary_search(&v).is_err() {
                return Err(Error::ForeignVariable(v.to_string()));
            }
        }
        Ok(())
    }
}

/// `U_ij` at `v` as a substitution, computed from the matrix products
/// `u_hat A`, `A u_hat^-1`, `u_hat A u_hat^-1`.
pub fn one_param_substitution(
    rep: &GeneralRep,
    v: usize,
    i: usize,
    j: usize,
) -> Result<OneParamAction> {
    rep.check_generator(v, i, j)?;
    let param = Var::param(v, i, j);
    let u = Polynomial::var(param);
    let elementary = |sign: i64| {
        let mut e = PolyMatrix::identity(rep.n);
        e.set(i - 1, j - 1, &u * &Polynomial::integer(sign));
        e
    };
    let (left, right) = (elementary(1), elementary(-1));
    let mut sigma = Substitution::new();
    for a in rep.quiver.arrows() {
        if a.head != v && a.tail != v {
            continue;
        }
        let mut image = rep.matrices[&a.id].clone();
        if a.head == v {
            image = left.matrix_product(&image)?;
        }
        if a.tail == v {
            image = image.matrix_product(&right)?;
        }
        for r in 1..=image.rows() {
            for c in 1..=image.cols() {
                if !rep.is_coord(a.id, r, c) {
                    continue;
                }
                let new = image.get(r - 1, c - 1);
                if *new != rep.entry(a.id, r, c) {
                    sigma.insert(Var::coord(a.id, r, c), new.clone());
                }
            }
        }
    }
    Ok(OneParamAction {
        vertex: v,
        i,
        j,
        param,
        sigma,
    })
}

/// Infinitesimal action of `U_ij` at `v`, written out entrywise: an arrow
/// into `v` adds row `j` to row `i`; an arrow out of `v` subtracts column `i`
/// from column `j`.
pub fn action_derivation(rep: &GeneralRep, v: usize, i: usize, j: usize) -> Result<Derivation> {
    rep.check_generator(v, i, j)?;
    let mut images: BTreeMap<Var, Polynomial> = BTreeMap::new();
    for a in rep.quiver.arrows() {
        let cols = rep.dim_at(a.tail);
        if a.head == v {
            for c in 1..=cols {
                if rep.is_coord(a.id, i, c) {
                    *images.entry(Var::coord(a.id, i, c)).or_default() += rep.entry(a.id, j, c);
                }
            }
        }
        if a.tail == v {
            for r in 1..=rep.n {
                if rep.is_coord(a.id, r, j) {
                    *images.entry(Var::coord(a.id, r, j)).or_default() -= rep.entry(a.id, r, i);
                }
            }
        }
    }
    Ok(Derivation::from_images(images))
}

/// Superdiagonal derivations, in the order of [`GeneralRep::generators`].
pub fn generator_derivations(rep: &GeneralRep) -> Vec<Derivation> {
    rep.generators()
        .into_iter()
        .map(|(v, i, j)| action_derivation(rep, v, i, j).expect("generator indices are valid"))
        .collect()
}

/// Product of the arrow matrices along `p`, last arrow leftmost.
pub fn path_matrix(rep: &GeneralRep, p: &PathWord) -> Result<PolyMatrix> {
    let p = PathWord::new(&rep.quiver, p.source(), p.arrows().to_vec())?;
    let mut acc = PolyMatrix::identity(rep.dim_at(p.source()));
    for id in p.arrows() {
        acc = rep.matrices[id].matrix_product(&acc)?;
    }
    Ok(acc)
}

/// Outcome of the two invariance tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvarianceCheck {
    pub by_derivation: bool,
    pub by_substitution: bool,
}

/// Runs both invariance tests for every superdiagonal generator.
pub fn invariance(rep: &GeneralRep, f: &Polynomial, exec: Exec) -> Result<InvarianceCheck> {
    rep.check_vars(f)?;
    let gens = rep.generators();
    let results = exec.try_map(&gens, |&(v, i, j)| -> Result<(bool, bool)> {
        let d = action_derivation(rep, v, i, j)?.apply(f).is_zero();
        let s = one_param_substitution(rep, v, i, j)?;
        let moved: BTreeSet<Var> = s.sigma.keys().copied().collect();
        let touched = f.vars().iter().any(|x| moved.contains(x));
        Ok((d, !touched || f.substitute(&s.sigma) == *f))
    })?;
    Ok(InvarianceCheck {
        by_derivation: results.iter().all(|r| r.0),
        by_substitution: results.iter().all(|r| r.1),
    })
}

/// Invariance under the unipotent group. Both tests run; a disagreement is
/// reported as an error rather than resolved.
pub fn is_invariant(rep: &GeneralRep, f: &Polynomial) -> Result<bool> {
    is_invariant_with(rep, f, Exec::default())
}

pub fn is_invariant_with(rep: &GeneralRep, f: &Polynomial, exec: Exec) -> Result<bool> {
    let check = invariance(rep, f, exec)?;
    if check.by_derivation != check.by_substitution {
        return Err(Error::OracleDisagreement(f.to_string()));
    }
    Ok(check.by_derivation)
}
