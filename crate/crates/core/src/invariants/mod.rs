//! Degree-truncated invariant subspaces by exact linear algebra.
//!
//! The derivations of the unipotent action send coordinates to linear forms,
//! so they preserve degree and the kernel can be solved one homogeneous
//! degree at a time. For degree `e` the unknowns are the coefficients of the
//! degree-`e` monomials and every pair (derivation, image monomial) gives
//! one linear equation.

mod verify;

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::filtrep::{generator_derivations, GeneralRep};
use crate::linalg::{integer_row, nullspace, Echelon, SparseVec};
use crate::polyring::{
    count_up_to_degree, monomials_of_degree, monomials_up_to_degree, Monomial, Polynomial, Var,
};

pub use verify::{
    verify_theorem1, verify_theorem1_with, verify_theorem2, verify_theorem2_with, Theorem1Report,
    Theorem2Report,
};

/// Default cap on the number of monomials of degree `<= d`.
pub const DEFAULT_MAX_MONOMIALS: u128 = 200_000;

/// The monomials of degree `<= d` in a fixed variable set, indexed so that
/// polynomials become coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    d: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedBasis {
    pub fn new(vars: &[Var], d: u32) -> Self {
        Self::from_monomials(d, monomials_up_to_degree(vars, d))
    }

    fn from_monomials(d: u32, monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, m)| (m, k))
            .collect();
        Self {
            d,
            monomials,
            index,
        }
    }

    pub fn degree_bound(&self) -> u32 {
        self.d
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Coefficient vector of `f`, scaled to primitive integers.
    pub fn coefficients(&self, f: &Polynomial) -> Result<SparseVec> {
        let entries = f
            .terms()
            .map(|(m, c)| {
                self.index.get(m).map(|&k| (k, c.clone())).ok_or_else(|| {
                    Error::Precondition(format!(
                        "monomial {m} lies outside the degree-{} basis",
                        self.d
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(integer_row(entries))
    }

    pub fn polynomial(&self, v: &SparseVec) -> Polynomial {
        Polynomial::from_terms(v.iter().map(|(k, c)| {
            (
                self.monomials[*k].clone(),
                BigRational::from_integer(c.clone()),
            )
        }))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelOptions {
    pub max_monomials: u128,
    pub exec: Exec,
}

impl Default for KernelOptions {
    fn default() -> Self {
        Self {
            max_monomials: DEFAULT_MAX_MONOMIALS,
            exec: Exec::default(),
        }
    }
}

impl KernelOptions {
    pub fn with_exec(exec: Exec) -> Self {
        Self {
            exec,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub d: u32,
    /// `dims[e]` is the dimension of the degree-`e` invariants.
    pub dims: Vec<usize>,
    /// Basis polynomials grouped by degree, each group in reduced echelon
    /// form with respect to descending monomial order.
    pub basis: Vec<Polynomial>,
    /// Number of monomials of degree `<= d`.
    pub monomials: u128,
}

impl KernelReport {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Basis elements of degree exactly `e`.
    pub fn degree_slice(&self, e: u32) -> &[Polynomial] {
        let start: usize = self.dims[..e as usize].iter().sum();
        &self.basis[start..start + self.dims[e as usize]]
    }
}

fn check_size(nvars: usize, d: u32, max: u128) -> Result<u128> {
    let count = count_up_to_degree(nvars as u64, d as u64);
    if count > max {
        return Err(Error::ResourceGuard(format!(
            "{count} monomials of degree <= {d} in {nvars} variables exceed the limit of {max}"
        )));
    }
    Ok(count)
}

pub fn invariant_basis(rep: &GeneralRep, d: u32) -> Result<KernelReport> {
    invariant_basis_with(rep, d, KernelOptions::default())
}

/// Basis of the invariants of degree `<= d`: the joint kernel of the
/// superdiagonal derivations, solved degree by degree.
pub fn invariant_basis_with(rep: &GeneralRep, d: u32, opts: KernelOptions) -> Result<KernelReport> {
    let vars = rep.coordinates();
    let monomials = check_size(vars.len(), d, opts.max_monomials)?;
    let derivations = generator_derivations(rep);
    let mut dims = Vec::new();
    let mut basis = Vec::new();
    for e in 0..=d {
        let slice = homogeneous_kernel(vars, e, &derivations, opts.exec);
        dims.push(slice.len());
        basis.extend(slice);
    }
    Ok(KernelReport {
        d,
        dims,
        basis,
        monomials,
    })
}

fn homogeneous_kernel(
    vars: &[Var],
    e: u32,
    derivations: &[crate::polyring::Derivation],
    exec: Exec,
) -> Vec<Polynomial> {
    // Descending order puts the largest monomials first, so echelon
    // pivots are leading terms.
    let mut cols = monomials_of_degree(vars, e);
    cols.reverse();
    let images: Vec<Vec<(usize, Polynomial)>> = exec.map(&cols, |mono| {
        let f = Polynomial::monomial(mono.clone());
        derivations
            .iter()
            .enumerate()
            .map(|(k, d)| (k, d.apply(&f)))
            .filter(|(_, p)| !p.is_zero())
            .collect()
    });
    let mut rows: BTreeMap<(usize, Monomial), Vec<(usize, BigRational)>> = BTreeMap::new();
    for (col, per_derivation) in images.into_iter().enumerate() {
        for (k, image) in per_derivation {
            for (m, c) in image.terms() {
                rows.entry((k, m.clone()))
                    .or_default()
                    .push((col, c.clone()));
            }
        }
    }
    let kernel = nullspace(rows.into_values().map(integer_row), cols.len());
    let basis = GradedBasis::from_monomials(e, cols);
    Echelon::from_rows(kernel)
        .rref()
        .iter()
        .map(|v| basis.polynomial(v))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanVerdict {
    Equal,
    ASubsetB,
    BSubsetA,
    Incomparable,
}

impl SpanVerdict {
    pub fn label(self) -> &'static str {
        match self {
            SpanVerdict::Equal => "equal",
            SpanVerdict::ASubsetB => "A<B",
            SpanVerdict::BSubsetA => "B<A",
            SpanVerdict::Incomparable => "incomparable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanComparison {
    pub verdict: SpanVerdict,
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank_union: usize,
    /// An element of `B` outside `span(A)`, reduced modulo `span(A)`.
    pub b_outside_a: Option<Polynomial>,
    /// An element of `A` outside `span(B)`, reduced modulo `span(B)`.
    pub a_outside_b: Option<Polynomial>,
}

impl SpanComparison {
    /// The witness for a strict containment, or `B`'s witness when the
    /// spans are incomparable.
    pub fn witness(&self) -> Option<&Polynomial> {
        match self.verdict {
            SpanVerdict::BSubsetA => self.a_outside_b.as_ref(),
            _ => self.b_outside_a.as_ref(),
        }
    }
}

/// Compares the rational spans of `a` and `b`. Witnesses are residues
/// modulo the other span, with monomials ordered descending, so they
/// contain no leading monomial of that span.
pub fn span_compare(a: &[Polynomial], b: &[Polynomial], d: u32) -> Result<SpanComparison> {
    let mut monos: Vec<Monomial> = a
        .iter()
        .chain(b)
        .flat_map(|f| f.terms().map(|(m, _)| m.clone()))
        .collect();
    if let Some(m) = monos.iter().find(|m| m.degree() > d) {
        return Err(Error::Precondition(format!(
            "monomial {m} has degree above {d}"
        )));
    }
    monos.sort_by(|x, y| y.cmp(x));
    monos.dedup();
    let basis = GradedBasis::from_monomials(d, monos);
    let va = a
        .iter()
        .map(|f| basis.coefficients(f))
        .collect::<Result<Vec<_>>>()?;
    let vb = b
        .iter()
        .map(|f| basis.coefficients(f))
        .collect::<Result<Vec<_>>>()?;
    let ea = Echelon::from_rows(va.iter().cloned());
    let eb = Echelon::from_rows(vb.iter().cloned());
    let outside = |vs: &[SparseVec], other: &Echelon| {
        vs.iter()
            .map(|v| other.reduce(v.clone()))
            .find(|r| !r.is_empty())
            .map(|r| basis.polynomial(&r))
    };
    let b_outside_a = outside(&vb, &ea);
    let a_outside_b = outside(&va, &eb);
    let mut union = ea.clone();
    for v in &vb {
        union.insert(v.clone());
    }
    let verdict = match (a_outside_b.is_some(), b_outside_a.is_some()) {
        (false, false) => SpanVerdict::Equal,
        (false, true) => SpanVerdict::ASubsetB,
        (true, false) => SpanVerdict::BSubsetA,
        (true, true) => SpanVerdict::Incomparable,
    };
    Ok(SpanComparison {
        verdict,
        rank_a: ea.rank(),
        rank_b: eb.rank(),
        rank_union: union.rank(),
        b_outside_a,
        a_outside_b,
    })
}

/// `C(n + d, d)` as a `u128`, saturating.
pub fn binomial_count(nvars: usize, d: u32) -> u128 {
    count_up_to_degree(nvars as u64, d as u64)
}

/// All monomials of degree `<= d` in the diagonal coordinates, as
/// polynomials.
pub fn diagonal_monomials(rep: &GeneralRep, d: u32) -> Vec<Polynomial> {
    monomials_up_to_degree(rep.diagonal(), d)
        .into_iter()
        .map(Polynomial::monomial)
        .collect()
}

/// Integer rank of a list of polynomials.
pub fn polynomial_rank(fs: &[Polynomial]) -> usize {
    let mut monos: Vec<Monomial> = fs
        .iter()
        .flat_map(|f| f.terms().map(|(m, _)| m.clone()))
        .collect();
    monos.sort();
    monos.dedup();
    let d = monos.iter().map(Monomial::degree).max().unwrap_or(0);
    let basis = GradedBasis::from_monomials(d, monos);
    Echelon::from_rows(
        fs.iter()
            .map(|f| basis.coefficients(f).expect("basis covers every monomial")),
    )
    .rank()
}
