use crate::error::{Error, Result};
use crate::filtrep::{build_general_rep, RepConfig};
use crate::polyring::Polynomial;
use crate::quiver::{classify, Classification, FramedQuiver, Quiver};
use crate::tableaux::{enumerate_block_standard_with, BlockStandardTerm};

use super::{
    binomial_count, diagonal_monomials, invariant_basis_with, span_compare, KernelOptions,
    KernelReport, SpanComparison, SpanVerdict,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Report {
    pub classification: Classification,
    pub n: usize,
    pub d: u32,
    pub kernel: KernelReport,
    /// `C(n |Q1| + d, d)`, the dimension of the diagonal polynomials of
    /// degree `<= d`.
    pub diagonal_dimension: u128,
    /// `A` = kernel basis, `B` = diagonal monomials.
    pub comparison: SpanComparison,
    pub consistent: bool,
}

impl Theorem1Report {
    pub fn verdict(&self) -> &'static str {
        if self.consistent {
            "CONSISTENT"
        } else {
            "INCONSISTENT"
        }
    }

    /// An invariant outside the diagonal subring, reduced modulo it.
    pub fn witness(&self) -> Option<&Polynomial> {
        self.comparison.a_outside_b.as_ref()
    }
}

pub fn verify_theorem1(q: &Quiver, n: usize, d: u32) -> Result<Theorem1Report> {
    verify_theorem1_with(q, n, d, KernelOptions::default())
}

/// Classifies `q`, computes the invariants of degree `<= d`, and checks that
/// they equal the diagonal polynomials exactly when `q` has at most two
/// pathways between any two vertices.
pub fn verify_theorem1_with(
    q: &Quiver,
    n: usize,
    d: u32,
    opts: KernelOptions,
) -> Result<Theorem1Report> {
    let classification = classify(q)?;
    let rep = build_general_rep(&RepConfig::plain(q.clone(), n)?);
    let kernel = invariant_basis_with(&rep, d, opts)?;
    let diagonal = diagonal_monomials(&rep, d);
    let comparison = span_compare(&kernel.basis, &diagonal, d)?;
    let consistent = match comparison.verdict {
        SpanVerdict::Equal => classification.is_at_most_two(),
        SpanVerdict::BSubsetA => !classification.is_at_most_two(),
        SpanVerdict::ASubsetB | SpanVerdict::Incomparable => false,
    };
    Ok(Theorem1Report {
        classification,
        n,
        d,
        diagonal_dimension: binomial_count(n * q.arrows().len(), d),
        kernel,
        comparison,
        consistent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem2Report {
    pub n: usize,
    pub m: usize,
    pub d: u32,
    pub kernel: KernelReport,
    pub generators: Vec<BlockStandardTerm>,
    /// `A` = kernel basis, `B` = generator products.
    pub comparison: SpanComparison,
}

impl Theorem2Report {
    pub fn passed(&self) -> bool {
        self.comparison.verdict == SpanVerdict::Equal
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    /// An invariant outside the generator span, reduced modulo it.
    pub fn missing_invariant(&self) -> Option<&Polynomial> {
        self.comparison.a_outside_b.as_ref()
    }

    /// A generator product that is not invariant.
    pub fn non_invariant_generator(&self) -> Option<&Polynomial> {
        self.comparison.b_outside_a.as_ref()
    }
}

pub fn verify_theorem2(fq: &FramedQuiver, n: usize, m: usize, d: u32) -> Result<Theorem2Report> {
    verify_theorem2_with(fq, n, m, d, KernelOptions::default())
}

/// Compares the invariants of degree `<= d` of the framed representation
/// with the span of diagonal monomials times block-standard bideterminants.
pub fn verify_theorem2_with(
    fq: &FramedQuiver,
    n: usize,
    m: usize,
    d: u32,
    opts: KernelOptions,
) -> Result<Theorem2Report> {
    if !classify(fq.base())?.is_at_most_two() {
        return Err(Error::Precondition(format!(
            "quiver `{}` has more than two pathways between some pair of vertices",
            fq.base().name()
        )));
    }
    let rep = build_general_rep(&RepConfig::framed(fq.clone(), n, m)?);
    let kernel = invariant_basis_with(&rep, d, opts)?;
    let generators = enumerate_block_standard_with(fq, &rep, d, opts.exec)?;
    let products: Vec<Polynomial> = generators.iter().map(|t| t.polynomial.clone()).collect();
    let comparison = span_compare(&kernel.basis, &products, d)?;
    Ok(Theorem2Report {
        n,
        m,
        d,
        kernel,
        generators,
        comparison,
    })
}
