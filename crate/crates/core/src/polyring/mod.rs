//! Exact sparse multivariate polynomials over the rationals, symbolic
//! matrices with polynomial entries, substitutions and derivations.

mod derivation;
mod matrix;
mod monomial;
mod polynomial;
mod var;

pub use derivation::Derivation;
pub use matrix::PolyMatrix;
pub use monomial::{count_up_to_degree, monomials_of_degree, monomials_up_to_degree, Monomial};
pub use polynomial::{Polynomial, Substitution};
pub use var::Var;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Applies `op` to `a` and `b`.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Polynomial {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Shorthand for a rational constant `num/den`.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
