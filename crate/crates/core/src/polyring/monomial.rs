use std::cmp::Ordering;
use std::fmt;

use super::Var;

/// A power product of variables, stored sparsely as `(var, exponent)` pairs
/// sorted by variable with no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        Self {
            powers: vec![(v, 1)],
        }
    }

    /// Builds a monomial from arbitrary `(var, exponent)` pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_powers<I: IntoIterator<Item = (Var, u32)>>(powers: I) -> Self {
        let mut powers: Vec<(Var, u32)> = powers.into_iter().filter(|(_, e)| *e > 0).collect();
        powers.sort_by_key(|(v, _)| *v);
        let mut merged: Vec<(Var, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        Self { powers: merged }
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.powers
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.powers
            .binary_search_by_key(&v, |(w, _)| *w)
            .map(|i| self.powers[i].1)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.powers.iter().map(|(v, _)| *v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            let (a, ea) = self.powers[i];
            let (b, eb) = other.powers[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.powers[i..]);
        out.extend_from_slice(&other.powers[j..]);
        Monomial { powers: out }
    }

    /// Lowers the exponent of `v` by one. Returns `None` if `v` is absent.
    pub fn without_one(&self, v: Var) -> Option<Monomial> {
        let idx = self.powers.binary_search_by_key(&v, |(w, _)| *w).ok()?;
        let mut powers = self.powers.clone();
        if powers[idx].1 == 1 {
            powers.remove(idx);
        } else {
            powers[idx].1 -= 1;
        }
        Some(Monomial { powers })
    }

    /// Splits off every power of `v`: returns `(exponent, rest)`.
    pub fn split_var(&self, v: Var) -> (u32, Monomial) {
        match self.powers.binary_search_by_key(&v, |(w, _)| *w) {
            Ok(idx) => {
                let mut powers = self.powers.clone();
                let (_, e) = powers.remove(idx);
                (e, Monomial { powers })
            }
            Err(_) => (0, self.clone()),
        }
    }
}

/// Lexicographic order: the first variable (in `Var` order) on which the
/// exponents differ decides, larger exponent wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for (&(va, ea), &(vb, eb)) in self.powers.iter().zip(&other.powers) {
            match va.cmp(&vb) {
                // self carries `va` and other does not
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal if ea != eb => return ea.cmp(&eb),
                Ordering::Equal => {}
            }
        }
        self.powers.len().cmp(&other.powers.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree exactly `degree` in `vars`, ascending in
/// monomial order.
pub fn monomials_of_degree(vars: &[Var], degree: u32) -> Vec<Monomial> {
    let mut vars = vars.to_vec();
    vars.sort();
    vars.dedup();
    let mut out = Vec::new();
    let mut stack: Vec<(Var, u32)> = Vec::new();
    fill(&vars, 0, degree, &mut stack, &mut out);
    out.sort();
    out
}

fn fill(
    vars: &[Var],
    start: usize,
    left: u32,
    stack: &mut Vec<(Var, u32)>,
    out: &mut Vec<Monomial>,
) {
    if left == 0 {
        out.push(Monomial {
            powers: stack.clone(),
        });
        return;
    }
    for k in start..vars.len() {
        for e in 1..=left {
            stack.push((vars[k], e));
            fill(vars, k + 1, left - e, stack, out);
            stack.pop();
        }
    }
}

/// All monomials of total degree at most `degree`, each exactly once, in the
/// canonical order: ascending degree, then ascending monomial order.
pub fn monomials_up_to_degree(vars: &[Var], degree: u32) -> Vec<Monomial> {
    (0..=degree)
        .flat_map(|e| monomials_of_degree(vars, e))
        .collect()
}

/// Number of monomials of degree at most `degree` in `nvars` variables,
/// `C(nvars + degree, degree)`, saturating at `u128::MAX`.
pub fn count_up_to_degree(nvars: u64, degree: u64) -> u128 {
    let mut acc: u128 = 1;
    for i in 1..=degree as u128 {
        acc = match acc.checked_mul(nvars as u128 + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    acc
}
