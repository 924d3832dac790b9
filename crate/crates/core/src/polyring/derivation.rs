use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Polynomial, Var};

/// A derivation of the polynomial ring, determined by the images of the
/// generators. Unmapped variables are sent to zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Derivation {
    images: BTreeMap<Var, Polynomial>,
}

impl Derivation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_images(images: BTreeMap<Var, Polynomial>) -> Self {
        Self {
            images: images.into_iter().filter(|(_, p)| !p.is_zero()).collect(),
        }
    }

    pub fn set(&mut self, v: Var, image: Polynomial) {
        if image.is_zero() {
            self.images.remove(&v);
        } else {
            self.images.insert(v, image);
        }
    }

    pub fn image(&self, v: Var) -> Option<&Polynomial> {
        self.images.get(&v)
    }

    pub fn images(&self) -> &BTreeMap<Var, Polynomial> {
        &self.images
    }

    /// `D(f) = sum_v (df/dv) * D(v)`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in f.terms() {
            for &(v, e) in m.powers() {
                let Some(image) = self.images.get(&v) else {
                    continue;
                };
                let lowered = m.without_one(v).expect("variable occurs in monomial");
                let scale = c * BigRational::from_integer(BigInt::from(e));
                for (im, ic) in image.terms() {
                    out.add_term(im.mul(&lowered), ic * &scale);
                }
            }
        }
        out
    }
}
