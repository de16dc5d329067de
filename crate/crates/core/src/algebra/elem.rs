use std::collections::BTreeMap;

use serde::Serialize;

use crate::scalars::Cyclotomic;

/// A sparse element `Σ c · b δ_g` keyed by (`𝔹` index, group index).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElem {
    terms: BTreeMap<(usize, usize), Cyclotomic>,
}

impl AlgebraElem {
    pub fn zero() -> Self {
        AlgebraElem { terms: BTreeMap::new() }
    }

    pub fn basis(b: usize, g: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(b, g, &Cyclotomic::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Cyclotomic)> {
        self.terms.iter().map(|(&(b, g), c)| (b, g, c))
    }

    pub fn coeff(&self, b: usize, g: usize) -> Cyclotomic {
        self.terms.get(&(b, g)).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn add_term(&mut self, b: usize, g: usize, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((b, g)).or_insert_with(Cyclotomic::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(b, g));
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElem, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        for (&(b, g), d) in &other.terms {
            self.add_term(b, g, &(c * d));
        }
    }

    pub fn add(&self, other: &AlgebraElem) -> AlgebraElem {
        let mut e = self.clone();
        e.add_scaled(other, &Cyclotomic::one());
        e
    }

    pub fn sub(&self, other: &AlgebraElem) -> AlgebraElem {
        let mut e = self.clone();
        e.add_scaled(other, &Cyclotomic::from_int(-1));
        e
    }

    pub fn scale(&self, c: &Cyclotomic) -> AlgebraElem {
        let mut e = Self::zero();
        e.add_scaled(self, c);
        e
    }

    /// The right-weight component `self · δ_g`.
    pub fn right_component(&self, g: usize) -> AlgebraElem {
        AlgebraElem { terms: self.terms.iter().filter(|(k, _)| k.1 == g).map(|(k, c)| (*k, c.clone())).collect() }
    }

    /// Group elements `g` with a nonzero `· δ_g` component.
    pub fn right_support(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().map(|k| k.1).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// JSON form of one term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub word: String,
    pub group: String,
    pub coeff: String,
}
