//! Words in `x_0, x_1, x_ω, x_ω²` and their linear combinations with coefficients in `Q[F]`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::RewriteError;
use crate::rack::F4;
use crate::scalars::{FPoly, Rational};

/// A monomial, stored as letter codes `0, 1, 2, 3` for `x_0, x_1, x_ω, x_ω²`.
///
/// Ordered degree-lexicographically with `x_0 < x_1 < x_ω < x_ω²`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letter(i: F4) -> Word {
        Word(vec![i.code()])
    }

    pub fn from_letters(letters: &[F4]) -> Word {
        Word(letters.iter().map(|l| l.code()).collect())
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = F4> + '_ {
        self.0.iter().map(|&c| F4::new(c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `u · self · v`.
    pub fn wrap(&self, u: &[u8], v: &[u8]) -> Word {
        let mut w = Vec::with_capacity(u.len() + self.len() + v.len());
        w.extend_from_slice(u);
        w.extend_from_slice(&self.0);
        w.extend_from_slice(v);
        Word(w)
    }

    /// Parses `x0x1xwxw2` (also `xω`, `xω²`, optional spaces or `*`); `1` is the empty word.
    pub fn parse(text: &str) -> Result<Word, RewriteError> {
        let t: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if t == "1" || t.is_empty() {
            return Ok(Word::empty());
        }
        let err = || RewriteError::WordParse(text.to_string());
        let mut out = Vec::new();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            rest = rest.strip_prefix('x').ok_or_else(err)?;
            let rest2 = rest.strip_prefix('_').unwrap_or(rest);
            let (code, n) = if let Some(r) = rest2.strip_prefix("w2").or_else(|| rest2.strip_prefix("w^2")) {
                (3, rest2.len() - r.len())
            } else if let Some(r) = rest2.strip_prefix("ω²").or_else(|| rest2.strip_prefix("ω^2")) {
                (3, rest2.len() - r.len())
            } else if let Some(r) = rest2.strip_prefix('w').or_else(|| rest2.strip_prefix('ω')) {
                (2, rest2.len() - r.len())
            } else if let Some(r) = rest2.strip_prefix('0') {
                (0, rest2.len() - r.len())
            } else if let Some(r) = rest2.strip_prefix('1') {
                (1, rest2.len() - r.len())
            } else {
                return Err(err());
            };
            out.push(code);
            rest = &rest2[n..];
        }
        Ok(Word(out))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for &c in &self.0 {
            f.write_str(["x0", "x1", "xw", "xw2"][c as usize])?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite linear combination of words with coefficients in `Q[F]`. No zero
/// coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeElem {
    terms: BTreeMap<Word, FPoly>,
}

impl FreeElem {
    pub fn zero() -> Self {
        FreeElem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, FPoly::one())
    }

    pub fn term(w: Word, c: FPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(w, &c);
        e
    }

    /// Sum of words with coefficient 1.
    pub fn sum_of(words: impl IntoIterator<Item = Word>) -> Self {
        let mut e = Self::zero();
        for w in words {
            e.add_term(w, &FPoly::one());
        }
        e
    }

    pub fn parse_words(text: &[&str]) -> Result<Self, RewriteError> {
        let mut e = Self::zero();
        for t in text {
            e.add_term(Word::parse(t)?, &FPoly::one());
        }
        Ok(e)
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &FPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> FPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Largest word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &FPoly)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: &FPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn pop_leading(&mut self) -> Option<(Word, FPoly)> {
        self.terms.pop_last()
    }

    pub fn add_scaled(&mut self, other: &FreeElem, c: &FPoly) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), &(c * d));
        }
    }

    pub fn scale(&self, c: &FPoly) -> FreeElem {
        let mut e = Self::zero();
        e.add_scaled(self, c);
        e
    }

    pub fn scale_rational(&self, c: &Rational) -> FreeElem {
        self.scale(&FPoly::constant(c.clone()))
    }

    /// `u · self · v` for words `u`, `v`.
    pub fn wrap(&self, u: &[u8], v: &[u8]) -> FreeElem {
        FreeElem { terms: self.terms.iter().map(|(w, c)| (w.wrap(u, v), c.clone())).collect() }
    }

    pub fn mul(&self, other: &FreeElem) -> FreeElem {
        let mut e = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                e.add_term(a.concat(b), &(c * d));
            }
        }
        e
    }

    pub fn add(&self, other: &FreeElem) -> FreeElem {
        let mut e = self.clone();
        e.add_scaled(other, &FPoly::one());
        e
    }

    pub fn sub(&self, other: &FreeElem) -> FreeElem {
        let mut e = self.clone();
        e.add_scaled(other, &FPoly::constant(Rational::from_integer((-1).into())));
        e
    }

    /// Substitutes `F := value` in every coefficient.
    pub fn specialize(&self, value: &Rational) -> FreeElem {
        let mut e = Self::zero();
        for (w, c) in &self.terms {
            e.add_term(w.clone(), &FPoly::constant(c.eval_rational(value)));
        }
        e
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }
}

impl fmt::Display for FreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if *c == FPoly::one() {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w = Word::parse("x0x1xwxw2").unwrap();
        assert_eq!(w.0, vec![0, 1, 2, 3]);
        assert_eq!(w.to_string(), "x0x1xwxw2");
        assert_eq!(Word::parse("x_ω x_0 xω²").unwrap().0, vec![2, 0, 3]);
        assert_eq!(Word::parse("1").unwrap(), Word::empty());
        assert_eq!(Word::empty().to_string(), "1");
        assert!(Word::parse("x3").is_err());
        assert!(Word::parse("y0").is_err());
    }

    #[test]
    fn deglex_order() {
        let a = Word::parse("xw2").unwrap();
        let b = Word::parse("x0x0").unwrap();
        assert!(a < b);
        assert!(Word::parse("x0x1").unwrap() < Word::parse("x1x0").unwrap());
        assert!(Word::empty() < Word::parse("x0").unwrap());
    }

    #[test]
    fn elem_arithmetic() {
        let e = FreeElem::parse_words(&["x0", "x1"]).unwrap();
        let sq = e.mul(&e);
        assert_eq!(sq.len(), 4);
        assert!(e.sub(&e).is_zero());
        assert_eq!(e.leading().unwrap().0, &Word::parse("x1").unwrap());
        let f = FreeElem::term(Word::empty(), FPoly::f());
        assert_eq!(f.specialize(&Rational::from_integer(3.into())).coeff(&Word::empty()).as_constant().unwrap(), Rational::from_integer(3.into()));
    }
}
