//! Rewriting systems on the free algebra and their completion.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt::Write as _;

use super::word::{FreeElem, Word};
use crate::error::RewriteError;
use crate::rack::{triangle, F4};
use crate::realization::Z_SUMMANDS;
use crate::scalars::{FPoly, Rational};

/// Minimum degree bound accepted by [`complete`].
pub const MIN_DEGREE_BOUND: usize = 10;
pub const DEFAULT_DEGREE_BOUND: usize = 12;

fn w(text: &str) -> Word {
    Word::parse(text).expect("static word")
}

/// The four quadratic relations `x_j x_i + x_i x_k + x_k x_j`, `k = i ▷ j`.
pub fn quadratic_relations() -> Vec<FreeElem> {
    [
        ["x0xw", "xwx1", "x1x0"],
        ["x0xw2", "xw2xw", "xwx0"],
        ["x1xw2", "x0x1", "xw2x0"],
        ["xwxw2", "x1xw", "xw2x1"],
    ]
    .iter()
    .map(|ws| FreeElem::sum_of(ws.iter().map(|t| w(t))))
    .collect()
}

/// The relation attached to the pair `(i, j)` directly from the rack operation.
pub fn rack_quadratic(i: F4, j: F4) -> FreeElem {
    let k = triangle(i, j);
    FreeElem::sum_of([Word::from_letters(&[j, i]), Word::from_letters(&[i, k]), Word::from_letters(&[k, j])])
}

pub fn square_relations() -> Vec<FreeElem> {
    F4::ALL.iter().map(|&i| FreeElem::word(Word::from_letters(&[i, i]))).collect()
}

/// `z = (x_ω x_0 x_1)^2 + (x_1 x_ω x_0)^2 + (x_0 x_1 x_ω)^2`.
pub fn z_elem() -> FreeElem {
    FreeElem::sum_of(Z_SUMMANDS.iter().map(|s| Word::from_letters(s)))
}

/// `z' = (x_ω x_ω² x_0)^2 + (x_1 x_ω² x_ω)^2 + (x_0 x_ω² x_1)^2`.
pub fn z_prime_elem() -> FreeElem {
    FreeElem::sum_of(["xwxw2x0xwxw2x0", "x1xw2xwx1xw2xw", "x0xw2x1x0xw2x1"].iter().map(|t| w(t)))
}

/// Squares, quadratics and `z - F`: nine generators of the defining ideal.
pub fn base_relations() -> Vec<FreeElem> {
    let mut rels = square_relations();
    rels.extend(quadratic_relations());
    let mut zf = z_elem();
    zf.add_term(Word::empty(), &-&FPoly::f());
    rels.push(zf);
    rels
}

/// `base_relations` with `F` replaced by the rational `c`.
pub fn base_relations_at(c: &Rational) -> Vec<FreeElem> {
    base_relations().iter().map(|r| r.specialize(c)).collect()
}

/// A rewriting rule `lhs → rhs` with `rhs` supported on words smaller than `lhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: FreeElem,
}

/// A set of rules with lhs-minimal leading words.
#[derive(Clone, Debug)]
pub struct RuleSystem {
    rules: Vec<Rule>,
    index: HashMap<Vec<u8>, usize>,
    lhs_lengths: Vec<usize>,
    degree_bound: usize,
    completed: bool,
}

impl RuleSystem {
    fn from_rules(mut rules: Vec<Rule>, degree_bound: usize, completed: bool) -> Self {
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        let index = rules.iter().enumerate().map(|(k, r)| (r.lhs.0.clone(), k)).collect();
        let mut lhs_lengths: Vec<usize> = rules.iter().map(|r| r.lhs.len()).collect();
        lhs_lengths.sort_unstable();
        lhs_lengths.dedup();
        RuleSystem { rules, index, lhs_lengths, degree_bound, completed }
    }

    /// Orients each relation by its leading word without completing.
    pub fn from_relations(relations: &[FreeElem]) -> Result<Self, RewriteError> {
        let mut c = Completer::new(usize::MAX);
        for r in relations {
            c.pending.push(r.clone());
        }
        c.drain_pending()?;
        Ok(Self::from_rules(c.live_rules(), 0, false))
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn is_completed(&self) -> bool {
        self.completed
    }

    /// Leftmost occurrence of a leading word in `w`, as `(start, rule index)`.
    fn find_match(&self, word: &[u8]) -> Option<(usize, usize)> {
        find_match(&self.index, &self.lhs_lengths, word)
    }

    pub fn is_standard(&self, word: &Word) -> bool {
        self.find_match(&word.0).is_none()
    }

    pub fn normal_form(&self, x: &FreeElem) -> FreeElem {
        reduce(x, |word| self.find_match(word).map(|(s, k)| (s, &self.rules[k])))
    }

    pub fn normal_form_word(&self, word: &Word) -> FreeElem {
        self.normal_form(&FreeElem::word(word.clone()))
    }

    /// All standard words, in increasing order. Enumerates words avoiding every
    /// leading word up to the degree bound.
    pub fn standard_words(&self) -> Vec<Word> {
        let limit = self.degree_bound.max(1);
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..limit {
            let mut next = Vec::new();
            for base in &frontier {
                for a in 0..4u8 {
                    let mut v = base.0.clone();
                    v.push(a);
                    if !self.lhs_lengths.iter().any(|&l| l <= v.len() && self.index.contains_key(&v[v.len() - l..])) {
                        next.push(Word(v));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort();
        out
    }

    /// The standard monomials; errors unless there are exactly 72.
    pub fn standard_monomials(&self) -> Result<Vec<Word>, RewriteError> {
        let words = self.standard_words();
        if words.len() != 72 {
            return Err(RewriteError::StandardCount(words.len()));
        }
        Ok(words)
    }

    /// Substitutes `F := c` in every rule.
    pub fn specialize(&self, c: &Rational) -> RuleSystem {
        let rules = self.rules.iter().map(|r| Rule { lhs: r.lhs.clone(), rhs: r.rhs.specialize(c) }).collect();
        Self::from_rules(rules, self.degree_bound, self.completed)
    }

    /// Overlap ambiguities up to the degree bound whose two reductions differ.
    pub fn unresolved_overlaps(&self) -> Vec<(Word, FreeElem)> {
        let mut bad = Vec::new();
        for a in &self.rules {
            for b in &self.rules {
                for o in overlaps(&a.lhs.0, &b.lhs.0, self.degree_bound) {
                    let (s, word) = s_poly(a, b, o);
                    let nf = self.normal_form(&s);
                    if !nf.is_zero() {
                        bad.push((word, nf));
                    }
                }
            }
        }
        bad
    }

    /// One rule per line, `lhs -> rhs`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for r in &self.rules {
            let _ = writeln!(out, "{} -> {}", r.lhs, r.rhs);
        }
        out
    }
}

fn find_match<'a>(index: &HashMap<Vec<u8>, usize>, lengths: &[usize], word: &'a [u8]) -> Option<(usize, usize)> {
    for start in 0..word.len() {
        for &l in lengths {
            if start + l > word.len() {
                break;
            }
            if let Some(&k) = index.get(&word[start..start + l]) {
                return Some((start, k));
            }
        }
    }
    None
}

fn reduce<'r>(x: &FreeElem, find: impl Fn(&[u8]) -> Option<(usize, &'r Rule)>) -> FreeElem {
    let mut work = x.clone();
    let mut out = FreeElem::zero();
    while let Some((word, c)) = work.pop_leading() {
        match find(&word.0) {
            Some((start, rule)) => {
                let end = start + rule.lhs.len();
                for (rw, rc) in rule.rhs.terms() {
                    work.add_term(rw.wrap(&word.0[..start], &word.0[end..]), &(&c * rc));
                }
            }
            None => out.add_term(word, &c),
        }
    }
    out
}

/// Lengths `o` of proper overlaps where a suffix of `a` equals a prefix of `b`
/// and the overlap word has length at most `bound`.
fn overlaps(a: &[u8], b: &[u8], bound: usize) -> Vec<usize> {
    let max = a.len().min(b.len());
    (1..max)
        .filter(|&o| a.len() + b.len() - o <= bound && a[a.len() - o..] == b[..o])
        .collect()
}

/// S-element for the overlap word `a · b[o..] = a[..|a|-o] · b`.
fn s_poly(a: &Rule, b: &Rule, o: usize) -> (FreeElem, Word) {
    let tail = &b.lhs.0[o..];
    let head = &a.lhs.0[..a.lhs.len() - o];
    let word = a.lhs.wrap(&[], tail);
    let s = a.rhs.wrap(&[], tail).sub(&b.rhs.wrap(head, &[]));
    (s, word)
}

struct Completer {
    rules: Vec<Option<Rule>>,
    index: HashMap<Vec<u8>, usize>,
    lengths: Vec<usize>,
    pending: Vec<FreeElem>,
    pairs: BinaryHeap<Reverse<(usize, usize, usize, usize)>>,
    bound: usize,
}

impl Completer {
    fn new(bound: usize) -> Self {
        Completer {
            rules: Vec::new(),
            index: HashMap::new(),
            lengths: Vec::new(),
            pending: Vec::new(),
            pairs: BinaryHeap::new(),
            bound,
        }
    }

    fn reduce(&self, x: &FreeElem) -> FreeElem {
        reduce(x, |word| {
            find_match(&self.index, &self.lengths, word).map(|(s, k)| (s, self.rules[k].as_ref().unwrap()))
        })
    }

    fn drain_pending(&mut self) -> Result<(), RewriteError> {
        while let Some(p) = self.pending.pop() {
            let r = self.reduce(&p);
            if !r.is_zero() {
                self.add_rule(r)?;
            }
        }
        Ok(())
    }

    fn add_rule(&mut self, p: FreeElem) -> Result<(), RewriteError> {
        let (lw, lc) = p.leading().map(|(w, c)| (w.clone(), c.clone())).unwrap();
        let c = lc
            .as_constant()
            .ok_or_else(|| RewriteError::NonUnitLeading(format!("{lc} at {lw}")))?;
        let mut rhs = p;
        rhs.pop_leading();
        let rhs = rhs.scale_rational(&(-c.recip()));
        let id = self.rules.len();

        // Rules whose leading word contains the new one are retired and re-reduced.
        let retired: Vec<usize> = self
            .rules
            .iter()
            .enumerate()
            .filter_map(|(k, r)| r.as_ref().filter(|r| contains(&r.lhs.0, &lw.0)).map(|_| k))
            .collect();
        for k in retired {
            let r = self.rules[k].take().unwrap();
            self.index.remove(&r.lhs.0);
            let mut back = r.rhs.scale_rational(&Rational::from_integer((-1).into()));
            back.add_term(r.lhs, &FPoly::one());
            self.pending.push(back);
        }

        self.index.insert(lw.0.clone(), id);
        if let Err(pos) = self.lengths.binary_search(&lw.len()) {
            self.lengths.insert(pos, lw.len());
        }
        self.rules.push(Some(Rule { lhs: lw, rhs }));
        let new_lhs = self.rules[id].as_ref().unwrap().lhs.0.clone();
        for (k, r) in self.rules.iter().enumerate() {
            let Some(r) = r else { continue };
            for o in overlaps(&new_lhs, &r.lhs.0, self.bound) {
                self.pairs.push(Reverse((new_lhs.len() + r.lhs.len() - o, id, k, o)));
            }
            if k != id {
                for o in overlaps(&r.lhs.0, &new_lhs, self.bound) {
                    self.pairs.push(Reverse((new_lhs.len() + r.lhs.len() - o, k, id, o)));
                }
            }
        }
        Ok(())
    }

    fn run(&mut self) -> Result<(), RewriteError> {
        self.drain_pending()?;
        while let Some(Reverse((_, a, b, o))) = self.pairs.pop() {
            let (Some(ra), Some(rb)) = (&self.rules[a], &self.rules[b]) else { continue };
            let (s, _) = s_poly(ra, rb, o);
            let s = self.reduce(&s);
            if !s.is_zero() {
                self.pending.push(s);
                self.drain_pending()?;
            }
        }
        Ok(())
    }

    fn live_rules(&self) -> Vec<Rule> {
        self.rules.iter().flatten().cloned().collect()
    }

    /// Fully reduces every right-hand side.
    fn interreduce(&mut self) {
        let ids: Vec<usize> = (0..self.rules.len()).filter(|&k| self.rules[k].is_some()).collect();
        for k in ids {
            let rhs = self.rules[k].as_ref().unwrap().rhs.clone();
            let red = self.reduce(&rhs);
            self.rules[k].as_mut().unwrap().rhs = red;
        }
    }
}

fn contains(hay: &[u8], needle: &[u8]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Completes the system generated by `rules` so that all overlap ambiguities
/// of length at most `degree_bound` resolve.
pub fn complete(rules: &RuleSystem, degree_bound: usize) -> Result<RuleSystem, RewriteError> {
    let relations: Vec<FreeElem> = rules
        .rules
        .iter()
        .map(|r| {
            let mut e = r.rhs.scale_rational(&Rational::from_integer((-1).into()));
            e.add_term(r.lhs.clone(), &FPoly::one());
            e
        })
        .collect();
    complete_relations(&relations, degree_bound)
}

pub fn complete_relations(relations: &[FreeElem], degree_bound: usize) -> Result<RuleSystem, RewriteError> {
    if degree_bound < MIN_DEGREE_BOUND {
        return Err(RewriteError::DegreeBound(degree_bound));
    }
    let mut c = Completer::new(degree_bound);
    c.pending.extend(relations.iter().rev().cloned());
    c.run()?;
    c.interreduce();
    Ok(RuleSystem::from_rules(c.live_rules(), degree_bound, true))
}

/// The completed system for the deformed relations with `F` symbolic.
pub fn deformed_system() -> Result<RuleSystem, RewriteError> {
    complete_relations(&base_relations(), DEFAULT_DEGREE_BOUND)
}
