//! The word basis `𝔹` and coordinates with respect to it.

use std::collections::HashMap;

use super::system::RuleSystem;
use super::word::{FreeElem, Word};
use crate::error::RewriteError;
use crate::rack::F4;
use crate::scalars::{FPoly, Rational};

/// The five rows `m_1 ⋯ m_5` whose products make up `𝔹`.
pub const B_ROWS: [&[&str]; 5] = [
    &["1", "x0"],
    &["1", "x1", "x1x0"],
    &["1", "xwx0x1"],
    &["1", "xw", "xwx0"],
    &["1", "xw2"],
];

/// All `2·3·2·3·2 = 72` words `m_1m_2m_3m_4m_5`, first row varying slowest.
pub fn b_words() -> Vec<Word> {
    let rows: Vec<Vec<Word>> =
        B_ROWS.iter().map(|r| r.iter().map(|t| Word::parse(t).expect("static word")).collect()).collect();
    let mut out = vec![Word::empty()];
    for row in &rows {
        out = out.iter().flat_map(|p| row.iter().map(move |m| p.concat(m))).collect();
    }
    out
}

/// A dense coordinate vector over `Q[F]`.
pub type Coords = Vec<FPoly>;

/// Sparse column form of a linear map: `cols[b]` lists the nonzero `(row, entry)`.
pub type SparseCols = Vec<Vec<(usize, FPoly)>>;

/// The basis `𝔹` of the quotient together with the change of basis from
/// standard monomials and the left multiplications by the generators.
#[derive(Clone, Debug)]
pub struct BBasis {
    system: RuleSystem,
    standard: Vec<Word>,
    std_index: HashMap<Word, usize>,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    /// `std → 𝔹` coordinates.
    t_inv: Vec<Vec<FPoly>>,
    left: [SparseCols; 4],
}

impl BBasis {
    /// Builds the change of basis for a completed system.
    pub fn new(system: RuleSystem) -> Result<Self, RewriteError> {
        let standard = system.standard_monomials()?;
        let std_index: HashMap<Word, usize> = standard.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let words = b_words();
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let n = standard.len();

        // t[s][b] = coefficient of the standard word s in NF(b).
        let mut t = vec![vec![FPoly::zero(); n]; n];
        for (b, word) in words.iter().enumerate() {
            for (s, c) in system.normal_form_word(word).terms() {
                t[std_index[s]][b] = c.clone();
            }
        }
        let t_inv = invert_constant_pivots(t).ok_or(RewriteError::SingularBasis)?;

        let mut basis = BBasis {
            system,
            standard,
            std_index,
            words,
            index,
            t_inv,
            left: [Vec::new(), Vec::new(), Vec::new(), Vec::new()],
        };
        for a in F4::ALL {
            let cols = (0..n)
                .map(|b| {
                    let prod = basis.words[b].wrap(&[a.code()], &[]);
                    let v = basis.to_b_basis(&FreeElem::word(prod));
                    sparse(&v)
                })
                .collect();
            basis.left[a.index()] = cols;
        }
        Ok(basis)
    }

    pub fn system(&self) -> &RuleSystem {
        &self.system
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, b: usize) -> &Word {
        &self.words[b]
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn standard(&self) -> &[Word] {
        &self.standard
    }

    /// Coordinates of `x` in `𝔹`, via the normal form and the inverse change of basis.
    pub fn to_b_basis(&self, x: &FreeElem) -> Coords {
        let n = self.dim();
        let nf = self.system.normal_form(x);
        let mut out = vec![FPoly::zero(); n];
        for (s, c) in nf.terms() {
            let si = self.std_index[s];
            for (b, row) in self.t_inv.iter().enumerate() {
                if !row[si].is_zero() {
                    out[b] += &(&row[si] * c);
                }
            }
        }
        out
    }

    /// Left multiplication by `x_a` in `𝔹` coordinates, as sparse columns.
    pub fn left_mul(&self, a: F4) -> &SparseCols {
        &self.left[a.index()]
    }

    /// `x_a · v`.
    pub fn apply_letter(&self, a: F4, v: &[FPoly]) -> Coords {
        apply_sparse(&self.left[a.index()], v)
    }

    /// `u · v` for a word `u`, applying its letters right to left.
    pub fn apply_word(&self, u: &Word, v: &[FPoly]) -> Coords {
        let mut cur = v.to_vec();
        for a in u.letters().rev() {
            cur = self.apply_letter(a, &cur);
        }
        cur
    }

    /// Coordinates of a basis element.
    pub fn unit(&self, b: usize) -> Coords {
        let mut v = vec![FPoly::zero(); self.dim()];
        v[b] = FPoly::one();
        v
    }

    /// Coordinates of an arbitrary word, by folding the left multiplications.
    pub fn word_coords(&self, w: &Word) -> Coords {
        let one = self.index[&Word::empty()];
        self.apply_word(w, &self.unit(one))
    }

    /// `b_u · b_v` in `𝔹` coordinates.
    pub fn product(&self, u: usize, v: usize) -> Coords {
        self.apply_word(&self.words[u], &self.unit(v))
    }

    /// Back to a free-algebra element written in `𝔹` words.
    pub fn to_elem(&self, v: &[FPoly]) -> FreeElem {
        let mut e = FreeElem::zero();
        for (b, c) in v.iter().enumerate() {
            e.add_term(self.words[b].clone(), c);
        }
        e
    }
}

pub fn sparse(v: &[FPoly]) -> Vec<(usize, FPoly)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn apply_sparse(cols: &SparseCols, v: &[FPoly]) -> Coords {
    let mut out = vec![FPoly::zero(); cols.len()];
    for (b, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (r, e) in &cols[b] {
            out[*r] += &(c * e);
        }
    }
    out
}

/// Gauss-Jordan inverse over `Q[F]`, pivoting only on nonzero constants.
/// Returns `None` when no such pivot exists in some column.
pub fn invert_constant_pivots(mut m: Vec<Vec<FPoly>>) -> Option<Vec<Vec<FPoly>>> {
    let n = m.len();
    let mut inv: Vec<Vec<FPoly>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { FPoly::one() } else { FPoly::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r][col].as_constant().is_some_and(|c| c != Rational::from_integer(0.into())))?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let c = m[col][col].as_constant().unwrap().recip();
        for x in m[col].iter_mut().chain(inv[col].iter_mut()) {
            *x = x.scale(&c);
        }
        let (prow, pinv) = (m[col].clone(), inv[col].clone());
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                if !prow[j].is_zero() {
                    m[r][j] -= &(&f * &prow[j]);
                }
                if !pinv[j].is_zero() {
                    inv[r][j] -= &(&f * &pinv[j]);
                }
            }
        }
    }
    Some(inv)
}
