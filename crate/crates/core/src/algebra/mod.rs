//! The algebra `A = span{b δ_g : b ∈ 𝔹, g ∈ G}` with `δ_g x_i = x_i δ_{g_i g}` and `z = f`.

mod elem;
mod integrals;

pub use elem::{AlgebraElem, TermJson};
pub use integrals::{distinguished_grouplike, left_integrals, right_integrals};

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{AlgebraError, RealizationError};
use crate::rack::F4;
use crate::realization::{ker_chi_z, validate_realization, z_weight_is_e, YDRealization, TOP_WORD};
use crate::report::{Check, Report};
use crate::rewrite::{shared_basis, BBasis, FreeElem, Word};
use crate::scalars::{Cyclotomic, FPoly};

/// Sparse column of evaluated coordinates.
pub type EvalCol = Vec<(usize, Cyclotomic)>;

/// Words `b_1, …, b_5` spanning the weight-`e` part of `𝔹` together with `1`.
pub const B_WORDS: [&str; 5] = [
    "x0x1x0xwx0xw2",
    "x0xwx0x1xwxw2",
    "x1x0xwx0x1xw2",
    "x1xwx0x1xwx0",
    "x0x1xwx0x1xw",
];

pub const M_TOP: &str = "x0x1x0xwx0x1xwx0xw2";

/// Everything needed to multiply in `A` for one realization and one `λ`.
pub struct AlgebraContext {
    realization: YDRealization,
    lambda: Cyclotomic,
    basis: &'static BBasis,
    f_values: Vec<Cyclotomic>,
    f_class: Vec<usize>,
    class_values: Vec<Cyclotomic>,
    b_weight: Vec<usize>,
    letter_index: [usize; 4],
    empty_index: usize,
    ker: Vec<usize>,
    in_ker: Vec<bool>,
    symbolic: Vec<OnceLock<Vec<(usize, FPoly)>>>,
    evaluated: Vec<Vec<OnceLock<EvalCol>>>,
    left_eval: Vec<[Vec<EvalCol>; 4]>,
}

impl std::fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraContext")
            .field("group_order", &self.realization.group().size())
            .field("lambda", &self.lambda.to_string())
            .finish()
    }
}

impl AlgebraContext {
    pub fn new(realization: YDRealization, lambda: Cyclotomic) -> Result<Self, AlgebraError> {
        if let Some(c) = validate_realization(&realization).first_failure() {
            return Err(RealizationError::Invalid(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())).into());
        }
        let chi_z = realization.chi_z();
        let deformed = !lambda.is_zero() && !chi_z.is_trivial();
        if deformed && !z_weight_is_e(&realization)? {
            return Err(AlgebraError::ZNotWeightE);
        }
        let basis = shared_basis()?;
        let group = realization.group();
        let n = basis.dim();

        let f_values: Vec<Cyclotomic> = group
            .elements()
            .map(|g| &lambda * &(&Cyclotomic::one() - &chi_z.turn(g).inv().value()))
            .collect();
        let mut class_values: Vec<Cyclotomic> = Vec::new();
        let f_class = f_values
            .iter()
            .map(|v| match class_values.iter().position(|c| c == v) {
                Some(k) => k,
                None => {
                    class_values.push(v.clone());
                    class_values.len() - 1
                }
            })
            .collect();

        let b_weight = basis
            .words()
            .iter()
            .map(|w| realization.word_weight(&w.letters().collect::<Vec<_>>()))
            .collect();
        let letter_index = F4::ALL.map(|a| basis.index_of(&Word::letter(a)).expect("letters lie in the basis"));
        let empty_index = basis.index_of(&Word::empty()).expect("1 lies in the basis");
        let ker = ker_chi_z(&realization);
        let mut in_ker = vec![false; group.size()];
        for &h in &ker {
            in_ker[h] = true;
        }
        let left_eval = class_values
            .iter()
            .map(|v| {
                F4::ALL.map(|a| {
                    basis
                        .left_mul(a)
                        .iter()
                        .map(|col| eval_col(col, v))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let symbolic = (0..n * n).map(|_| OnceLock::new()).collect();
        let evaluated = class_values.iter().map(|_| (0..n * n).map(|_| OnceLock::new()).collect()).collect();

        Ok(AlgebraContext {
            realization,
            lambda,
            basis,
            f_values,
            f_class,
            class_values,
            b_weight,
            letter_index,
            empty_index,
            ker,
            in_ker,
            symbolic,
            evaluated,
            left_eval,
        })
    }

    pub fn realization(&self) -> &YDRealization {
        &self.realization
    }

    pub fn group(&self) -> &crate::realization::FiniteGroup {
        self.realization.group()
    }

    pub fn lambda(&self) -> &Cyclotomic {
        &self.lambda
    }

    pub fn basis(&self) -> &'static BBasis {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim() * self.group().size()
    }

    /// `f(g) = λ(1 - χ_z(g)^{-1})`.
    pub fn f(&self, g: usize) -> &Cyclotomic {
        &self.f_values[g]
    }

    /// `λ = 0` or `χ_z = 1`, i.e. `f = 0`.
    pub fn is_bosonization(&self) -> bool {
        self.class_values.iter().all(|v| v.is_zero())
    }

    pub fn ker_chi_z(&self) -> &[usize] {
        &self.ker
    }

    pub fn in_ker(&self, g: usize) -> bool {
        self.in_ker[g]
    }

    /// Weight of the `𝔹` word with index `b`.
    pub fn b_weight(&self, b: usize) -> usize {
        self.b_weight[b]
    }

    pub fn letter_index(&self, a: F4) -> usize {
        self.letter_index[a.index()]
    }

    pub fn empty_index(&self) -> usize {
        self.empty_index
    }

    pub fn basis_index(&self, word: &str) -> Option<usize> {
        Word::parse(word).ok().and_then(|w| self.basis.index_of(&w))
    }

    /// `x_a` acting on `M_g` in `𝔹 δ_g` coordinates, as sparse columns.
    pub fn left_letter(&self, a: F4, g: usize) -> &[EvalCol] {
        &self.left_eval[self.f_class[g]][a.index()]
    }

    fn symbolic_product(&self, u: usize, v: usize) -> &[(usize, FPoly)] {
        let n = self.basis.dim();
        self.symbolic[u * n + v].get_or_init(|| crate::rewrite::sparse(&self.basis.product(u, v)))
    }

    /// `b_u · b_v` in `𝔹` coordinates with `F := f(h)`.
    pub fn product_at(&self, u: usize, v: usize, h: usize) -> &[(usize, Cyclotomic)] {
        let n = self.basis.dim();
        let class = self.f_class[h];
        self.evaluated[class][u * n + v].get_or_init(|| eval_col(self.symbolic_product(u, v), &self.class_values[class]))
    }

    /// `(b_u δ_g)(b_v δ_h) = [g = wt(b_v) h] b_u b_v|_{F = f(h)} δ_h`.
    pub fn mul(&self, a: &AlgebraElem, b: &AlgebraElem) -> AlgebraElem {
        let grp = self.group();
        let mut by_left: BTreeMap<usize, Vec<(usize, &Cyclotomic)>> = BTreeMap::new();
        for (u, g, c) in a.terms() {
            by_left.entry(g).or_default().push((u, c));
        }
        let mut out = AlgebraElem::zero();
        for (v, h, d) in b.terms() {
            let g = grp.mul(self.b_weight[v], h);
            let Some(lefts) = by_left.get(&g) else { continue };
            for &(u, c) in lefts {
                let cd = c * d;
                for (w, e) in self.product_at(u, v, h) {
                    out.add_term(*w, h, &(&cd * e));
                }
            }
        }
        out
    }

    pub fn delta(&self, g: usize) -> AlgebraElem {
        AlgebraElem::basis(self.empty_index, g)
    }

    /// `Σ_g b δ_g`.
    pub fn word_sum(&self, b: usize) -> AlgebraElem {
        let mut e = AlgebraElem::zero();
        for g in self.group().elements() {
            e.add_term(b, g, &Cyclotomic::one());
        }
        e
    }

    pub fn one(&self) -> AlgebraElem {
        self.word_sum(self.empty_index)
    }

    pub fn x(&self, a: F4) -> AlgebraElem {
        self.word_sum(self.letter_index(a))
    }

    /// `f = Σ_g f(g) δ_g`.
    pub fn f_elem(&self) -> AlgebraElem {
        let mut e = AlgebraElem::zero();
        for g in self.group().elements() {
            e.add_term(self.empty_index, g, &self.f_values[g]);
        }
        e
    }

    /// Coordinates of `w δ_g` in `M_g = 𝔹 δ_g`, folding letters right to left.
    pub fn word_vector(&self, word: &Word, g: usize) -> Vec<Cyclotomic> {
        let n = self.basis.dim();
        let mut v = vec![Cyclotomic::zero(); n];
        v[self.empty_index] = Cyclotomic::one();
        for a in word.letters().rev() {
            v = apply_cols(self.left_letter(a, g), &v);
        }
        v
    }

    /// `x δ_g` for a free-algebra element, with `F := f(g)` in its coefficients.
    pub fn free_vector(&self, x: &FreeElem, g: usize) -> Vec<Cyclotomic> {
        let n = self.basis.dim();
        let mut out = vec![Cyclotomic::zero(); n];
        for (w, c) in x.terms() {
            let c = c.eval(&self.f_values[g]);
            let v = self.word_vector(w, g);
            crate::linalg::vec_add_scaled(&mut out, &v, &c);
        }
        out
    }

    pub fn vector_to_elem(&self, v: &[Cyclotomic], g: usize) -> AlgebraElem {
        let mut e = AlgebraElem::zero();
        for (b, c) in v.iter().enumerate() {
            e.add_term(b, g, c);
        }
        e
    }

    /// The five words `b_i` as elements summed over all `δ_g`.
    pub fn b_elements(&self) -> Result<[AlgebraElem; 5], AlgebraError> {
        if !z_weight_is_e(&self.realization)? {
            return Err(AlgebraError::ZNotWeightE);
        }
        Ok(B_WORDS.map(|w| self.word_sum(self.basis_index(w).expect("b_i lie in the basis"))))
    }

    pub fn b_indices(&self) -> [usize; 5] {
        B_WORDS.map(|w| self.basis_index(w).expect("b_i lie in the basis"))
    }

    /// `ε(b δ_g) = [b = 1][g = e]`.
    pub fn counit(&self, a: &AlgebraElem) -> Cyclotomic {
        a.coeff(self.empty_index, self.group().identity())
    }

    /// `χ_g(b δ_h) = [b = 1][h = g]`.
    pub fn chi_g(&self, g: usize, a: &AlgebraElem) -> Cyclotomic {
        a.coeff(self.empty_index, g)
    }

    /// Whether `χ_g` is multiplicative. Checks `χ_g(a y) = χ_g(a) χ_g(y)` for
    /// every generator `a` and every basis element `y`; a witness on failure.
    pub fn chi_g_is_algebra_map(&self, g: usize) -> (bool, Option<String>) {
        let grp = self.group();
        let n = self.basis.dim();
        let mut gens: Vec<(String, AlgebraElem)> =
            F4::ALL.iter().map(|&a| (format!("x{}", a.symbol().replace('^', "")), self.x(a))).collect();
        for h in grp.elements() {
            gens.push((format!("delta_{}", grp.label(h)), self.delta(h)));
        }
        for (name, a) in &gens {
            let ca = self.chi_g(g, a);
            // χ_g(y) vanishes unless y ∈ A δ_g, and so does χ_g(a y).
            for b in 0..n {
                let y = AlgebraElem::basis(b, g);
                let lhs = self.chi_g(g, &self.mul(a, &y));
                let rhs = &ca * &self.chi_g(g, &y);
                if lhs != rhs {
                    return (
                        false,
                        Some(format!("chi({name} * {}) = {lhs} but product of values is {rhs}", self.basis.word(b))),
                    );
                }
            }
        }
        (true, None)
    }

    /// `(m_top summed over δ's, g_top)`.
    pub fn m_top_and_gtop(&self) -> (AlgebraElem, usize) {
        let b = self.basis_index(M_TOP).expect("m_top lies in the basis");
        (self.word_sum(b), self.realization.word_weight(&TOP_WORD))
    }

    pub fn m_top_index(&self) -> usize {
        self.basis_index(M_TOP).expect("m_top lies in the basis")
    }

    /// JSON terms, sorted by group label then word.
    pub fn elem_json(&self, a: &AlgebraElem) -> Vec<TermJson> {
        let grp = self.group();
        a.terms()
            .map(|(b, g, c)| TermJson {
                word: spaced(self.basis.word(b)),
                group: grp.label(g).to_string(),
                coeff: c.to_string(),
            })
            .collect()
    }
}

pub fn spaced(w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.letters().map(|a| format!("x{}", a.symbol().replace('^', ""))).collect::<Vec<_>>().join(" ")
}

pub fn eval_col(col: &[(usize, FPoly)], value: &Cyclotomic) -> EvalCol {
    col.iter()
        .filter_map(|(r, p)| {
            let v = p.eval(value);
            (!v.is_zero()).then_some((*r, v))
        })
        .collect()
}

pub fn apply_cols(cols: &[EvalCol], v: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let mut out = vec![Cyclotomic::zero(); cols.len()];
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

/// The 25 products `b_i b_j` as `(i, j, Some((sign, k)))` for `b_i b_j = sign · b_k f`, or `None` for 0.
pub const BIBJ_TABLE: [(usize, usize, Option<(i64, usize)>); 25] = [
    (1, 1, Some((-1, 1))),
    (1, 2, None),
    (1, 3, None),
    (1, 4, None),
    (1, 5, Some((1, 1))),
    (2, 1, None),
    (2, 2, Some((-1, 2))),
    (2, 3, None),
    (2, 4, None),
    (2, 5, None),
    (3, 1, None),
    (3, 2, None),
    (3, 3, Some((1, 3))),
    (3, 4, Some((1, 3))),
    (3, 5, None),
    (4, 1, None),
    (4, 2, None),
    (4, 3, Some((1, 3))),
    (4, 4, Some((1, 4))),
    (4, 5, None),
    (5, 1, Some((1, 1))),
    (5, 2, None),
    (5, 3, None),
    (5, 4, None),
    (5, 5, Some((1, 5))),
];

/// Checks each of the 25 products `b_i b_j`.
pub fn verify_bibj(ctx: &AlgebraContext) -> Result<Report, AlgebraError> {
    let b = ctx.b_elements()?;
    let f = ctx.f_elem();
    let mut report = Report::new("bibj");
    for (i, j, rhs) in BIBJ_TABLE {
        let got = ctx.mul(&b[i - 1], &b[j - 1]);
        let (expect, text) = match rhs {
            None => (AlgebraElem::zero(), "0".to_string()),
            Some((s, k)) => (
                ctx.mul(&b[k - 1], &f).scale(&Cyclotomic::from_int(s)),
                format!("{}b{k} f", if s < 0 { "-" } else { "" }),
            ),
        };
        report.push(Check::from_result(format!("b{i} b{j} = {text}"), got == expect, || {
            format!("difference has {} terms", got.sub(&expect).len())
        }));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::{extend_realization, mk_affine_realization, Character, FiniteGroup};

    fn extended(lambda: i64) -> AlgebraContext {
        let base = mk_affine_realization(1, 0).unwrap();
        let r = extend_realization(&base, &FiniteGroup::cyclic(4), &Character::cyclic(4, 1)).unwrap();
        AlgebraContext::new(r, Cyclotomic::from_int(lambda)).unwrap()
    }

    #[test]
    fn f_values_and_dimension() {
        let ctx = extended(1);
        assert_eq!(ctx.dim(), 6912);
        assert!(ctx.f(ctx.group().identity()).is_zero());
        for g in ctx.group().elements() {
            assert_eq!(ctx.f(g).is_zero(), ctx.in_ker(g));
        }
        assert!(!ctx.is_bosonization());
        let affine = AlgebraContext::new(mk_affine_realization(1, 0).unwrap(), Cyclotomic::one()).unwrap();
        assert!(affine.is_bosonization());
        assert_eq!(affine.dim(), 1728);
    }

    #[test]
    fn delta_products() {
        let ctx = extended(1);
        let (a, b) = (ctx.delta(0), ctx.delta(1));
        assert!(ctx.mul(&a, &b).is_zero());
        assert_eq!(ctx.mul(&a, &a), a);
        let one = ctx.one();
        let x0 = ctx.x(F4::ZERO);
        assert_eq!(ctx.mul(&one, &x0), x0);
        assert_eq!(ctx.mul(&x0, &one), x0);
    }

    #[test]
    fn some_bibj_products() {
        let ctx = extended(1);
        let b = ctx.b_elements().unwrap();
        let f = ctx.f_elem();
        assert_eq!(ctx.mul(&b[2], &b[3]), ctx.mul(&b[2], &f));
        assert_eq!(ctx.mul(&b[0], &b[0]), ctx.mul(&b[0], &f).scale(&Cyclotomic::from_int(-1)));
        assert!(ctx.mul(&b[1], &b[4]).is_zero());
        for (k, idx) in ctx.b_indices().iter().enumerate() {
            assert_eq!(ctx.b_weight(*idx), ctx.group().identity(), "b{}", k + 1);
            assert_eq!(ctx.basis().word(*idx).len(), 6);
        }
    }

    #[test]
    fn counit_values() {
        let ctx = extended(1);
        assert!(ctx.counit(&ctx.one()).is_one());
        assert!(ctx.counit(&ctx.x(F4::ZERO)).is_zero());
        assert!(ctx.chi_g(ctx.group().identity(), &ctx.one()).is_one());
    }

    #[test]
    fn characters_as_algebra_maps() {
        let ctx = extended(1);
        let ker = ctx.ker_chi_z().to_vec();
        let outside = ctx.group().elements().find(|g| !ctx.in_ker(*g)).unwrap();
        assert!(ctx.chi_g_is_algebra_map(ker[3]).0);
        let (ok, witness) = ctx.chi_g_is_algebra_map(outside);
        assert!(!ok);
        assert!(witness.is_some());
    }

    #[test]
    fn m_top_weight() {
        let ctx = extended(1);
        let (m, gtop) = ctx.m_top_and_gtop();
        let idx = ctx.m_top_index();
        assert_eq!(ctx.basis().word(idx).len(), 9);
        assert_eq!(ctx.b_weight(idx), gtop);
        assert_eq!(m.len(), 96);
    }

    #[test]
    fn elem_json_shape() {
        let ctx = extended(1);
        let t = ctx.elem_json(&AlgebraElem::basis(ctx.letter_index(F4::OMEGA2), 0));
        assert_eq!(t[0].word, "xw2");
        assert_eq!(t[0].coeff, "1");
    }

    #[test]
    fn all_bibj_products() {
        let r = verify_bibj(&extended(1)).unwrap();
        assert!(r.all_passed(), "{:?}", r.first_failure());
        assert_eq!(r.checks.len(), 25);
    }

    #[test]
    fn integrals_and_grouplike() {
        let ctx = extended(1);
        let (_, gtop) = ctx.m_top_and_gtop();
        let t = left_integrals(&ctx).unwrap().pop().unwrap();
        let terms: Vec<_> = t.terms().collect();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].0, ctx.m_top_index());
        assert_eq!(terms[0].1, ctx.group().inv(gtop));
        // Independent route: x_a t = 0 and δ_g t = [g = e] t through the product.
        for a in F4::ALL {
            assert!(ctx.mul(&ctx.x(a), &t).is_zero());
        }
        for g in ctx.group().elements() {
            let expect = if g == ctx.group().identity() { t.clone() } else { AlgebraElem::zero() };
            assert_eq!(ctx.mul(&ctx.delta(g), &t), expect);
        }
        assert_eq!(distinguished_grouplike(&ctx).unwrap(), gtop);
        let r = right_integrals(&ctx).unwrap().pop().unwrap();
        for a in F4::ALL {
            assert!(ctx.mul(&r, &ctx.x(a)).is_zero());
        }
    }
}
