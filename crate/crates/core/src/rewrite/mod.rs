//! Normal forms in the free algebra on `x_0, x_1, x_ω, x_ω²` modulo the
//! quadratic relations, the squares and `z = F` with `F` central.

mod basis;
mod system;
mod word;

pub use basis::{apply_sparse, b_words, invert_constant_pivots, sparse, BBasis, Coords, SparseCols, B_ROWS};
pub use system::{
    base_relations, base_relations_at, complete, complete_relations, deformed_system, quadratic_relations,
    rack_quadratic, square_relations, z_elem, z_prime_elem, Rule, RuleSystem, DEFAULT_DEGREE_BOUND,
    MIN_DEGREE_BOUND,
};
pub use word::{FreeElem, Word};

use std::sync::OnceLock;

use crate::error::RewriteError;

/// The symbolic basis data, computed once per process.
pub fn shared_basis() -> Result<&'static BBasis, RewriteError> {
    static CELL: OnceLock<Result<BBasis, RewriteError>> = OnceLock::new();
    CELL.get_or_init(|| deformed_system().and_then(BBasis::new)).as_ref().map_err(|e| e.clone())
}

/// Standard monomials of a completed system; errors unless there are 72.
pub fn standard_monomials(rules: &RuleSystem) -> Result<Vec<Word>, RewriteError> {
    rules.standard_monomials()
}

pub fn normal_form(x: &FreeElem, rules: &RuleSystem) -> FreeElem {
    rules.normal_form(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rack::F4;
    use crate::scalars::{rat, FPoly};

    fn w(t: &str) -> Word {
        Word::parse(t).unwrap()
    }

    #[test]
    fn deformed_completion_has_72_standard_words() {
        let b = shared_basis().unwrap();
        let std = b.standard();
        assert_eq!(std.len(), 72);
        assert!(std.contains(&Word::empty()));
        assert_eq!(std.iter().map(|w| w.len()).max(), Some(9));
        assert!(b.system().unresolved_overlaps().is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let sys = shared_basis().unwrap().system();
        assert!(sys.normal_form_word(&w("x0x0")).is_zero());
        let d = FreeElem::word(w("x1x0x1")).sub(&FreeElem::word(w("x0x1x0")));
        assert!(sys.normal_form(&d).is_zero());
        assert_eq!(sys.normal_form(&z_elem()), FreeElem::term(Word::empty(), FPoly::f()));
    }

    #[test]
    fn b_coordinates() {
        let b = shared_basis().unwrap();
        for (i, word) in b.words().iter().enumerate() {
            assert_eq!(b.to_b_basis(&FreeElem::word(word.clone())), b.unit(i));
        }
        let c = b.to_b_basis(&FreeElem::word(w("x1x0x1")));
        assert_eq!(c, b.unit(b.index_of(&w("x0x1x0")).unwrap()));
    }

    #[test]
    fn specializations_have_72_standard_words() {
        for c in [0, 1] {
            let sys = complete_relations(&base_relations_at(&rat(c)), DEFAULT_DEGREE_BOUND).unwrap();
            assert_eq!(sys.standard_monomials().unwrap().len(), 72, "F = {c}");
        }
    }

    #[test]
    fn top_word_is_integral_at_zero() {
        let sys = shared_basis().unwrap().system().specialize(&rat(0));
        let top = w("x0x1x0xwx0x1xwx0xw2");
        for a in F4::ALL {
            let l = Word::letter(a);
            assert!(sys.normal_form_word(&l.concat(&top)).is_zero());
            assert!(sys.normal_form_word(&top.concat(&l)).is_zero());
        }
        assert!(!sys.normal_form_word(&top).is_zero());
    }
}
