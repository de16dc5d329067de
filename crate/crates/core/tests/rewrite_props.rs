use proptest::prelude::*;
use tetra_core::rack::F4;
use tetra_core::rewrite::{base_relations, shared_basis, FreeElem, Word};
use tetra_core::scalars::{rat, FPoly};

fn word(max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u8..4, 0..=max).prop_map(|ls| Word::from_letters(&ls.into_iter().map(F4::new).collect::<Vec<_>>()))
}

fn elem() -> impl Strategy<Value = FreeElem> {
    proptest::collection::vec((word(8), -3i64..4, 0usize..2), 1..5).prop_map(|terms| {
        let mut e = FreeElem::zero();
        for (w, c, d) in terms {
            e.add_term(w, &FPoly::monomial(rat(c), d));
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn normal_form_is_idempotent(x in elem()) {
        let sys = shared_basis().unwrap().system();
        let nf = sys.normal_form(&x);
        prop_assert_eq!(sys.normal_form(&nf), nf.clone());
        prop_assert!(nf.terms().all(|(w, _)| sys.is_standard(w)));
    }

    #[test]
    fn normal_form_is_linear(x in elem(), y in elem(), c in -4i64..5) {
        let sys = shared_basis().unwrap().system();
        let lhs = sys.normal_form(&x.add(&y.scale_rational(&rat(c))));
        let rhs = sys.normal_form(&x).add(&sys.normal_form(&y).scale_rational(&rat(c)));
        prop_assert_eq!(lhs, rhs);
    }

    /// Two routes to the 𝔹 coordinates of a word: reduce it in one go, or
    /// fold the left multiplication matrices letter by letter.
    #[test]
    fn fold_matches_direct(w in word(12)) {
        let b = shared_basis().unwrap();
        prop_assert_eq!(b.to_b_basis(&FreeElem::word(w.clone())), b.word_coords(&w));
    }

    /// Relations lie in the ideal: u r v reduces to 0 for every generator r.
    #[test]
    fn relations_vanish_in_context(u in word(3), v in word(3), k in 0usize..9) {
        let sys = shared_basis().unwrap().system();
        let r = &base_relations()[k];
        let x = FreeElem::word(u).mul(r).mul(&FreeElem::word(v));
        prop_assert!(sys.normal_form(&x).is_zero());
    }

    #[test]
    fn normal_form_respects_products(x in elem(), y in elem()) {
        let sys = shared_basis().unwrap().system();
        let direct = sys.normal_form(&x.mul(&y));
        let staged = sys.normal_form(&sys.normal_form(&x).mul(&sys.normal_form(&y)));
        prop_assert_eq!(direct, staged);
    }
}
