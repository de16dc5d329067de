use proptest::prelude::*;
use tetra_core::scalars::{rat, rat_frac, Cyclotomic, FPoly};

/// A random element of ℚ(ζ_n) as Σ q_k ζ^k for small rationals q_k.
fn cyclo(order: u32) -> impl Strategy<Value = Cyclotomic> {
    proptest::collection::vec((-6i64..7, 1i64..4), order as usize).prop_map(move |cs| {
        let mut x = Cyclotomic::zero();
        for (k, (n, d)) in cs.into_iter().enumerate() {
            x += &(&Cyclotomic::root_of_unity(k as i64, order) * &Cyclotomic::from(rat_frac(n, d)));
        }
        x
    })
}

fn any_cyclo() -> impl Strategy<Value = Cyclotomic> {
    prop_oneof![cyclo(1), cyclo(3), cyclo(4), cyclo(6), cyclo(12)]
}

fn fpoly() -> impl Strategy<Value = FPoly> {
    proptest::collection::vec(-5i64..6, 0..5).prop_map(|cs| FPoly::from_coeffs(cs.into_iter().map(rat).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, ..ProptestConfig::default() })]

    #[test]
    fn ring_laws(a in any_cyclo(), b in any_cyclo(), c in any_cyclo()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(a in any_cyclo()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    #[test]
    fn display_parse_round_trip(a in cyclo(12)) {
        let back = Cyclotomic::parse(&a.to_string(), 12).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn fpoly_eval_is_a_ring_map(p in fpoly(), q in fpoly(), v in cyclo(4)) {
        prop_assert_eq!((&p * &q).eval(&v), &p.eval(&v) * &q.eval(&v));
        prop_assert_eq!((&p + &q).eval(&v), &p.eval(&v) + &q.eval(&v));
    }
}

#[test]
fn mixed_orders_agree() {
    // ζ_12^3 = ζ_4 and ζ_12^4 = ζ_3 after embedding.
    let z12 = Cyclotomic::root_of_unity(1, 12);
    assert_eq!(z12.pow(3), Cyclotomic::root_of_unity(1, 4));
    assert_eq!(z12.pow(4), Cyclotomic::root_of_unity(1, 3));
    assert_eq!(&Cyclotomic::root_of_unity(1, 4) + &Cyclotomic::root_of_unity(1, 3), {
        let mut s = z12.pow(3);
        s += &z12.pow(4);
        s
    });
}
