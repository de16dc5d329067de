use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tetra_core::algebra::{left_integrals, AlgebraContext, AlgebraElem};
use tetra_core::rack::F4;
use tetra_core::realization::{extend_realization, mk_affine_realization, Character, FiniteGroup};
use tetra_core::scalars::Cyclotomic;

fn ctx() -> &'static AlgebraContext {
    static CTX: OnceLock<AlgebraContext> = OnceLock::new();
    CTX.get_or_init(|| {
        let base = mk_affine_realization(1, 0).unwrap();
        let r = extend_realization(&base, &FiniteGroup::cyclic(4), &Character::cyclic(4, 1)).unwrap();
        AlgebraContext::new(r, Cyclotomic::one()).unwrap()
    })
}

fn random_elem(rng: &mut ChaCha8Rng, ctx: &AlgebraContext, terms: usize) -> AlgebraElem {
    let mut a = AlgebraElem::zero();
    for _ in 0..terms {
        let b = rng.gen_range(0..ctx.basis().dim());
        let g = rng.gen_range(0..ctx.group().size());
        a.add_term(b, g, &Cyclotomic::from_int(rng.gen_range(-3..=3)));
    }
    a
}

/// Random triples concentrated on few weights so that products are nonzero.
fn random_triple(rng: &mut ChaCha8Rng, ctx: &AlgebraContext) -> [AlgebraElem; 3] {
    let grp = ctx.group();
    let mut out: [AlgebraElem; 3] = Default::default();
    let g = rng.gen_range(0..grp.size());
    // c is supported at g, b at wt(c-word) g, a at wt(b-word) of that, so products rarely vanish.
    let mut right = g;
    // Short words keep the products away from the top degree, where most vanish.
    let short: Vec<usize> = (0..ctx.basis().dim()).filter(|&b| ctx.basis().word(b).len() <= 3).collect();
    for slot in (0..3).rev() {
        let mut x = AlgebraElem::zero();
        let mut next = right;
        for k in 0..3 {
            let b = short[rng.gen_range(0..short.len())];
            x.add_term(b, right, &Cyclotomic::from_int(rng.gen_range(1..=3)));
            if k == 0 {
                next = grp.mul(ctx.b_weight(b), right);
            }
        }
        out[slot] = x;
        right = next;
    }
    out
}

#[test]
fn associativity_on_300_triples() {
    let ctx = ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut nonzero = 0;
    for _ in 0..300 {
        let [a, b, c] = random_triple(&mut rng, ctx);
        let left = ctx.mul(&ctx.mul(&a, &b), &c);
        let right = ctx.mul(&a, &ctx.mul(&b, &c));
        assert_eq!(left, right);
        nonzero += usize::from(!left.is_zero());
    }
    // Guard against a vacuous pass.
    assert!(nonzero > 100, "only {nonzero} nonzero triple products");
}

#[test]
fn associativity_with_generators() {
    let ctx = ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let b = random_elem(&mut rng, ctx, 6);
        let c = random_elem(&mut rng, ctx, 6);
        for a in F4::ALL {
            let x = ctx.x(a);
            assert_eq!(ctx.mul(&ctx.mul(&x, &b), &c), ctx.mul(&x, &ctx.mul(&b, &c)));
        }
    }
}

#[test]
fn graded_law() {
    // δ_h (b δ_g) = [h = wt(b) g] b δ_g.
    let ctx = ctx();
    let grp = ctx.group();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let b = rng.gen_range(0..ctx.basis().dim());
        let g = rng.gen_range(0..grp.size());
        let x = AlgebraElem::basis(b, g);
        let w = grp.mul(ctx.b_weight(b), g);
        for h in [w, rng.gen_range(0..grp.size())] {
            let expect = if h == w { x.clone() } else { AlgebraElem::zero() };
            assert_eq!(ctx.mul(&ctx.delta(h), &x), expect);
        }
        // Right multiplication by δ_h picks out the right weight.
        assert_eq!(ctx.mul(&x, &ctx.delta(g)), x);
    }
}

#[test]
fn commutation_law() {
    // δ_g x_i = x_i δ_{g_i g}.
    let ctx = ctx();
    let grp = ctx.group();
    for g in grp.elements() {
        for i in F4::ALL {
            let lhs = ctx.mul(&ctx.delta(g), &ctx.x(i));
            let rhs = ctx.mul(&ctx.x(i), &ctx.delta(grp.mul(ctx.realization().g(i), g)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn unit_and_central_f() {
    let ctx = ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let one = ctx.one();
    let f = ctx.f_elem();
    for _ in 0..30 {
        let a = random_elem(&mut rng, ctx, 5);
        assert_eq!(ctx.mul(&one, &a), a);
        assert_eq!(ctx.mul(&a, &one), a);
        assert_eq!(ctx.mul(&f, &a), ctx.mul(&a, &f));
    }
}

#[test]
fn counit_is_multiplicative() {
    let ctx = ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut nonzero = 0;
    for _ in 0..200 {
        // Mix δ-heavy elements in so that ε is often nonzero.
        let mut a = random_elem(&mut rng, ctx, 3);
        let mut b = random_elem(&mut rng, ctx, 3);
        a = a.add(&ctx.delta(ctx.group().identity()));
        b = b.add(&ctx.delta(ctx.group().identity()).scale(&Cyclotomic::from_int(2)));
        let lhs = ctx.counit(&ctx.mul(&a, &b));
        assert_eq!(lhs, &ctx.counit(&a) * &ctx.counit(&b));
        nonzero += usize::from(!lhs.is_zero());
    }
    assert!(nonzero > 0);
}

#[test]
fn left_integral_absorbs() {
    // a Λ = ε(a) Λ for a left integral Λ.
    let ctx = ctx();
    let lam = left_integrals(ctx).unwrap().pop().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..40 {
        let mut a = random_elem(&mut rng, ctx, 4);
        a = a.add(&ctx.delta(ctx.group().identity()));
        assert_eq!(ctx.mul(&a, &lam), lam.scale(&ctx.counit(&a)));
    }
    for a in F4::ALL {
        assert!(ctx.mul(&ctx.x(a), &lam).is_zero());
    }
}
