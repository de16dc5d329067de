use std::collections::BTreeSet;
use std::sync::OnceLock;

use tetra_core::algebra::{AlgebraContext, AlgebraElem};
use tetra_core::rack::F4;
use tetra_core::realization::{extend_realization, mk_affine_realization, Character, FiniteGroup};
use tetra_core::repr::{
    check_spherical, classify_simples, decompose, diagnose_table, elem_vector, ext1_dim, ext_module, hom_dim,
    is_multiple_of, linkage_blocks, one_dim, radical_top_socle, verify_table, verma, Radical, SimpleCatalog,
};
use tetra_core::scalars::Cyclotomic;

fn extended() -> &'static (AlgebraContext, SimpleCatalog) {
    static CELL: OnceLock<(AlgebraContext, SimpleCatalog)> = OnceLock::new();
    CELL.get_or_init(|| {
        let base = mk_affine_realization(1, 0).unwrap();
        let r = extend_realization(&base, &FiniteGroup::cyclic(4), &Character::cyclic(4, 1)).unwrap();
        let ctx = AlgebraContext::new(r, Cyclotomic::one()).unwrap();
        let cat = classify_simples(&ctx).unwrap();
        (ctx, cat)
    })
}

fn affine(lambda: i64) -> AlgebraContext {
    AlgebraContext::new(mk_affine_realization(1, 0).unwrap(), Cyclotomic::from_int(lambda)).unwrap()
}

fn outside(ctx: &AlgebraContext) -> usize {
    ctx.group().elements().find(|&g| !ctx.f(g).is_zero()).unwrap()
}

#[test]
fn affine_algebras_are_bosonizations() {
    // χ = (-1)^s, so χ_z = χ^6 = 1 and f vanishes for every λ: |G| = 24 one-dimensional simples.
    for lambda in [0, 1] {
        let ctx = affine(lambda);
        assert!(ctx.is_bosonization());
        assert_eq!(ctx.ker_chi_z().len(), 24);
        let cat = classify_simples(&ctx).unwrap();
        assert_eq!(cat.one_dim.len(), 24);
        assert!(cat.twelve.is_empty());
    }
}

#[test]
fn affine_sphericity() {
    // χ = (-1)^s squares to 1, so both verdicts are positive and the pivot is involutory.
    for lambda in [0, 1] {
        let ctx = affine(lambda);
        let cat = classify_simples(&ctx).unwrap();
        let s = check_spherical(&ctx, &cat).unwrap();
        assert!(s.spherical && s.pivot_involutory, "lambda = {lambda}");
    }
}

#[test]
fn decomposition_of_a_direct_sum() {
    let (ctx, cat) = extended();
    let g = outside(ctx);
    let l = &cat.modules[&(3, g)].module;
    let k = one_dim(ctx.ker_chi_z()[0]);
    let m = l.direct_sum(l).direct_sum(&k);
    let d = decompose(ctx, cat, &m).unwrap();
    let class = cat.class_of(3, g).unwrap();
    assert_eq!(d.multiplicities.into_iter().collect::<Vec<_>>(), vec![(class, 2)]);
    assert_eq!(d.residual.dim(), 1);
}

#[test]
fn isomorphic_simples_share_supports_and_homs() {
    let (_, cat) = extended();
    for class in cat.twelve.iter().take(4) {
        let rep = &cat.modules[&class.rep].module;
        for m in &class.members {
            assert_eq!(hom_dim(rep, &cat.modules[m].module), 1);
        }
    }
    let a = &cat.twelve[0];
    let b = &cat.twelve[1];
    assert_eq!(hom_dim(&cat.modules[&a.rep].module, &cat.modules[&b.rep].module), 0);
}

#[test]
fn verma_socle_is_the_top_word() {
    let (ctx, cat) = extended();
    let rad = Radical::new(ctx, cat);
    for &h in ctx.ker_chi_z().iter().take(6) {
        let m = verma(ctx, h);
        let rts = radical_top_socle(&rad, &m).unwrap();
        assert_eq!(rts.rad.len(), 71);
        let top = AlgebraElem::basis(ctx.m_top_index(), h);
        assert!(is_multiple_of(&rts.socle[0], &elem_vector(ctx, &top, h).unwrap()));
    }
    // Outside the kernel the Verma is semisimple: zero radical, socle everything.
    let g = outside(ctx);
    let rts = radical_top_socle(&rad, &verma(ctx, g)).unwrap();
    assert!(rts.rad.is_empty());
    assert_eq!(rts.socle.len(), 72);
}

#[test]
fn ext_modules_are_modules_only_on_arrows() {
    let (ctx, _) = extended();
    let grp = ctx.group();
    let h = ctx.ker_chi_z()[3];
    for i in F4::ALL {
        let g = grp.mul(grp.inv(ctx.realization().g(i)), h);
        assert_eq!(ext1_dim(ctx, g, h).unwrap(), 1);
        assert!(ext_module(ctx, g, h).unwrap().unwrap().check(ctx).all_passed());
    }
    assert_eq!(ext1_dim(ctx, h, h).unwrap(), 0);
    assert!(ext_module(ctx, h, h).unwrap().is_none());
    assert!(ext1_dim(ctx, outside(ctx), h).is_err());
}

#[test]
fn linkage_partition_covers_every_idempotent() {
    let (ctx, cat) = extended();
    let blocks = linkage_blocks(ctx, cat).unwrap();
    let all: BTreeSet<(usize, usize)> = blocks.iter().flatten().copied().collect();
    assert_eq!(all.len(), blocks.iter().map(Vec::len).sum::<usize>());
    assert_eq!(all.len(), 48 + 48 * 6);
    // Each e_i^g with f(g) ≠ 0 spans a projective simple, so it is linked to its own class only.
    for block in &blocks {
        let twelve = block.iter().filter(|(_, g)| !ctx.f(*g).is_zero()).count();
        assert!(twelve == 0 || twelve == block.len());
    }
}

#[test]
fn printed_tables_diagnosis() {
    // Regression for the analysis of the printed tables: L1 differs in one
    // cell, L2's matrices are a correct module in a different basis.
    let (ctx, _) = extended();
    let g = outside(ctx);
    let t1 = verify_table(ctx, 1, g).unwrap();
    let bad: Vec<_> = t1.cells.iter().filter(|c| !c.pass).map(|c| (c.row.as_str(), c.column.as_str())).collect();
    assert_eq!(bad, vec![("c7", "xw2")]);
    let d2 = diagnose_table(ctx, 2, g).unwrap();
    assert!(d2.relation_failures.is_empty());
    assert_eq!(d2.hom_to_computed, Some(1));
    assert_eq!(d2.ungraded_rows, vec!["c6", "c12"]);
    for i in [1, 3, 4, 5, 6] {
        assert!(!diagnose_table(ctx, i, g).unwrap().relation_failures.is_empty(), "L{i}");
    }
    let total: usize = (1..=6).map(|i| verify_table(ctx, i, g).unwrap().action_counts().1).sum();
    assert_eq!(total, 288);
}
