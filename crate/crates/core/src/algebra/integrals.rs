//! One-sided integrals and the distinguished group-like character.

use std::collections::BTreeMap;

use super::{AlgebraContext, AlgebraElem};
use crate::error::AlgebraError;
use crate::linalg::{nullspace, Matrix};
use crate::rack::F4;
use crate::scalars::Cyclotomic;

fn solve(rows: BTreeMap<(usize, usize, usize), Vec<Cyclotomic>>, n: usize) -> Vec<Vec<Cyclotomic>> {
    let m: Matrix = rows.into_values().collect();
    if m.is_empty() {
        return (0..n)
            .map(|i| {
                let mut v = vec![Cyclotomic::zero(); n];
                v[i] = Cyclotomic::one();
                v
            })
            .collect();
    }
    nullspace(&m, n)
}

/// Left integrals: `x_i t = 0` for all `i` and `δ_g t = δ(g, e) t`.
///
/// The second condition says `t = δ_e t`, and `δ_e (b δ_h) ≠ 0` exactly when
/// `h = wt(b)^{-1}`, so `t` ranges over `span{b δ_{wt(b)^{-1}}}` and only the
/// 72 coefficients remain unknown.
pub fn left_integrals(ctx: &AlgebraContext) -> Result<Vec<AlgebraElem>, AlgebraError> {
    let grp = ctx.group();
    let n = ctx.basis().dim();
    let home: Vec<usize> = (0..n).map(|b| grp.inv(ctx.b_weight(b))).collect();
    let mut rows: BTreeMap<(usize, usize, usize), Vec<Cyclotomic>> = BTreeMap::new();
    for a in F4::ALL {
        for b in 0..n {
            let h = home[b];
            for (r, c) in &ctx.left_letter(a, h)[b] {
                rows.entry((a.index(), *r, h)).or_insert_with(|| vec![Cyclotomic::zero(); n])[b] = c.clone();
            }
        }
    }
    let sols = solve(rows, n);
    if sols.len() != 1 {
        return Err(AlgebraError::IntegralDimension(sols.len()));
    }
    let mut t = AlgebraElem::zero();
    for (b, c) in sols[0].iter().enumerate() {
        t.add_term(b, home[b], c);
    }
    Ok(vec![t])
}

/// Right integrals: `t a = ε(a) t`, i.e. `t ∈ span{b δ_e}` with `t x_i = 0`.
pub fn right_integrals(ctx: &AlgebraContext) -> Result<Vec<AlgebraElem>, AlgebraError> {
    let n = ctx.basis().dim();
    let e = ctx.group().identity();
    let mut rows: BTreeMap<(usize, usize, usize), Vec<Cyclotomic>> = BTreeMap::new();
    for a in F4::ALL {
        // (b δ_e)(x_a δ_h) is nonzero only for h = g_a, where it is (b x_a) δ_{g_a}.
        let h = ctx.realization().g(a);
        let la = ctx.letter_index(a);
        for b in 0..n {
            for (r, c) in ctx.product_at(b, la, h) {
                rows.entry((a.index(), *r, 0)).or_insert_with(|| vec![Cyclotomic::zero(); n])[b] = c.clone();
            }
        }
    }
    let sols = solve(rows, n);
    if sols.len() != 1 {
        return Err(AlgebraError::IntegralDimension(sols.len()));
    }
    let mut t = AlgebraElem::zero();
    for (b, c) in sols[0].iter().enumerate() {
        t.add_term(b, e, c);
    }
    Ok(vec![t])
}

/// The `g` with `a t = χ_g(a) t` for a right integral `t` and all generators `a`.
pub fn distinguished_grouplike(ctx: &AlgebraContext) -> Result<usize, AlgebraError> {
    let t = right_integrals(ctx)?.pop().expect("one integral");
    let grp = ctx.group();
    // δ_h (b δ_e) = [h = wt(b)] b δ_e, so t must be homogeneous of weight g.
    let mut weights: Vec<usize> = t.terms().map(|(b, _, _)| ctx.b_weight(b)).collect();
    weights.sort_unstable();
    weights.dedup();
    let [g] = weights[..] else { return Err(AlgebraError::NoDistinguishedGrouplike) };
    for h in grp.elements() {
        let lhs = ctx.mul(&ctx.delta(h), &t);
        let expect = if h == g { t.clone() } else { AlgebraElem::zero() };
        if lhs != expect {
            return Err(AlgebraError::NoDistinguishedGrouplike);
        }
    }
    for a in F4::ALL {
        if !ctx.mul(&ctx.x(a), &t).is_zero() {
            return Err(AlgebraError::NoDistinguishedGrouplike);
        }
    }
    Ok(g)
}
