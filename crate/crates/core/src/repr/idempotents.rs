use crate::algebra::{AlgebraContext, AlgebraElem};
use crate::error::ReprError;
use crate::scalars::Cyclotomic;

/// A complete set of orthogonal primitive `g`-idempotents.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentSet {
    pub g: usize,
    pub members: Vec<AlgebraElem>,
}

/// The elements `-b_1δ_g/f, -b_2δ_g/f, b_3δ_g/f, b_4δ_g/f, b_5δ_g/f, δ_g`
/// whose orthogonalization yields `e_1^g, …, e_6^g`.
pub fn scaled_b_idempotents(ctx: &AlgebraContext, g: usize) -> Result<Vec<AlgebraElem>, ReprError> {
    let inv_f = ctx
        .f(g)
        .inv()
        .map_err(|_| ReprError::Precondition(format!("f({}) = 0", ctx.group().label(g))))?;
    let b = ctx.b_indices();
    let signs = [-1, -1, 1, 1, 1];
    let mut out: Vec<AlgebraElem> = (0..5)
        .map(|k| AlgebraElem::basis(b[k], g).scale(&(&inv_f * &Cyclotomic::from_int(signs[k]))))
        .collect();
    out.push(ctx.delta(g));
    Ok(out)
}

/// `e_i^g` from the closed formulas, or `{δ_g}` when `χ_z(g) = 1`.
pub fn idempotent_formulas(ctx: &AlgebraContext, g: usize) -> Result<Vec<AlgebraElem>, ReprError> {
    if ctx.f(g).is_zero() {
        return Ok(vec![ctx.delta(g)]);
    }
    let inv_f = ctx.f(g).inv()?;
    let [b1, b2, b3, b4, b5] = ctx.b_indices().map(|b| AlgebraElem::basis(b, g));
    let over_f = |x: AlgebraElem| x.scale(&inv_f);
    Ok(vec![
        over_f(b1.scale(&Cyclotomic::from_int(-1))),
        over_f(b2.scale(&Cyclotomic::from_int(-1))),
        over_f(b3.clone()),
        over_f(b4.sub(&b3)),
        over_f(b5.add(&b1)),
        ctx.delta(g).add(&over_f(b2.sub(&b4).sub(&b5))),
    ])
}

/// Checks `e_i e_j = δ_{ij} e_i` and `Σ e_i = δ_g`.
pub fn verify_idempotents(ctx: &AlgebraContext, g: usize, members: &[AlgebraElem]) -> Result<(), ReprError> {
    let label = ctx.group().label(g);
    let mut sum = AlgebraElem::zero();
    for (i, e) in members.iter().enumerate() {
        if e.is_zero() {
            return Err(ReprError::Idempotents(format!("{label}: e{} = 0", i + 1)));
        }
        for (j, e2) in members.iter().enumerate() {
            let p = ctx.mul(e, e2);
            let ok = if i == j { p == *e } else { p.is_zero() };
            if !ok {
                return Err(ReprError::Idempotents(format!("{label}: e{} e{}", i + 1, j + 1)));
            }
        }
        sum = sum.add(e);
    }
    if sum != ctx.delta(g) {
        return Err(ReprError::Idempotents(format!("{label}: sum is not delta_g")));
    }
    Ok(())
}

/// The verified set `ℰ_g`.
pub fn idempotent_set(ctx: &AlgebraContext, g: usize) -> Result<IdempotentSet, ReprError> {
    let members = idempotent_formulas(ctx, g)?;
    verify_idempotents(ctx, g, &members)?;
    Ok(IdempotentSet { g, members })
}

/// `e_i = a_i Π_{j<i} (1 - a_j)` for commuting idempotents `a_i`.
///
/// Expanding the product gives the alternating sum over subsets of earlier
/// indices. The output depends on the order and may contain zeros.
pub fn orthogonalize(ctx: &AlgebraContext, a: &[AlgebraElem]) -> Result<Vec<AlgebraElem>, ReprError> {
    for (i, x) in a.iter().enumerate() {
        if ctx.mul(x, x) != *x {
            return Err(ReprError::NotCommuting(format!("input {} is not idempotent", i + 1)));
        }
        for (j, y) in a.iter().enumerate().skip(i + 1) {
            if ctx.mul(x, y) != ctx.mul(y, x) {
                return Err(ReprError::NotCommuting(format!("inputs {} and {} do not commute", i + 1, j + 1)));
            }
        }
    }
    let one = ctx.one();
    let mut out = Vec::with_capacity(a.len());
    for (i, x) in a.iter().enumerate() {
        let mut e = x.clone();
        for y in &a[..i] {
            e = ctx.mul(&e, &one.sub(y));
        }
        out.push(e);
    }
    for (i, x) in out.iter().enumerate() {
        for (j, y) in out.iter().enumerate() {
            if i != j && !ctx.mul(x, y).is_zero() {
                return Err(ReprError::Idempotents(format!("outputs {} and {} are not orthogonal", i + 1, j + 1)));
            }
        }
    }
    Ok(out)
}
