//! Extensions between one-dimensional modules.
//!
//! An extension of `𝕜_h` by `𝕜_g` on `𝕜{w_h, w_g}` with `w_g` spanning the
//! submodule is `a · w_h = χ_h(a) w_h + D(a) w_g`, where
//! `D(ab) = χ_g(a) D(b) + D(a) χ_h(b)`. Such `D` are determined by `D(x_j)` and
//! `D(δ_t)` subject to the defining relations; trivial extensions are the
//! multiples of `D = χ_g - χ_h`.

use crate::algebra::AlgebraContext;
use crate::error::ReprError;
use crate::linalg::{sparse_rank, SparseRow};
use crate::rack::F4;
use crate::rewrite::base_relations;
use crate::scalars::Cyclotomic;

use super::module::Module;

fn require_one_dim(ctx: &AlgebraContext, g: usize, h: usize) -> Result<(), ReprError> {
    for x in [g, h] {
        if !ctx.f(x).is_zero() {
            return Err(ReprError::Precondition(format!("k_{} is not a module", ctx.group().label(x))));
        }
    }
    Ok(())
}

/// The letter `i` with `g = g_i^{-1} h`, if any.
pub fn connecting_letter(ctx: &AlgebraContext, g: usize, h: usize) -> Option<F4> {
    let grp = ctx.group();
    F4::ALL.into_iter().find(|&i| grp.mul(grp.inv(ctx.realization().g(i)), h) == g)
}

/// `M_{g,h} = 𝕜{w_h, w_g}` with `x_j w_h = δ_{j,i} w_g`, when `g = g_i^{-1} h`.
pub fn ext_module(ctx: &AlgebraContext, g: usize, h: usize) -> Result<Option<Module>, ReprError> {
    require_one_dim(ctx, g, h)?;
    let Some(i) = connecting_letter(ctx, g, h) else { return Ok(None) };
    let mut actions: [Vec<Vec<(usize, Cyclotomic)>>; 4] = std::array::from_fn(|_| vec![Vec::new(), Vec::new()]);
    actions[i.index()][0].push((1, Cyclotomic::one()));
    let m = Module::new(vec![h, g], actions, vec!["w_h".into(), "w_g".into()])?;
    if let Some(c) = m.check(ctx).first_failure() {
        return Err(ReprError::ModuleInvariant(format!("M_(g,h): {}", c.name)));
    }
    Ok(Some(m))
}

/// `dim Ext¹` of `𝕜_h` by `𝕜_g` as cocycles modulo coboundaries.
pub fn ext1_dim(ctx: &AlgebraContext, g: usize, h: usize) -> Result<usize, ReprError> {
    require_one_dim(ctx, g, h)?;
    let grp = ctx.group();
    let n = grp.size();
    // Unknowns: D(x_j) at j, D(δ_t) at 4 + t.
    let dx = |j: F4| j.index();
    let dd = |t: usize| 4 + t;
    let mut rows: Vec<SparseRow> = Vec::new();
    let mut push = |terms: &[(usize, Cyclotomic)]| {
        let mut row = SparseRow::new();
        for (k, c) in terms {
            *row.entry(*k).or_insert_with(Cyclotomic::zero) += c;
        }
        row.retain(|_, c| !c.is_zero());
        if !row.is_empty() {
            rows.push(row);
        }
    };
    let one = Cyclotomic::one;
    let minus = || Cyclotomic::from_int(-1);

    // δ_s δ_t = [s = t] δ_t: [s=g] D(δ_t) + D(δ_s) [t=h] - [s=t] D(δ_t) = 0.
    // Only s = g, t = h or s = t give nonzero rows.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for t in 0..n {
        pairs.extend([(g, t), (t, h), (t, t)]);
    }
    pairs.sort_unstable();
    pairs.dedup();
    for (s, t) in pairs {
        let mut terms = Vec::new();
        if s == g {
            terms.push((dd(t), one()));
        }
        if t == h {
            terms.push((dd(s), one()));
        }
        if s == t {
            terms.push((dd(t), minus()));
        }
        push(&terms);
    }
    // δ_t x_j = x_j δ_{g_j t}: [t=g] D(x_j) - [g_j t = h] D(x_j) = 0.
    for j in F4::ALL {
        let gj = ctx.realization().g(j);
        let mut ts = vec![g, grp.mul(grp.inv(gj), h)];
        ts.dedup();
        for t in ts {
            let mut terms = Vec::new();
            if t == g {
                terms.push((dx(j), one()));
            }
            if grp.mul(gj, t) == h {
                terms.push((dx(j), minus()));
            }
            push(&terms);
        }
    }
    // Defining relations. A polynomial p(F) is Σ_t p(f(t)) δ_t; a term p(F) x_j
    // contributes p(f(g)) D(x_j); longer words vanish because χ_g, χ_h kill the x's.
    for rel in base_relations() {
        let mut terms = Vec::new();
        for (w, p) in rel.terms() {
            match w.len() {
                0 => terms.extend((0..n).map(|t| (dd(t), p.eval(ctx.f(t))))),
                1 => terms.push((dx(w.letters().next().unwrap()), p.eval(ctx.f(g)))),
                _ => {}
            }
        }
        push(&terms);
    }
    // Σ_t δ_t = 1 and D(1) = 0.
    push(&(0..n).map(|t| (dd(t), one())).collect::<Vec<_>>());

    let unknowns = 4 + n;
    let mut cob = SparseRow::new();
    if g != h {
        cob.insert(dd(g), one());
        cob.insert(dd(h), minus());
    }
    // The coboundary must itself be a cocycle.
    for row in &rows {
        let mut dot = Cyclotomic::zero();
        for (k, c) in &cob {
            if let Some(x) = row.get(k) {
                dot += &(x * c);
            }
        }
        if !dot.is_zero() {
            return Err(ReprError::ModuleInvariant("coboundary is not a cocycle".into()));
        }
    }
    let cocycles = unknowns - sparse_rank(rows);
    let coboundaries = usize::from(!cob.is_empty());
    Ok(cocycles - coboundaries)
}
