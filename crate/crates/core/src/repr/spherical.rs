//! Sphericity of `(A, χ_G)`, where the pivot `ω = Σ_h χ_G(h) δ_h` acts on a
//! module by `χ_G(h)` on weight `h`.

use serde::Serialize;

use super::simple::SimpleCatalog;
use crate::algebra::AlgebraContext;
use crate::error::ReprError;
use crate::report::{Check, Report};
use crate::scalars::Cyclotomic;

#[derive(Clone, Debug, Serialize)]
pub struct SphericalReport {
    pub spherical: bool,
    pub pivot_involutory: bool,
    pub criterion: bool,
    pub traces: bool,
    pub report: Report,
}

/// `(tr ω, tr ω^{-1})` on a module with the given weights.
pub fn pivot_traces(ctx: &AlgebraContext, weights: &[usize]) -> (Cyclotomic, Cyclotomic) {
    let chi = ctx.realization().chi();
    let mut t = Cyclotomic::zero();
    let mut t_inv = Cyclotomic::zero();
    for &h in weights {
        t += &chi.value(h);
        t_inv += &chi.turn(h).inv().value();
    }
    (t, t_inv)
}

/// Compares the character criterion with the trace condition on every simple.
pub fn check_spherical(ctx: &AlgebraContext, cat: &SimpleCatalog) -> Result<SphericalReport, ReprError> {
    let grp = ctx.group();
    let chi = ctx.realization().chi();
    let squares_trivial = |hs: &[usize]| hs.iter().all(|&h| chi.turn(h).pow(2).is_one());
    let all: Vec<usize> = grp.elements().collect();
    let criterion = if ctx.is_bosonization() {
        squares_trivial(&all)
    } else {
        squares_trivial(ctx.ker_chi_z())
    };
    let pivot_involutory = squares_trivial(&all);

    let mut report = Report::new("spherical");
    report.push(Check::pass_with(
        "character criterion",
        format!("{} -> {criterion}", if ctx.is_bosonization() { "chi^2 = 1 on G" } else { "chi^2 = 1 on ker chi_z" }),
    ));
    let mut traces = true;
    for &h in &cat.one_dim {
        let (t, ti) = pivot_traces(ctx, &[h]);
        let ok = t == ti;
        traces &= ok;
        report.push(Check::from_result(format!("tr on k_{}", grp.label(h)), ok, || format!("{t} vs {ti}")));
    }
    for ((i, g), s) in &cat.modules {
        let (t, ti) = pivot_traces(ctx, s.module.weights());
        let ok = t == ti;
        traces &= ok;
        report.push(Check::from_result(format!("tr on L{i}^{}", grp.label(*g)), ok && t.is_zero(), || {
            format!("{t} vs {ti}")
        }));
    }
    report.push(Check::from_result("verdicts agree", criterion == traces, || {
        format!("criterion {criterion}, traces {traces}")
    }));
    if criterion != traces {
        return Err(ReprError::SphericalDisagreement(format!("criterion {criterion}, traces {traces}")));
    }
    Ok(SphericalReport { spherical: criterion, pivot_involutory, criterion, traces, report })
}
