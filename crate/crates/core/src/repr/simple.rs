use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::idempotents::idempotent_set;
use super::module::{one_dim, verma, Module};
use crate::algebra::{AlgebraContext, AlgebraElem};
use crate::error::ReprError;
use crate::linalg::{nullspace, Vector};
use crate::rack::F4;
use crate::realization::{epimorphism_to_f4c6, semidirect_index, Epimorphism};
use crate::report::{Check, Report};
use crate::scalars::Cyclotomic;

/// `L_i^g = A e_i^g` together with its embedding into `M_g`.
#[derive(Clone, Debug)]
pub struct SimpleModule {
    pub i: usize,
    pub g: usize,
    pub module: Module,
    /// Basis of `L_i^g` in `𝔹δ_g` coordinates.
    pub embedding: Vec<Vector>,
}

impl SimpleModule {
    pub fn support(&self) -> Vec<usize> {
        self.module.support()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SimpleClass {
    OneDimensional { h: usize },
    TwelveDimensional { rep: (usize, usize), support: Vec<usize> },
}

/// An isomorphism class of 12-dimensional simples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwelveClass {
    /// Least `(i, g)` by `(i, group index)`.
    pub rep: (usize, usize),
    pub support: Vec<usize>,
    pub members: Vec<(usize, usize)>,
}

/// All simples: `𝕜_h` for `f(h) = 0` and the modules `L_i^g`.
#[derive(Clone, Debug)]
pub struct SimpleCatalog {
    pub one_dim: Vec<usize>,
    pub twelve: Vec<TwelveClass>,
    pub modules: BTreeMap<(usize, usize), SimpleModule>,
    pub idempotents: BTreeMap<usize, Vec<AlgebraElem>>,
}

impl SimpleCatalog {
    pub fn classes(&self) -> Vec<SimpleClass> {
        let mut out: Vec<SimpleClass> = self.one_dim.iter().map(|&h| SimpleClass::OneDimensional { h }).collect();
        out.extend(
            self.twelve.iter().map(|c| SimpleClass::TwelveDimensional { rep: c.rep, support: c.support.clone() }),
        );
        out
    }

    pub fn simple(&self, i: usize, g: usize) -> Option<&SimpleModule> {
        self.modules.get(&(i, g))
    }

    /// Index into `twelve` of the class of `L_i^g`.
    pub fn class_of(&self, i: usize, g: usize) -> Option<usize> {
        let s = self.modules.get(&(i, g))?.support();
        self.twelve.iter().position(|c| c.support == s)
    }

    /// The simple modules, one per class: `𝕜_h` first, then class representatives.
    pub fn representatives(&self) -> Vec<Module> {
        let mut out: Vec<Module> = self.one_dim.iter().map(|&h| one_dim(h)).collect();
        out.extend(self.twelve.iter().map(|c| self.modules[&c.rep].module.clone()));
        out
    }
}

/// The coordinates of `a ∈ A δ_g` in `M_g = 𝔹 δ_g`.
pub fn elem_vector(ctx: &AlgebraContext, a: &AlgebraElem, g: usize) -> Result<Vector, ReprError> {
    let mut v = vec![Cyclotomic::zero(); ctx.basis().dim()];
    for (b, h, c) in a.terms() {
        if h != g {
            return Err(ReprError::Precondition(format!("element is not in A delta_{}", ctx.group().label(g))));
        }
        v[b] = c.clone();
    }
    Ok(v)
}

fn simple_from(ctx: &AlgebraContext, m_g: &Module, e: &AlgebraElem, i: usize, g: usize) -> Result<SimpleModule, ReprError> {
    let (module, embedding) = m_g.generated(&[elem_vector(ctx, e, g)?])?;
    if module.dim() != 12 {
        return Err(ReprError::SimpleDimension(module.dim()));
    }
    certify_simple(&module)?;
    let mut module = module;
    let labels = (1..=12).map(|k| format!("v{k}")).collect();
    module = Module::new(module.weights().to_vec(), F4::ALL.map(|a| module.action(a).to_vec()), labels)?;
    Ok(SimpleModule { i, g, module, embedding })
}

/// `L_i^g = A e_i^g ⊂ M_g`, `f(g) ≠ 0`, `1 ≤ i ≤ 6`.
pub fn simple_module(ctx: &AlgebraContext, i: usize, g: usize) -> Result<SimpleModule, ReprError> {
    if ctx.f(g).is_zero() || !(1..=6).contains(&i) {
        return Err(ReprError::Precondition(format!("need f(g) != 0 and 1 <= i <= 6, got i = {i}")));
    }
    let set = idempotent_set(ctx, g)?;
    simple_from(ctx, &verma(ctx, g), &set.members[i - 1], i, g)
}

/// Submodules are graded, so a nonzero submodule contains a weight vector.
/// When all weight spaces are one-dimensional it suffices that each basis
/// vector generates the whole module.
pub fn certify_simple(m: &Module) -> Result<(), ReprError> {
    if m.dim() == 0 {
        return Err(ReprError::NotSimple("zero module".into()));
    }
    if m.support().len() != m.dim() {
        return Err(ReprError::NotSimple("a weight space has dimension > 1; not certified".into()));
    }
    for k in 0..m.dim() {
        let (sub, _) = m.generated(&[m.unit(k)])?;
        if sub.dim() != m.dim() {
            return Err(ReprError::NotSimple(format!("{} generates a submodule of dimension {}", m.labels()[k], sub.dim())));
        }
    }
    Ok(())
}

/// `dim Hom_A(M, N)`: weight-preserving maps commuting with every `x_a`.
pub fn hom_dim(m: &Module, n: &Module) -> usize {
    let mut unknown: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for r in 0..n.dim() {
        for c in 0..m.dim() {
            if n.weight(r) == m.weight(c) {
                let k = unknown.len();
                unknown.insert((r, c), k);
            }
        }
    }
    let u = unknown.len();
    if u == 0 {
        return 0;
    }
    let mut rows: BTreeMap<(usize, usize, usize), Vec<Cyclotomic>> = BTreeMap::new();
    for a in F4::ALL {
        // (X ρ_M(a))[r][c] = Σ_k X[r][k] ρ_M(a)[k][c]
        for (c, col) in m.action(a).iter().enumerate() {
            for (k, val) in col {
                for r in 0..n.dim() {
                    if let Some(&x) = unknown.get(&(r, *k)) {
                        let row = rows.entry((a.index(), r, c)).or_insert_with(|| vec![Cyclotomic::zero(); u]);
                        row[x] += val;
                    }
                }
            }
        }
        // (ρ_N(a) X)[r][c] = Σ_k ρ_N(a)[r][k] X[k][c]
        for (k, col) in n.action(a).iter().enumerate() {
            for (r, val) in col {
                for c in 0..m.dim() {
                    if let Some(&x) = unknown.get(&(k, c)) {
                        let row = rows.entry((a.index(), *r, c)).or_insert_with(|| vec![Cyclotomic::zero(); u]);
                        row[x] += &-val;
                    }
                }
            }
        }
    }
    let mat: Vec<Vector> = rows.into_values().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    if mat.is_empty() {
        return u;
    }
    nullspace(&mat, u).len()
}

/// Builds every simple module and groups the 12-dimensional ones by support.
pub fn classify_simples(ctx: &AlgebraContext) -> Result<SimpleCatalog, ReprError> {
    let grp = ctx.group();
    // f vanishes exactly on ker χ_z unless λ = 0, where every weight is one-dimensional.
    let one_dim_classes: Vec<usize> = grp.elements().filter(|&h| ctx.f(h).is_zero()).collect();
    for &h in &one_dim_classes {
        if let Some(c) = one_dim(h).check(ctx).first_failure() {
            return Err(ReprError::ModuleInvariant(format!("k_{}: {}", grp.label(h), c.name)));
        }
    }
    let outside: Vec<usize> = grp.elements().filter(|&g| !ctx.f(g).is_zero()).collect();
    let per_g = outside
        .par_iter()
        .map(|&g| {
            let set = idempotent_set(ctx, g)?;
            let m_g = verma(ctx, g);
            let mods = (1..=6)
                .map(|i| simple_from(ctx, &m_g, &set.members[i - 1], i, g))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((g, set.members, mods))
        })
        .collect::<Result<Vec<_>, ReprError>>()?;

    let mut modules = BTreeMap::new();
    let mut idempotents = BTreeMap::new();
    let mut by_support: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
    for (g, members, mods) in per_g {
        idempotents.insert(g, members);
        for s in mods {
            by_support.entry(s.support()).or_default().push((s.i, s.g));
            modules.insert((s.i, s.g), s);
        }
    }
    let mut twelve: Vec<TwelveClass> = by_support
        .into_iter()
        .map(|(support, mut members)| {
            members.sort_unstable();
            TwelveClass { rep: members[0], support, members }
        })
        .collect();
    twelve.sort_by_key(|c| c.rep);

    let expected = (grp.size() - one_dim_classes.len()) / 2;
    if twelve.len() != expected {
        return Err(ReprError::ClassCount(format!("{} twelve-dimensional classes, expected {expected}", twelve.len())));
    }
    Ok(SimpleCatalog { one_dim: one_dim_classes, twelve, modules, idempotents })
}

/// `(i, (j, s))` for the members `L_i^{(j,t^s)g}` of the class of `L_1^g`.
pub const ISOMORPHISM_BATCH: [(usize, (F4, usize)); 12] = [
    (1, (F4::ZERO, 0)),
    (2, (F4::ONE, 2)),
    (3, (F4::ZERO, 1)),
    (4, (F4::OMEGA, 2)),
    (5, (F4::ONE, 1)),
    (6, (F4::OMEGA, 0)),
    (1, (F4::ZERO, 3)),
    (2, (F4::ONE, 5)),
    (3, (F4::ZERO, 4)),
    (4, (F4::OMEGA, 5)),
    (5, (F4::ONE, 4)),
    (6, (F4::OMEGA, 3)),
];

/// Checks `L_1^g ≅ L_i^{hg}` for the batch above. `h` ranges over the lifts
/// of `(j, t^s)` to `G'`; exactly one lift must match supports, and the
/// isomorphism is confirmed independently by `dim Hom = 1`.
pub fn isomorphism_batch(ctx: &AlgebraContext, cat: &SimpleCatalog, g: usize) -> Result<Report, ReprError> {
    let grp = ctx.group();
    let pi: Epimorphism = epimorphism_to_f4c6(ctx.realization())?;
    let base = cat
        .simple(1, g)
        .ok_or_else(|| ReprError::Precondition(format!("no L_1 at {}", grp.label(g))))?;
    let mut report = Report::new("isomorphism batch");
    for (i, (j, s)) in ISOMORPHISM_BATCH {
        let target = semidirect_index(j, s, 6);
        let name = format!("L1^g ~ L{i}^{}g", pi.target().label(target));
        let matches: Vec<usize> = pi
            .fibre(target)
            .iter()
            .copied()
            .filter(|&h| cat.simple(i, grp.mul(h, g)).is_some_and(|m| m.support() == base.support()))
            .collect();
        let check = match matches.as_slice() {
            [h] => {
                let other = &cat.modules[&(i, grp.mul(*h, g))];
                let d = hom_dim(&base.module, &other.module);
                Check::from_result(name, d == 1, || format!("supports agree but dim Hom = {d}"))
            }
            _ => Check::fail(name, format!("{} lifts with equal support", matches.len())),
        };
        report.push(check);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::module::tests::extended;

    #[test]
    fn simple_l1_has_dimension_12() {
        let ctx = extended();
        let g = ctx.group().elements().find(|g| !ctx.in_ker(*g)).unwrap();
        let l = simple_module(&ctx, 1, g).unwrap();
        assert_eq!(l.module.dim(), 12);
        assert_eq!(l.support().len(), 12);
        assert!(l.module.check(&ctx).all_passed());
        assert_eq!(hom_dim(&l.module, &l.module), 1);
        let l2 = simple_module(&ctx, 2, g).unwrap();
        assert_eq!(hom_dim(&l.module, &l2.module), 0);
        assert!(simple_module(&ctx, 1, ctx.group().identity()).is_err());
    }

    #[test]
    fn verma_is_not_simple() {
        let ctx = extended();
        let m = verma(&ctx, ctx.group().identity());
        assert!(certify_simple(&m).is_err());
    }
}
