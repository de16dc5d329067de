use serde::Serialize;

use crate::algebra::{apply_cols, spaced, AlgebraContext, AlgebraElem, EvalCol};
use crate::error::ReprError;
use crate::linalg::{is_zero_vec, vec_add_scaled, Span, Vector};
use crate::rack::F4;
use crate::report::{Check, Report};
use crate::rewrite::{base_relations, FreeElem, Word};
use crate::scalars::Cyclotomic;

/// A finite-dimensional module with a weight basis. `δ_h` acts as the
/// projection onto weight-`h` basis vectors; `actions[a][c]` is the sparse
/// column of `x_a` applied to basis vector `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct Module {
    weights: Vec<usize>,
    actions: [Vec<EvalCol>; 4],
    labels: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub weights: Vec<String>,
    pub actions: Vec<ActionJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionJson {
    pub generator: String,
    pub matrix: Vec<Vec<String>>,
}

impl Module {
    pub fn new(weights: Vec<usize>, actions: [Vec<EvalCol>; 4], labels: Vec<String>) -> Result<Self, ReprError> {
        let n = weights.len();
        if labels.len() != n || actions.iter().any(|a| a.len() != n) {
            return Err(ReprError::ModuleInvariant("sizes of weights, labels and actions differ".into()));
        }
        if actions.iter().flatten().flatten().any(|(r, _)| *r >= n) {
            return Err(ReprError::ModuleInvariant("action entry out of range".into()));
        }
        Ok(Module { weights, actions, labels })
    }

    pub fn zero() -> Self {
        Module { weights: Vec::new(), actions: Default::default(), labels: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, k: usize) -> usize {
        self.weights[k]
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn action(&self, a: F4) -> &[EvalCol] {
        &self.actions[a.index()]
    }

    /// `supp M`, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.weights.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn weight_space(&self, h: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.weights[k] == h).collect()
    }

    pub fn unit(&self, k: usize) -> Vector {
        let mut v = vec![Cyclotomic::zero(); self.dim()];
        v[k] = Cyclotomic::one();
        v
    }

    /// The weight of `v` if it is nonzero and homogeneous.
    pub fn vector_weight(&self, v: &[Cyclotomic]) -> Option<usize> {
        let mut w = None;
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match w {
                None => w = Some(self.weights[k]),
                Some(h) if h != self.weights[k] => return None,
                _ => {}
            }
        }
        w
    }

    pub fn apply_letter(&self, a: F4, v: &[Cyclotomic]) -> Vector {
        apply_cols(&self.actions[a.index()], v)
    }

    pub fn apply_word(&self, w: &Word, v: &[Cyclotomic]) -> Vector {
        let mut v = v.to_vec();
        for a in w.letters().rev() {
            v = self.apply_letter(a, &v);
        }
        v
    }

    pub fn project(&self, h: usize, v: &[Cyclotomic]) -> Vector {
        v.iter()
            .enumerate()
            .map(|(k, c)| if self.weights[k] == h { c.clone() } else { Cyclotomic::zero() })
            .collect()
    }

    /// `a · v` for `a = Σ c b δ_h`.
    pub fn apply_elem(&self, ctx: &AlgebraContext, a: &AlgebraElem, v: &[Cyclotomic]) -> Vector {
        let mut out = vec![Cyclotomic::zero(); self.dim()];
        for (b, h, c) in a.terms() {
            let p = self.project(h, v);
            if is_zero_vec(&p) {
                continue;
            }
            let w = self.apply_word(ctx.basis().word(b), &p);
            vec_add_scaled(&mut out, &w, c);
        }
        out
    }

    /// `x · v` for a free-algebra element with `F` acting as `f(weight)`.
    pub fn apply_free(&self, ctx: &AlgebraContext, x: &FreeElem, v: &[Cyclotomic]) -> Vector {
        let mut out = vec![Cyclotomic::zero(); self.dim()];
        for h in self.support() {
            let p = self.project(h, v);
            if is_zero_vec(&p) {
                continue;
            }
            for (w, c) in x.terms() {
                let c = c.eval(ctx.f(h));
                vec_add_scaled(&mut out, &self.apply_word(w, &p), &c);
            }
        }
        out
    }

    /// The defining relations hold and each `x_a` maps weight `h` to `g_a^{-1} h`.
    pub fn check(&self, ctx: &AlgebraContext) -> Report {
        let mut report = Report::new("module");
        let grp = ctx.group();
        let mut bad = None;
        'outer: for a in F4::ALL {
            let ga_inv = grp.inv(ctx.realization().g(a));
            for (c, col) in self.actions[a.index()].iter().enumerate() {
                for (r, _) in col {
                    if self.weights[*r] != grp.mul(ga_inv, self.weights[c]) {
                        bad = Some(format!("x{} on basis vector {}", letter_name(a), self.labels[c]));
                        break 'outer;
                    }
                }
            }
        }
        report.push(Check::from_result("weights are compatible", bad.is_none(), || bad.clone().unwrap_or_default()));
        for (k, rel) in base_relations().iter().enumerate() {
            let failing = (0..self.dim()).find(|&c| !is_zero_vec(&self.apply_free(ctx, rel, &self.unit(c))));
            report.push(Check::from_result(format!("relation {}", k + 1), failing.is_none(), || {
                format!("fails on basis vector {}", self.labels[failing.unwrap()])
            }));
        }
        report
    }

    /// The submodule generated by weight-homogeneous vectors, with its
    /// basis expressed in the coordinates of `self`.
    pub fn generated(&self, gens: &[Vector]) -> Result<(Module, Vec<Vector>), ReprError> {
        let mut span = Span::new(self.dim());
        let mut queue: Vec<Vector> = Vec::new();
        for v in gens {
            if self.vector_weight(v).is_none() && !is_zero_vec(v) {
                return Err(ReprError::Precondition("generators must be weight vectors".into()));
            }
            if span.insert(v.clone()) {
                queue.push(v.clone());
            }
        }
        let mut k = 0;
        while k < queue.len() {
            for a in F4::ALL {
                let w = self.apply_letter(a, &queue[k]);
                if span.insert(w.clone()) {
                    queue.push(w);
                }
            }
            k += 1;
        }
        let basis = span.basis().to_vec();
        self.induced(&span, &basis)
    }

    /// The module structure on `span` (assumed stable) with the given weight basis.
    fn induced(&self, span: &Span, basis: &[Vector]) -> Result<(Module, Vec<Vector>), ReprError> {
        let weights = basis
            .iter()
            .map(|v| self.vector_weight(v).ok_or_else(|| ReprError::Precondition("basis vector is not homogeneous".into())))
            .collect::<Result<Vec<_>, _>>()?;
        let mut actions: [Vec<EvalCol>; 4] = Default::default();
        for a in F4::ALL {
            for v in basis {
                let w = self.apply_letter(a, v);
                let coords = span
                    .express(&w)
                    .ok_or_else(|| ReprError::ModuleInvariant("subspace is not stable".into()))?;
                actions[a.index()].push(sparse_vec(&coords));
            }
        }
        let labels = (1..=basis.len()).map(|k| format!("v{k}")).collect();
        Ok((Module::new(weights, actions, labels)?, basis.to_vec()))
    }

    /// The submodule spanned by the basis vectors whose weight satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Result<Module, ReprError> {
        let idx: Vec<usize> = (0..self.dim()).filter(|&k| keep(self.weights[k])).collect();
        let mut pos = vec![None; self.dim()];
        for (new, &old) in idx.iter().enumerate() {
            pos[old] = Some(new);
        }
        let mut actions: [Vec<EvalCol>; 4] = Default::default();
        for a in F4::ALL {
            for &c in &idx {
                let col = self.actions[a.index()][c]
                    .iter()
                    .map(|(r, x)| {
                        pos[*r]
                            .map(|p| (p, x.clone()))
                            .ok_or_else(|| ReprError::ModuleInvariant("weight restriction is not a submodule".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                actions[a.index()].push(col);
            }
        }
        Module::new(
            idx.iter().map(|&k| self.weights[k]).collect(),
            actions,
            idx.iter().map(|&k| self.labels[k].clone()).collect(),
        )
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        let n = self.dim();
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("{l}'")).collect();
        labels.extend(other.labels.iter().map(|l| format!("{l}''")));
        let mut actions = self.actions.clone();
        for a in 0..4 {
            actions[a].extend(
                other.actions[a].iter().map(|col| col.iter().map(|(r, x)| (r + n, x.clone())).collect::<Vec<_>>()),
            );
        }
        Module { weights, actions, labels }
    }

    pub fn to_json(&self, ctx: &AlgebraContext) -> ModuleJson {
        let n = self.dim();
        let grp = ctx.group();
        ModuleJson {
            dim: n,
            basis: self.labels.clone(),
            weights: self.weights.iter().map(|&h| grp.label(h).to_string()).collect(),
            actions: F4::ALL
                .iter()
                .map(|&a| {
                    let mut m = vec![vec!["0".to_string(); n]; n];
                    for (c, col) in self.actions[a.index()].iter().enumerate() {
                        for (r, x) in col {
                            m[*r][c] = x.to_string();
                        }
                    }
                    ActionJson { generator: format!("x{}", letter_name(a)), matrix: m }
                })
                .collect(),
        }
    }
}

pub fn letter_name(a: F4) -> String {
    a.symbol().replace('^', "")
}

pub fn sparse_vec(v: &[Cyclotomic]) -> EvalCol {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

/// `M_g = A ⊗_{𝕜^G} 𝕜δ_g` on the basis `𝔹δ_g`.
pub fn verma(ctx: &AlgebraContext, g: usize) -> Module {
    let grp = ctx.group();
    let n = ctx.basis().dim();
    let weights = (0..n).map(|b| grp.mul(ctx.b_weight(b), g)).collect();
    let actions = F4::ALL.map(|a| ctx.left_letter(a, g).to_vec());
    let labels = ctx.basis().words().iter().map(spaced).collect();
    Module { weights, actions, labels }
}

/// The one-dimensional module `𝕜_h`, `h ∈ ker χ_z`.
pub fn one_dim(h: usize) -> Module {
    Module { weights: vec![h], actions: std::array::from_fn(|_| vec![Vec::new()]), labels: vec!["w".into()] }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::realization::{extend_realization, mk_affine_realization, Character, FiniteGroup};

    pub(crate) fn extended() -> AlgebraContext {
        let base = mk_affine_realization(1, 0).unwrap();
        let r = extend_realization(&base, &FiniteGroup::cyclic(4), &Character::cyclic(4, 1)).unwrap();
        AlgebraContext::new(r, Cyclotomic::one()).unwrap()
    }

    #[test]
    fn verma_weights_and_relations() {
        let ctx = extended();
        let outside = ctx.group().elements().find(|g| !ctx.in_ker(*g)).unwrap();
        for g in [ctx.group().identity(), outside] {
            let m = verma(&ctx, g);
            assert_eq!(m.dim(), 72);
            assert_eq!(m.weight(ctx.empty_index()), g);
            let (_, gtop) = ctx.m_top_and_gtop();
            assert_eq!(m.weight(ctx.m_top_index()), ctx.group().mul(gtop, g));
            let r = m.check(&ctx);
            assert!(r.all_passed(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn broken_module_is_caught() {
        let ctx = extended();
        let mut m = verma(&ctx, 0);
        m.actions[0][ctx.empty_index()].push((ctx.empty_index(), Cyclotomic::one()));
        let r = m.check(&ctx);
        assert!(!r.all_passed());
    }

    #[test]
    fn restriction_and_sum() {
        let ctx = extended();
        let m = verma(&ctx, 0);
        let all = m.restrict(|_| true).unwrap();
        assert_eq!(all, m);
        let s = one_dim(0).direct_sum(&one_dim(0));
        assert_eq!(s.dim(), 2);
        assert!(s.check(&ctx).all_passed());
        assert!(m.restrict(|h| h == 0).is_err());
    }

    #[test]
    fn json_dump() {
        let ctx = extended();
        let j = one_dim(0).to_json(&ctx);
        assert_eq!(j.dim, 1);
        assert_eq!(j.actions.len(), 4);
        assert_eq!(j.actions[3].generator, "xw2");
    }
}
