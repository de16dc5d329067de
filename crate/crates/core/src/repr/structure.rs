use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::module::Module;
use super::simple::SimpleCatalog;
use crate::algebra::AlgebraContext;
use crate::error::ReprError;
use crate::linalg::{nullspace, vec_add_scaled, Span, Vector};
use crate::scalars::Cyclotomic;

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Index into `SimpleCatalog::twelve` → multiplicity, nonzero entries only.
    pub multiplicities: BTreeMap<usize, usize>,
    /// The summand supported on `{g : f(g) = 0}`.
    pub residual: Module,
}

/// `M = N ⊕ ⊕ L^{d}` with `d_{[i,g]} = dim e_i^g M` and `supp N ⊆ {f = 0}`.
pub fn decompose(ctx: &AlgebraContext, cat: &SimpleCatalog, m: &Module) -> Result<Decomposition, ReprError> {
    if let Some(c) = m.check(ctx).first_failure() {
        return Err(ReprError::ModuleInvariant(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    let mut multiplicities = BTreeMap::new();
    let mut twelve_dim = 0;
    for (k, class) in cat.twelve.iter().enumerate() {
        let (i, g) = class.rep;
        let e = &cat.idempotents[&g][i - 1];
        let mut span = Span::new(m.dim());
        for c in m.weight_space(g) {
            span.insert(m.apply_elem(ctx, e, &m.unit(c)));
        }
        if span.dim() > 0 {
            multiplicities.insert(k, span.dim());
            twelve_dim += 12 * span.dim();
        }
    }
    // Weights with f = 0 form a union of G'-cosets, so both weight blocks are submodules.
    let residual = m.restrict(|h| ctx.f(h).is_zero())?;
    if residual.dim() + twelve_dim != m.dim() {
        return Err(ReprError::ModuleInvariant(format!(
            "dimensions do not add up: {} + {twelve_dim} != {}",
            residual.dim(),
            m.dim()
        )));
    }
    Ok(Decomposition { multiplicities, residual })
}

/// `rad(A) δ_g` for every `g`, as the common annihilator of all simple modules.
pub struct Radical<'a> {
    ctx: &'a AlgebraContext,
    simples: Vec<Module>,
    cache: Vec<OnceLock<Vec<Vector>>>,
}

impl<'a> Radical<'a> {
    pub fn new(ctx: &'a AlgebraContext, cat: &SimpleCatalog) -> Self {
        let cache = ctx.group().elements().map(|_| OnceLock::new()).collect();
        Radical { ctx, simples: cat.representatives(), cache }
    }

    /// Basis of `rad(A) δ_g` in `𝔹δ_g` coordinates. Since `aδ_g` acts only on
    /// weight-`g` vectors, only simples with `S[g] ≠ 0` contribute equations.
    pub fn at(&self, g: usize) -> &[Vector] {
        self.cache[g].get_or_init(|| {
            let basis = self.ctx.basis();
            let n = basis.dim();
            let mut rows: Vec<Vector> = Vec::new();
            for s in &self.simples {
                for k in s.weight_space(g) {
                    let images: Vec<Vector> = basis.words().iter().map(|w| s.apply_word(w, &s.unit(k))).collect();
                    for r in 0..s.dim() {
                        let row: Vector = images.iter().map(|v| v[r].clone()).collect();
                        if row.iter().any(|x| !x.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
            if rows.is_empty() {
                return (0..n).map(|b| unit(n, b)).collect();
            }
            nullspace(&rows, n)
        })
    }

    /// `r · v` for `r ∈ rad(A)δ_h` given by coordinates, `v ∈ M[h]`.
    fn act(&self, m: &Module, r: &[Cyclotomic], v: &[Cyclotomic]) -> Vector {
        let mut out = vec![Cyclotomic::zero(); m.dim()];
        for (b, c) in r.iter().enumerate() {
            if !c.is_zero() {
                vec_add_scaled(&mut out, &m.apply_word(self.ctx.basis().word(b), v), c);
            }
        }
        out
    }
}

fn unit(n: usize, k: usize) -> Vector {
    let mut v = vec![Cyclotomic::zero(); n];
    v[k] = Cyclotomic::one();
    v
}

#[derive(Clone, Debug)]
pub struct RadTopSocle {
    /// Basis of `rad M = rad(A) M`.
    pub rad: Vec<Vector>,
    /// Weights of `top M = M / rad M`, with multiplicity, sorted.
    pub top_weights: Vec<usize>,
    /// Basis of `soc M = {m : rad(A) m = 0}`.
    pub socle: Vec<Vector>,
    pub socle_weights: Vec<usize>,
}

pub fn radical_top_socle(rad: &Radical<'_>, m: &Module) -> Result<RadTopSocle, ReprError> {
    let mut rad_span = Span::new(m.dim());
    let mut socle = Vec::new();
    let mut socle_weights = Vec::new();
    for h in m.support() {
        let space = m.weight_space(h);
        let rad_h = rad.at(h);
        // Columns: images of each weight-h basis vector under each radical element.
        let mut rows: Vec<Vector> = Vec::new();
        let images: Vec<Vec<Vector>> = space
            .iter()
            .map(|&k| rad_h.iter().map(|r| rad.act(m, r, &m.unit(k))).collect())
            .collect();
        for (ri, _) in rad_h.iter().enumerate() {
            for coord in 0..m.dim() {
                let row: Vector = images.iter().map(|imgs| imgs[ri][coord].clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
            for imgs in &images {
                let v = &imgs[ri];
                if v.iter().any(|x| !x.is_zero()) {
                    if m.vector_weight(v).is_none() {
                        return Err(ReprError::ModuleInvariant("radical image is not homogeneous".into()));
                    }
                    rad_span.insert(v.clone());
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..space.len()).map(|k| unit(space.len(), k)).collect()
        } else {
            nullspace(&rows, space.len())
        };
        for coeffs in kernel {
            let mut v = vec![Cyclotomic::zero(); m.dim()];
            for (c, &k) in coeffs.iter().zip(&space) {
                v[k] = c.clone();
            }
            socle.push(v);
            socle_weights.push(h);
        }
    }
    let rad_basis = rad_span.basis().to_vec();
    let mut top_weights = m.weights().to_vec();
    for v in &rad_basis {
        let w = m.vector_weight(v).expect("homogeneous");
        let pos = top_weights.iter().position(|x| *x == w).expect("weight occurs");
        top_weights.remove(pos);
    }
    top_weights.sort_unstable();
    Ok(RadTopSocle { rad: rad_basis, top_weights, socle, socle_weights })
}

/// Whether `v` is a nonzero multiple of `target`.
pub fn is_multiple_of(v: &[Cyclotomic], target: &[Cyclotomic]) -> bool {
    let Some(k) = target.iter().position(|x| !x.is_zero()) else { return false };
    let Ok(inv) = target[k].inv() else { return false };
    let s = &v[k] * &inv;
    !s.is_zero() && v.iter().zip(target).all(|(a, b)| *a == &s * b)
}

/// Blocks of the relation `e A ẽ ≠ 0` on the idempotents `⋃_g ℰ_g`, as `(i, g)`
/// pairs (`i = 1` stands for `δ_g` when `f(g) = 0`). `A ẽ` is `M_h` or `L_j^h`.
pub fn linkage_blocks(ctx: &AlgebraContext, cat: &SimpleCatalog) -> Result<Vec<Vec<(usize, usize)>>, ReprError> {
    // Idempotents: (i, g) with i = 1 for δ_g when f(g) = 0.
    let mut ids: Vec<(usize, usize)> = Vec::new();
    for g in ctx.group().elements() {
        if ctx.f(g).is_zero() {
            ids.push((1, g));
        } else {
            ids.extend((1..=6).map(|i| (i, g)));
        }
    }
    let index: BTreeMap<(usize, usize), usize> = ids.iter().enumerate().map(|(k, id)| (*id, k)).collect();
    let mut parent: Vec<usize> = (0..ids.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(j, h) in &ids {
        // A ẽ for ẽ = e_j^h (or δ_h).
        let module = if ctx.f(h).is_zero() {
            super::module::verma(ctx, h)
        } else {
            cat.modules[&(j, h)].module.clone()
        };
        for g in module.support() {
            let space = module.weight_space(g);
            let members: Vec<(usize, crate::algebra::AlgebraElem)> = if ctx.f(g).is_zero() {
                vec![(1, ctx.delta(g))]
            } else {
                cat.idempotents[&g].iter().cloned().enumerate().map(|(k, e)| (k + 1, e)).collect()
            };
            for (i, e) in members {
                let nonzero = space.iter().any(|&k| module.apply_elem(ctx, &e, &module.unit(k)).iter().any(|x| !x.is_zero()));
                if nonzero {
                    let (a, b) = (find(&mut parent, index[&(i, g)]), find(&mut parent, index[&(j, h)]));
                    parent[a] = b;
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (k, id) in ids.iter().enumerate() {
        let root = find(&mut parent, k);
        blocks.entry(root).or_default().push(*id);
    }
    let mut out: Vec<_> = blocks.into_values().collect();
    out.sort();
    Ok(out)
}
