//! Groups with a principal YD-realization of the tetrahedron rack with constant cocycle `-1`.

mod config;
mod group;

pub use config::RealizationConfig;
pub use group::{normalize_label, semidirect_index, semidirect_label, Character, FiniteGroup, Turn};

use crate::error::RealizationError;
use crate::rack::{triangle, F4};
use crate::report::{Check, Report};

/// The letters of `z`'s three summands `(x_ω x_0 x_1)^2`, `(x_1 x_ω x_0)^2`, `(x_0 x_1 x_ω)^2`.
pub const Z_SUMMANDS: [[F4; 6]; 3] = [
    [F4::OMEGA, F4::ZERO, F4::ONE, F4::OMEGA, F4::ZERO, F4::ONE],
    [F4::ONE, F4::OMEGA, F4::ZERO, F4::ONE, F4::OMEGA, F4::ZERO],
    [F4::ZERO, F4::ONE, F4::OMEGA, F4::ZERO, F4::ONE, F4::OMEGA],
];

/// Letters of the top word `x_0x_1x_0x_ωx_0x_1x_ωx_0x_ω²`.
pub const TOP_WORD: [F4; 9] =
    [F4::ZERO, F4::ONE, F4::ZERO, F4::OMEGA, F4::ZERO, F4::ONE, F4::OMEGA, F4::ZERO, F4::OMEGA2];

/// A group `G` with an action on `F4`, an injection `g: F4 → G` and a character `χ_G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDRealization {
    group: FiniteGroup,
    dot: Vec<[F4; 4]>,
    gmap: [usize; 4],
    chi: Character,
}

impl YDRealization {
    /// Assembles a realization without checking it. See [`validate_realization`].
    pub fn from_parts(group: FiniteGroup, dot: Vec<[F4; 4]>, gmap: [usize; 4], chi: Character) -> Self {
        YDRealization { group, dot, gmap, chi }
    }

    /// Assembles and validates; the error carries the first failed check.
    pub fn new(group: FiniteGroup, dot: Vec<[F4; 4]>, gmap: [usize; 4], chi: Character) -> Result<Self, RealizationError> {
        let r = Self::from_parts(group, dot, gmap, chi);
        let report = validate_realization(&r);
        match report.first_failure() {
            None => Ok(r),
            Some(c) => Err(RealizationError::Invalid(format!(
                "{}: {}",
                c.name,
                c.witness.clone().unwrap_or_default()
            ))),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn chi(&self) -> &Character {
        &self.chi
    }

    /// `χ_z = χ_G^6`.
    pub fn chi_z(&self) -> Character {
        self.chi.pow(6)
    }

    /// `g_i`.
    pub fn g(&self, i: F4) -> usize {
        self.gmap[i.index()]
    }

    pub fn gmap(&self) -> [usize; 4] {
        self.gmap
    }

    /// `h · i`.
    pub fn act(&self, h: usize, i: F4) -> F4 {
        self.dot[h][i.index()]
    }

    pub fn dot_table(&self) -> &[[F4; 4]] {
        &self.dot
    }

    /// Weight `g_{i_1}^{-1} ⋯ g_{i_l}^{-1}` of the monomial `x_{i_1} ⋯ x_{i_l}`.
    pub fn word_weight(&self, letters: &[F4]) -> usize {
        let g = &self.group;
        g.product(letters.iter().map(|&i| g.inv(self.g(i))))
    }

    /// `g_top`, the weight of the top word.
    pub fn g_top(&self) -> usize {
        self.word_weight(&TOP_WORD)
    }

    pub fn label(&self, h: usize) -> &str {
        self.group.label(h)
    }
}

/// The `(m, k)`-affine realization over `F4 ⋊_ω C_{6m}` with `g_i = (i, t^{6k+1})`.
pub fn mk_affine_realization(m: usize, k: usize) -> Result<YDRealization, RealizationError> {
    if m == 0 || k >= m {
        return Err(RealizationError::OutOfRange(format!("need 0 <= k < m, got m={m}, k={k}")));
    }
    let order = 6 * m;
    let group = FiniteGroup::f4_semidirect(order);
    let gmap = F4::ALL.map(|i| semidirect_index(i, 6 * k + 1, order));
    let dot = derive_dot(&group, &gmap)?;
    let chi = Character::new(group.elements().map(|x| Turn::new((x / 4) as i64, 2)).collect());
    Ok(YDRealization { group, dot, gmap, chi })
}

/// The action forced by `g_{h·i} = h g_i h^{-1}`.
fn derive_dot(group: &FiniteGroup, gmap: &[usize; 4]) -> Result<Vec<[F4; 4]>, RealizationError> {
    group
        .elements()
        .map(|h| {
            let mut row = [F4::ZERO; 4];
            for i in F4::ALL {
                let c = group.mul(group.mul(h, gmap[i.index()]), group.inv(h));
                let j = gmap.iter().position(|&g| g == c).ok_or_else(|| {
                    RealizationError::Invalid(format!("{} g_{} {}^-1 is not some g_j", group.label(h), i, group.label(h)))
                })?;
                row[i.index()] = F4::new(j as u8);
            }
            Ok(row)
        })
        .collect()
}

/// Realization over `G × G1` with `G1` acting trivially and `χ = χ_base × χ1`.
pub fn extend_realization(
    base: &YDRealization,
    extra: &FiniteGroup,
    chi1: &Character,
) -> Result<YDRealization, RealizationError> {
    if let Some((a, b)) = chi1.multiplicativity_witness(extra) {
        return Err(RealizationError::InvalidCharacter(if a == usize::MAX {
            "length does not match the group".into()
        } else {
            format!("chi1({}*{}) != chi1({})chi1({})", extra.label(a), extra.label(b), extra.label(a), extra.label(b))
        }));
    }
    let m = extra.size();
    let group = base.group.direct_product(extra);
    let dot = group.elements().map(|x| base.dot[x / m]).collect();
    let gmap = base.gmap.map(|g| g * m + extra.identity());
    let chi = base.chi.product(chi1);
    Ok(YDRealization { group, dot, gmap, chi })
}

/// Exhaustive check of every realization axiom.
pub fn validate_realization(r: &YDRealization) -> Report {
    let g = &r.group;
    let mut report = Report::new("realization");

    let table_ok = FiniteGroup::from_table(g.rows(), Some(g.labels().to_vec()));
    report.push(Check::from_result("group axioms", table_ok.is_ok(), || format!("{:?}", table_ok.err())));

    let shapes_ok = r.dot.len() == g.size() && r.chi.len() == g.size() && r.gmap.iter().all(|&x| x < g.size());
    report.push(Check::from_result("table sizes", shapes_ok, || "dot, chi or gmap do not match |G|".into()));
    if !shapes_ok {
        return report;
    }

    let mut action = None;
    for i in F4::ALL {
        if r.act(g.identity(), i) != i {
            action = Some(format!("e.{i} = {}", r.act(g.identity(), i)));
            break;
        }
    }
    'outer: for a in g.elements() {
        if action.is_some() {
            break;
        }
        for b in g.elements() {
            for i in F4::ALL {
                if r.act(g.mul(a, b), i) != r.act(a, r.act(b, i)) {
                    action = Some(format!("({} {}).{}", g.label(a), g.label(b), i));
                    break 'outer;
                }
            }
        }
    }
    report.push(Check::from_result("dot is a group action", action.is_none(), || action.clone().unwrap()));

    let mut inj = None;
    for i in F4::ALL {
        for j in F4::ALL {
            if i < j && r.g(i) == r.g(j) {
                inj = Some(format!("g_{i} = g_{j} = {}", g.label(r.g(i))));
            }
        }
    }
    report.push(Check::from_result("gmap injective", inj.is_none(), || inj.clone().unwrap()));

    let mut equiv = None;
    'eq: for h in g.elements() {
        for i in F4::ALL {
            let conj = g.mul(g.mul(h, r.g(i)), g.inv(h));
            if r.g(r.act(h, i)) != conj {
                equiv = Some(format!("h = {}, i = {i}", g.label(h)));
                break 'eq;
            }
        }
    }
    report.push(Check::from_result("g_(h.i) = h g_i h^-1", equiv.is_none(), || equiv.clone().unwrap()));

    let mut rack = None;
    'rk: for i in F4::ALL {
        for j in F4::ALL {
            if r.act(r.g(i), j) != triangle(i, j) {
                rack = Some(format!("g_{i}.{j} = {} but {i}|>{j} = {}", r.act(r.g(i), j), triangle(i, j)));
                break 'rk;
            }
        }
    }
    report.push(Check::from_result("g_i . j = i |> j", rack.is_none(), || rack.clone().unwrap()));

    let mult = r.chi.multiplicativity_witness(g);
    report.push(Check::from_result("chi multiplicative", mult.is_none(), || {
        let (a, b) = mult.unwrap();
        format!("({}, {})", g.label(a), g.label(b))
    }));

    let minus_one = Turn::new(1, 2);
    let bad = F4::ALL.into_iter().find(|&i| r.chi.turn(r.g(i)) != minus_one);
    report.push(Check::from_result("chi(g_i) = -1", bad.is_none(), || {
        let i = bad.unwrap();
        format!("chi(g_{i}) = {}", r.chi.value(r.g(i)))
    }));
    report
}

/// `ker χ_z = {g : χ_G(g)^6 = 1}`, sorted.
pub fn ker_chi_z(r: &YDRealization) -> Vec<usize> {
    let chi_z = r.chi_z();
    let ker: Vec<usize> = r.group.elements().filter(|&g| chi_z.turn(g).is_one()).collect();
    debug_assert!(r.group.is_subgroup(&ker));
    ker
}

/// Whether `z` has weight `e`. Errors if its three summands have different weights.
pub fn z_weight_is_e(r: &YDRealization) -> Result<bool, RealizationError> {
    let w = Z_SUMMANDS.map(|s| r.word_weight(&s));
    if w[0] != w[1] || w[1] != w[2] {
        return Err(RealizationError::InconsistentZWeight(format!(
            "{}, {}, {}",
            r.label(w[0]),
            r.label(w[1]),
            r.label(w[2])
        )));
    }
    Ok(w[0] == r.group.identity())
}

/// The epimorphism `G' → F4 ⋊ C_6`, `g_i ↦ (i, t)`, on the subgroup `G'` generated by the `g_i`.
#[derive(Clone, Debug)]
pub struct Epimorphism {
    target: FiniteGroup,
    image: Vec<Option<usize>>,
    preimage: Vec<Vec<usize>>,
}

impl Epimorphism {
    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    /// Image of `h`, or `None` if `h ∉ G'`.
    pub fn apply(&self, h: usize) -> Option<usize> {
        self.image[h]
    }

    /// Elements of `G'` as a sorted list.
    pub fn domain(&self) -> Vec<usize> {
        (0..self.image.len()).filter(|&h| self.image[h].is_some()).collect()
    }

    pub fn fibre(&self, y: usize) -> &[usize] {
        &self.preimage[y]
    }

    pub fn is_isomorphism(&self) -> bool {
        self.preimage.iter().all(|f| f.len() == 1)
    }

    /// The unique preimage when the map is bijective on `G'`.
    pub fn inverse(&self, y: usize) -> Option<usize> {
        match self.preimage[y].as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }
}

pub fn epimorphism_to_f4c6(r: &YDRealization) -> Result<Epimorphism, RealizationError> {
    let g = &r.group;
    let target = FiniteGroup::f4_semidirect(6);
    let gen_images = F4::ALL.map(|i| semidirect_index(i, 1, 6));
    let mut image = vec![None; g.size()];
    image[g.identity()] = Some(target.identity());
    let mut queue = vec![g.identity()];
    let mut k = 0;
    while k < queue.len() {
        let h = queue[k];
        let p = image[h].unwrap();
        for i in F4::ALL {
            let h2 = g.mul(h, r.g(i));
            let p2 = target.mul(p, gen_images[i.index()]);
            match image[h2] {
                None => {
                    image[h2] = Some(p2);
                    queue.push(h2);
                }
                Some(q) if q != p2 => {
                    return Err(RealizationError::Epimorphism(format!(
                        "{} reached with images {} and {}",
                        g.label(h2),
                        target.label(q),
                        target.label(p2)
                    )));
                }
                _ => {}
            }
        }
        k += 1;
    }
    let mut preimage = vec![Vec::new(); target.size()];
    for h in g.elements() {
        if let Some(p) = image[h] {
            preimage[p].push(h);
        }
    }
    if let Some(y) = preimage.iter().position(|f| f.is_empty()) {
        return Err(RealizationError::Epimorphism(format!("{} is not in the image", target.label(y))));
    }
    Ok(Epimorphism { target, image, preimage })
}
