//! Finite groups given by Cayley tables, and characters with root-of-unity values.

use num_integer::Integer;

use crate::error::RealizationError;
use crate::rack::F4;
use crate::scalars::Cyclotomic;

/// A finite group stored as a full multiplication table over indices `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    size: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Builds a group from a Cayley table, checking closure, associativity,
    /// identity and inverses exhaustively.
    pub fn from_table(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self, RealizationError> {
        let n = rows.len();
        if n == 0 {
            return Err(RealizationError::InvalidGroup("empty table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(RealizationError::InvalidGroup(format!("row {a} has length {}", row.len())));
            }
            for &c in row {
                if c >= n {
                    return Err(RealizationError::InvalidGroup(format!("entry {c} out of range in row {a}")));
                }
            }
            table.extend_from_slice(row);
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|k| format!("#{k}")).collect());
        if labels.len() != n {
            return Err(RealizationError::InvalidGroup("label count does not match table".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e * n + a] == a && table[a * n + e] == a))
            .ok_or_else(|| RealizationError::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a * n + b] == identity && table[b * n + a] == identity)
                .ok_or_else(|| RealizationError::InvalidGroup(format!("element {a} has no inverse")))?;
            inverse[a] = b;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(RealizationError::InvalidGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { size: n, table, identity, inverse, labels })
    }

    fn from_mul_fn(n: usize, labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Self {
        let rows = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        Self::from_table(rows, Some(labels)).expect("constructed group tables are valid")
    }

    /// The cyclic group `C_n` on `c^0, ..., c^{n-1}`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n).map(|a| format!("c^{a}")).collect();
        Self::from_mul_fn(n, labels, |a, b| (a + b) % n)
    }

    /// `F4 ⋊_ω C_order` with `t·i = ωi`. Element `(j, t^s)` has index `4s + j`.
    pub fn f4_semidirect(order: usize) -> Self {
        assert!(order >= 1);
        let n = 4 * order;
        let labels = (0..n).map(|x| semidirect_label(F4::new((x % 4) as u8), x / 4)).collect();
        Self::from_mul_fn(n, labels, |x, y| {
            let (i, a) = (F4::new((x % 4) as u8), x / 4);
            let (j, b) = (F4::new((y % 4) as u8), y / 4);
            let k = i.add(F4::omega_pow(a as i64).mul(j));
            4 * ((a + b) % order) + k.index()
        })
    }

    /// Direct product with index `a · |other| + b`; labels `"x*(y)"` unless
    /// `other` is trivial, in which case labels are kept.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let m = other.size;
        let n = self.size * m;
        let labels = (0..n)
            .map(|x| {
                if m == 1 {
                    self.labels[x].clone()
                } else {
                    format!("{}*({})", self.labels[x / m], other.labels[x % m])
                }
            })
            .collect();
        Self::from_mul_fn(n, labels, |x, y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn product(&self, elems: impl IntoIterator<Item = usize>) -> usize {
        elems.into_iter().fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Looks up an element by label. Accepts `#k` for a raw index and the
    /// usual spellings of `ω` in structured labels.
    pub fn find(&self, label: &str) -> Result<usize, RealizationError> {
        let wanted = normalize_label(label);
        if let Some(pos) = self.labels.iter().position(|l| normalize_label(l) == wanted) {
            return Ok(pos);
        }
        if let Some(k) = wanted.strip_prefix('#').and_then(|k| k.parse::<usize>().ok()) {
            if k < self.size {
                return Ok(k);
            }
        }
        Err(RealizationError::UnknownLabel(label.to_string()))
    }

    /// The subgroup generated by `gens`, as a sorted element list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        let mut queue = vec![self.identity];
        seen[self.identity] = true;
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
            i += 1;
        }
        queue.sort_unstable();
        queue
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let mut member = vec![false; self.size];
        for &x in elems {
            member[x] = true;
        }
        member[self.identity]
            && elems.iter().all(|&a| member[self.inv(a)] && elems.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn is_normal_subgroup(&self, elems: &[usize]) -> bool {
        let mut member = vec![false; self.size];
        for &x in elems {
            member[x] = true;
        }
        self.is_subgroup(elems)
            && self.elements().all(|g| elems.iter().all(|&h| member[self.mul(self.mul(g, h), self.inv(g))]))
    }
}

pub fn semidirect_label(j: F4, s: usize) -> String {
    match s {
        0 => format!("({j},1)"),
        1 => format!("({j},t)"),
        _ => format!("({j},t^{s})"),
    }
}

/// Canonical spelling used for label comparison.
pub fn normalize_label(text: &str) -> String {
    let mut s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    s = s.replace("ω²", "w^2").replace("ω", "w");
    s = s.replace("w2", "w^2");
    s = s.replace("t^1)", "t)").replace("t^0)", "1)");
    s = s.replace("(g^", "(c^");
    s
}

/// A root of unity stored as the reduced fraction `k/n` of a full turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Turn {
    num: i64,
    den: u32,
}

impl Turn {
    pub fn new(k: i64, n: u32) -> Turn {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64);
        let g = k.gcd(&(n as i64)).max(1);
        Turn { num: k / g, den: (n as i64 / g) as u32 }
    }

    pub fn one() -> Turn {
        Turn { num: 0, den: 1 }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    /// Multiplicative order of the root of unity.
    pub fn order(self) -> u32 {
        self.den
    }

    pub fn mul(self, other: Turn) -> Turn {
        let d = (self.den as i64).lcm(&(other.den as i64));
        Turn::new(self.num * (d / self.den as i64) + other.num * (d / other.den as i64), d as u32)
    }

    pub fn pow(self, e: i64) -> Turn {
        Turn::new(self.num * e, self.den)
    }

    pub fn inv(self) -> Turn {
        self.pow(-1)
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    pub fn value(self) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.num, self.den)
    }
}

/// A group character with root-of-unity values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    turns: Vec<Turn>,
}

impl Character {
    pub fn new(turns: Vec<Turn>) -> Self {
        Character { turns }
    }

    pub fn trivial(size: usize) -> Self {
        Character { turns: vec![Turn::one(); size] }
    }

    /// The character of a cyclic group sending the generator `c^1` to `ζ_n^k`.
    pub fn cyclic(n: usize, k: i64) -> Self {
        Character { turns: (0..n).map(|a| Turn::new(k * a as i64, n as u32)).collect() }
    }

    pub fn turn(&self, g: usize) -> Turn {
        self.turns[g]
    }

    pub fn value(&self, g: usize) -> Cyclotomic {
        self.turns[g].value()
    }

    pub fn len(&self) -> usize {
        self.turns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.turns.is_empty()
    }

    pub fn pow(&self, e: i64) -> Character {
        Character { turns: self.turns.iter().map(|t| t.pow(e)).collect() }
    }

    /// Least common multiple of the orders of all values.
    pub fn order(&self) -> u32 {
        self.turns.iter().fold(1u32, |acc, t| acc.lcm(&t.order()))
    }

    pub fn is_trivial(&self) -> bool {
        self.turns.iter().all(|t| t.is_one())
    }

    /// First pair `(g, h)` with `χ(gh) ≠ χ(g)χ(h)`, if any.
    pub fn multiplicativity_witness(&self, group: &FiniteGroup) -> Option<(usize, usize)> {
        if self.turns.len() != group.size() {
            return Some((usize::MAX, usize::MAX));
        }
        for g in group.elements() {
            for h in group.elements() {
                if self.turns[group.mul(g, h)] != self.turns[g].mul(self.turns[h]) {
                    return Some((g, h));
                }
            }
        }
        None
    }

    /// Pointwise product on a direct product indexed `a · |B| + b`.
    pub fn product(&self, other: &Character) -> Character {
        let m = other.len();
        Character {
            turns: (0..self.len() * m).map(|x| self.turns[x / m].mul(other.turns[x % m])).collect(),
        }
    }
}

/// Index maps for the structured labels of `F4 ⋊ C_order`.
pub fn semidirect_index(j: F4, s: usize, order: usize) -> usize {
    4 * (s % order) + j.index()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semidirect_product_structure() {
        let g = FiniteGroup::f4_semidirect(6);
        assert_eq!(g.size(), 24);
        let t = semidirect_index(F4::ZERO, 1, 6);
        let one = semidirect_index(F4::ONE, 0, 6);
        // t (1,1) t^{-1} = (ω, 1)
        let conj = g.mul(g.mul(t, one), g.inv(t));
        assert_eq!(conj, semidirect_index(F4::OMEGA, 0, 6));
        assert_eq!(g.label(semidirect_index(F4::OMEGA2, 3, 6)), "(w^2,t^3)");
        assert_eq!(g.find("(ω²,t^3)").unwrap(), semidirect_index(F4::OMEGA2, 3, 6));
        assert_eq!(g.find("(0, t^1)").unwrap(), t);
        assert!(g.find("(0,t^7)").is_err());
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], None).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 2], vec![1, 0]], None).is_err());
        assert!(FiniteGroup::from_table(vec![], None).is_err());
    }

    #[test]
    fn direct_product_labels() {
        let g = FiniteGroup::f4_semidirect(6).direct_product(&FiniteGroup::cyclic(4));
        assert_eq!(g.size(), 96);
        let x = g.find("(0,t^3)*(g^1)").unwrap();
        assert_eq!(g.label(x), "(0,t^3)*(c^1)");
        let trivial = FiniteGroup::f4_semidirect(6).direct_product(&FiniteGroup::cyclic(1));
        assert_eq!(trivial.labels(), FiniteGroup::f4_semidirect(6).labels());
    }

    #[test]
    fn turns_and_characters() {
        assert_eq!(Turn::new(2, 4), Turn::new(1, 2));
        assert_eq!(Turn::new(1, 2).mul(Turn::new(1, 2)), Turn::one());
        let c4 = FiniteGroup::cyclic(4);
        let chi = Character::cyclic(4, 1);
        assert!(chi.multiplicativity_witness(&c4).is_none());
        assert_eq!(chi.order(), 4);
        assert_eq!(chi.value(2), Cyclotomic::from_int(-1));
        let bad = Character::new(vec![Turn::one(), Turn::new(1, 4), Turn::one(), Turn::one()]);
        assert!(bad.multiplicativity_witness(&c4).is_some());
    }

    #[test]
    fn subgroups() {
        let g = FiniteGroup::cyclic(12);
        let h = g.generated_subgroup(&[4]);
        assert_eq!(h, vec![0, 4, 8]);
        assert!(g.is_normal_subgroup(&h));
        assert!(!g.is_subgroup(&[0, 1]));
    }
}
