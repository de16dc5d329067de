//! Exact dense linear algebra over [`Cyclotomic`].

use crate::scalars::Cyclotomic;

pub type Vector = Vec<Cyclotomic>;
pub type Matrix = Vec<Vec<Cyclotomic>>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Cyclotomic::zero(); n]
}

pub fn zero_matrix(rows: usize, cols: usize) -> Matrix {
    vec![zero_vec(cols); rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zero_matrix(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Cyclotomic::one();
    }
    m
}

pub fn is_zero_vec(v: &[Cyclotomic]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn mat_vec(m: &Matrix, v: &[Cyclotomic]) -> Vector {
    m.iter()
        .map(|row| {
            let mut acc = Cyclotomic::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = zero_vec(n);
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    if !y.is_zero() {
                        out[j] += &(x * y);
                    }
                }
            }
            out
        })
        .collect()
}

pub fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn mat_scale(a: &Matrix, c: &Cyclotomic) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

pub fn is_zero_matrix(a: &Matrix) -> bool {
    a.iter().all(|r| is_zero_vec(r))
}

pub fn vec_add_scaled(acc: &mut [Cyclotomic], v: &[Cyclotomic], c: &Cyclotomic) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += &(b * c);
        }
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let prow = m[r].clone();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = -&m[i][c];
                vec_add_scaled(&mut m[i], &prow, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// A basis of `{v : m v = 0}`, one vector per free column.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vector> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = zero_vec(cols);
            v[fc] = Cyclotomic::one();
            for (row, &pc) in pivots.iter().enumerate() {
                if !a[row][fc].is_zero() {
                    v[pc] = -&a[row][fc];
                }
            }
            v
        })
        .collect()
}

/// An incrementally built subspace that can express members in terms of the
/// vectors that were inserted.
#[derive(Clone, Debug, Default)]
pub struct Span {
    dim: usize,
    basis: Vec<Vector>,
    /// Echelon rows: (pivot column, reduced row, combination of `basis` giving it).
    rows: Vec<(usize, Vector, Vector)>,
}

impl Span {
    pub fn new(ambient: usize) -> Self {
        Span { dim: ambient, basis: Vec::new(), rows: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Reduces `v` against the echelon rows; returns the remainder and the
    /// combination (over inserted vectors) that was subtracted.
    fn reduce(&self, v: &[Cyclotomic]) -> (Vector, Vector) {
        let mut r = v.to_vec();
        let mut combo = zero_vec(self.basis.len());
        for (p, row, c) in &self.rows {
            if r[*p].is_zero() {
                continue;
            }
            let f = r[*p].clone();
            vec_add_scaled(&mut r, row, &-&f);
            vec_add_scaled(&mut combo, c, &f);
        }
        (r, combo)
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        is_zero_vec(&self.reduce(v).0)
    }

    /// Adds `v` if independent; returns whether it was added.
    pub fn insert(&mut self, v: Vector) -> bool {
        let (mut r, combo) = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else { return false };
        let k = self.basis.len();
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // r_reduced = v - Σ combo_j b_j, scaled by inv.
        let mut c: Vector = combo.iter().map(|x| -&(x * &inv)).collect();
        c.push(inv);
        for (_, _, old) in self.rows.iter_mut() {
            old.push(Cyclotomic::zero());
        }
        // Keep earlier rows reduced at the new pivot.
        for (_, row, oc) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = -&row[p];
                vec_add_scaled(row, &r, &f);
                vec_add_scaled(oc, &c, &f);
            }
        }
        self.rows.push((p, r, c));
        self.basis.push(v);
        debug_assert_eq!(self.basis.len(), k + 1);
        true
    }

    /// Coefficients `a` with `v = Σ a_k basis_k`, if `v` lies in the span.
    pub fn express(&self, v: &[Cyclotomic]) -> Option<Vector> {
        let (r, combo) = self.reduce(v);
        is_zero_vec(&r).then_some(combo)
    }
}

/// A sparse row, column → nonzero entry.
pub type SparseRow = std::collections::BTreeMap<usize, Cyclotomic>;

/// Rank of a set of sparse rows by echelon reduction on leading columns.
pub fn sparse_rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut pivots: std::collections::BTreeMap<usize, SparseRow> = std::collections::BTreeMap::new();
    for mut row in rows {
        row.retain(|_, x| !x.is_zero());
        while let Some((&lead, c)) = row.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                let inv = c.inv().expect("nonzero");
                let row = row.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
                pivots.insert(lead, row);
                break;
            };
            let c = c.clone();
            for (k, x) in p {
                let e = row.entry(*k).or_insert_with(Cyclotomic::zero);
                *e += &-&(&c * x);
                if e.is_zero() {
                    row.remove(k);
                }
            }
        }
    }
    pivots.len()
}
