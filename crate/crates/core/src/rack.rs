//! The tetrahedron rack: `F4` with `a ▷ b = ωb + ω²a`.

use std::fmt;

use serde::Serialize;

/// An element of the field with four elements, encoded `0, 1, ω, ω²` as `0..4`.
///
/// In this encoding addition is bitwise xor (the code is the coefficient
/// vector of `a + bω` read as the bits `ba`, with `ω² = 1 + ω`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct F4(u8);

const MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const OMEGA: F4 = F4(2);
    pub const OMEGA2: F4 = F4(3);

    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::OMEGA, F4::OMEGA2];

    pub fn new(code: u8) -> F4 {
        assert!(code < 4, "F4 code out of range");
        F4(code)
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn add(self, other: F4) -> F4 {
        F4(self.0 ^ other.0)
    }

    pub fn mul(self, other: F4) -> F4 {
        F4(MUL[self.index()][other.index()])
    }

    /// `ω^k`.
    pub fn omega_pow(k: i64) -> F4 {
        [F4::ONE, F4::OMEGA, F4::OMEGA2][k.rem_euclid(3) as usize]
    }

    pub fn symbol(self) -> &'static str {
        ["0", "1", "w", "w^2"][self.index()]
    }

    pub fn parse(text: &str) -> Option<F4> {
        match text.trim() {
            "0" => Some(F4::ZERO),
            "1" => Some(F4::ONE),
            "w" | "ω" => Some(F4::OMEGA),
            "w^2" | "w2" | "ω^2" | "ω²" => Some(F4::OMEGA2),
            _ => None,
        }
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// The rack operation `a ▷ b = ωb + ω²a`.
pub fn triangle(a: F4, b: F4) -> F4 {
    F4::OMEGA.mul(b).add(F4::OMEGA2.mul(a))
}

/// Outcome of [`check_rack_axioms`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RackReport {
    pub triples_checked: usize,
    pub passed: bool,
    /// `(a, b, c)` violating self-distributivity, or `(a, b, b')` with
    /// `a ▷ b = a ▷ b'` for a non-injective translation.
    pub witness: Option<(F4, F4, F4)>,
}

/// Checks self-distributivity and bijectivity of translations for the
/// operation given by `op`.
pub fn check_rack_axioms_with(op: impl Fn(F4, F4) -> F4) -> RackReport {
    let mut triples = 0;
    for a in F4::ALL {
        for b in F4::ALL {
            for c in F4::ALL {
                triples += 1;
                if op(a, op(b, c)) != op(op(a, b), op(a, c)) {
                    return RackReport { triples_checked: triples, passed: false, witness: Some((a, b, c)) };
                }
            }
        }
    }
    for a in F4::ALL {
        for b in F4::ALL {
            for b2 in F4::ALL {
                if b < b2 && op(a, b) == op(a, b2) {
                    return RackReport { triples_checked: triples, passed: false, witness: Some((a, b, b2)) };
                }
            }
        }
    }
    RackReport { triples_checked: triples, passed: true, witness: None }
}

pub fn check_rack_axioms() -> RackReport {
    check_rack_axioms_with(triangle)
}

/// The permutation `b ↦ a ▷ b` as an array indexed by codes.
pub fn translation(a: F4) -> [F4; 4] {
    F4::ALL.map(|b| triangle(a, b))
}

/// One relation `g_i g_j = g_{i▷j} g_i` of the enveloping group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnvelopingRelation {
    pub lhs: (F4, F4),
    pub rhs: (F4, F4),
}

/// All 16 relations `g_i g_j = g_{i▷j} g_i`, `i, j ∈ F4`.
pub fn enveloping_relations() -> Vec<EnvelopingRelation> {
    let mut out = Vec::with_capacity(16);
    for i in F4::ALL {
        for j in F4::ALL {
            out.push(EnvelopingRelation { lhs: (i, j), rhs: (triangle(i, j), i) });
        }
    }
    out
}
