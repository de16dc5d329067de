//! Exact computations for a family of Hopf algebras of dimension `72·|G|` lifting the
//! Nichols algebra of the tetrahedron rack with constant cocycle `-1`.

pub mod algebra;
pub mod error;
pub mod linalg;
pub mod rack;
pub mod realization;
pub mod rewrite;
pub mod report;
pub mod repr;
pub mod scalars;
