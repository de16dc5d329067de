//! Modules over `A`: Vermas, idempotents, simples, decompositions, radicals,
//! extensions between one-dimensional modules and the spherical criterion.

mod ext;
mod idempotents;
pub(crate) mod module;
mod simple;
mod spherical;
mod structure;
mod tables;

pub use ext::{connecting_letter, ext1_dim, ext_module};
pub use idempotents::{
    idempotent_formulas, idempotent_set, orthogonalize, scaled_b_idempotents, verify_idempotents, IdempotentSet,
};
pub use module::{letter_name, one_dim, sparse_vec, verma, ActionJson, Module, ModuleJson};
pub use simple::{
    certify_simple, classify_simples, elem_vector, hom_dim, isomorphism_batch, simple_module, SimpleCatalog,
    SimpleClass, SimpleModule, TwelveClass, ISOMORPHISM_BATCH,
};
pub use spherical::{check_spherical, pivot_traces, SphericalReport};
pub use structure::{decompose, is_multiple_of, linkage_blocks, radical_top_socle, Decomposition, RadTopSocle, Radical};
pub use tables::{
    diagnose_table, render_combination, table_specs, verify_table, Scaled, TableCell, TableDiagnostics, TableReport,
    TableRowSpec, TableSpec,
};
