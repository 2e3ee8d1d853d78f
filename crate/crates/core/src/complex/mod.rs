//! Stratified simplicial complexes: construction, validation, subdivision
//! and the `strathom-complex v1` text format.

mod format;
mod simplex;
mod stratified;
mod subdivide;
mod validate;

pub use format::{emit_complex, parse_complex, COMPLEX_HEADER};
pub use simplex::Simplex;
pub use stratified::{star_neighborhood, SimplexSet, StratifiedComplex, Stratum, Subcomplex};
pub use subdivide::{barycenter_id, barycentric_subdivide, subdivision_chain_map};
pub use validate::{is_full, validate, Flag, FlagResult, ValidationReport};
