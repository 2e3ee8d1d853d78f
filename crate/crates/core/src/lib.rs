//! Exact intersection homology of stratified simplicial pseudomanifolds.
//!
//! The crate computes middle-perversity intersection homology of a
//! stratified complex, both with integer coefficients and twisted by a
//! rank-one local system over `Q[t, t^-1]` given by an integer 1-cocycle,
//! and evaluates the signed Euler characteristic criteria on a catalog of
//! model spaces.
//!
//! Modules, bottom up:
//! - [`algebra`]: exact rings, matrices, Smith normal form, kernels.
//! - [`complex`]: stratified simplicial complexes, validation, subdivision,
//!   the `strathom-complex v1` text format.
//! - [`ih`]: allowable chains, intersection and ordinary homology, relative
//!   groups and Euler characteristics.
//! - [`local`]: cocycles, twisted boundaries, the cover cross-check and the
//!   signed Euler witness.
//! - [`catalog`]: deterministic model spaces with expected reports.

pub mod algebra;
pub mod catalog;
pub mod complex;
pub mod error;
pub mod ih;
pub mod local;

pub use error::{AlgebraError, CatalogError, CocycleError, ComplexError, ParseError};
