//! Rank-one local systems given by integer 1-cocycles, twisted intersection
//! homology over `Q[t, t^-1]`, the cover cross-check and the signed Euler
//! witness.

mod cocycle;
mod cover;
mod gauge;
mod twisted;
mod witness;

pub use cocycle::{
    emit_cocycle, parse_cocycle, subdivide_cocycle, validate_cocycle, Cocycle, CocycleReport,
    COCYCLE_HEADER,
};
pub use cover::{prop25_crosscheck, CoverPresentation, CrosscheckReport, Mismatch};
pub use gauge::{twisted_boundary, twisted_boundary_with, SpanningTree};
pub use twisted::{
    twisted_chain_system, twisted_ih, twisted_ih_with_tree, TwistedDegree, TwistedIHReport,
};
pub use witness::{euler_witness, Verdict, WitnessReport};
