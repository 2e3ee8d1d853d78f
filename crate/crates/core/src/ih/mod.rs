//! Allowable chains, intersection homology and ordinary homology.

mod allowable;
mod chain;
mod euler;
mod relative;
mod report;

pub use allowable::{allowable_mask, allowable_simplices, build_ic, AllowableChainSystem};
pub use chain::ChainComplex;
pub use euler::{euler, euler_from_reports, EulerReport};
pub use relative::{long_exact_sequence, relative_ih, LesNode, LesReport};
pub use report::{DegreeHomology, HomologyReport};

use crate::complex::StratifiedComplex;
use crate::error::ComplexError;

/// Integral intersection homology of a valid, full complex.
pub fn intersection_homology(x: &StratifiedComplex) -> Result<HomologyReport, ComplexError> {
    Ok(HomologyReport::from_degrees(
        build_ic(x)?.complex().homology(),
    ))
}

/// Integral simplicial homology.
pub fn ordinary_homology(x: &StratifiedComplex) -> HomologyReport {
    HomologyReport::from_degrees(ChainComplex::simplicial(x).homology())
}

pub(crate) fn require_valid(x: &StratifiedComplex) -> Result<(), ComplexError> {
    let report = crate::complex::validate(x);
    match report.first_failure() {
        None => Ok(()),
        Some(f) => Err(ComplexError::Invalid(match &f.witness {
            Some(s) => format!("{} fails at {s}", f.flag.name()),
            None => format!(
                "{} fails: {}",
                f.flag.name(),
                f.detail.as_deref().unwrap_or("")
            ),
        })),
    }
}
