//! Exact arithmetic over `Z`, `Q` and `Q[t, t^-1]`, and the matrix normal
//! forms every homology computation reduces to.

mod lattice;
mod laurent;
mod matrix;
mod ring;
mod smith;

pub use lattice::{
    column_echelon, integer_kernel, kernel_basis, preimage_basis, rank, rank_over_fractions,
    span_basis, ColumnEchelon, SplitBasis,
};
pub use laurent::LaurentPoly;
pub use matrix::{ExactMatrix, IntMatrix, LaurentMatrix, Matrix, RatMatrix, Ring};
pub use ring::{gcd, EuclideanRing};
pub use smith::{invariant_factors, smith_normal_form, snf_int, snf_laurent, Smith};
