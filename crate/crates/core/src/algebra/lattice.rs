//! Kernels, preimages and coordinates over a Euclidean domain.
//!
//! Everything here reduces to column echelon form `m * v = h` with `v`
//! invertible over the ring. The trailing columns of `v` span the kernel and
//! form a basis of it; since `v` is invertible that basis is saturated.

use num_bigint::BigInt;

use super::matrix::{ExactMatrix, Matrix};
use super::ring::EuclideanRing;
use crate::error::AlgebraError;

/// Column echelon form `m * v = h`, with `v_inv * v = 1`.
///
/// The first `rank` columns of `h` are nonzero with strictly increasing
/// pivot rows; the remaining columns are zero.
#[derive(Clone, Debug)]
pub struct ColumnEchelon<R> {
    pub h: Matrix<R>,
    pub v: Matrix<R>,
    pub v_inv: Matrix<R>,
    pub rank: usize,
    pub pivot_rows: Vec<usize>,
}

pub fn column_echelon<R: EuclideanRing>(m: &Matrix<R>) -> ColumnEchelon<R> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut v = Matrix::<R>::identity(cols);
    let mut v_inv = Matrix::<R>::identity(cols);
    let mut rank = 0;
    let mut pivot_rows = Vec::new();

    // col[target] += f * col[source] on h and v is undone on v_inv by
    // row[source] -= f * row[target].
    let add_col =
        |h: &mut Matrix<R>, v: &mut Matrix<R>, vi: &mut Matrix<R>, target, source, f: &R| {
            h.add_col_multiple(target, source, f);
            v.add_col_multiple(target, source, f);
            vi.add_row_multiple(source, target, &f.neg());
        };
    let swap = |h: &mut Matrix<R>, v: &mut Matrix<R>, vi: &mut Matrix<R>, a, b| {
        h.swap_cols(a, b);
        v.swap_cols(a, b);
        vi.swap_rows(a, b);
    };

    for i in 0..rows {
        if rank == cols {
            break;
        }
        loop {
            // Smallest nonzero entry in row i among the unreduced columns.
            let mut best: Option<usize> = None;
            for j in rank..cols {
                let x = h.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|b| x.size_cmp(h.get(i, b)).is_lt()) {
                    best = Some(j);
                }
            }
            let Some(p) = best else {
                break;
            };
            swap(&mut h, &mut v, &mut v_inv, rank, p);
            let mut done = true;
            for j in rank + 1..cols {
                if h.get(i, j).is_zero() {
                    continue;
                }
                let (q, r) = h.get(i, j).div_rem(h.get(i, rank));
                add_col(&mut h, &mut v, &mut v_inv, j, rank, &q.neg());
                if !r.is_zero() {
                    done = false;
                }
            }
            if done {
                let unit = h.get(i, rank).normalizing_unit();
                h.scale_col(rank, &unit);
                v.scale_col(rank, &unit);
                v_inv.scale_row(rank, &unit.unit_inverse());
                pivot_rows.push(i);
                rank += 1;
                break;
            }
        }
    }

    ColumnEchelon {
        h,
        v,
        v_inv,
        rank,
        pivot_rows,
    }
}

/// Basis of the kernel of `m` as columns of a `cols x k` matrix.
pub fn kernel_basis<R: EuclideanRing>(m: &Matrix<R>) -> Matrix<R> {
    let ce = column_echelon(m);
    let keep: Vec<usize> = (ce.rank..m.cols()).collect();
    let all_rows: Vec<usize> = (0..m.cols()).collect();
    ce.v.select(&all_rows, &keep)
}

/// Saturated basis of the integer kernel of `m`, one vector per element.
pub fn integer_kernel(m: &Matrix<BigInt>) -> Vec<Vec<BigInt>> {
    kernel_basis(m).columns()
}

/// Rank over the fraction field.
pub fn rank<R: EuclideanRing>(m: &Matrix<R>) -> usize {
    super::smith::invariant_factors(m).len()
}

pub fn rank_over_fractions(m: &ExactMatrix) -> usize {
    match m {
        ExactMatrix::Integer(m) => rank(m),
        ExactMatrix::Rational(m) => rank(m),
        ExactMatrix::Laurent(m) => rank(m),
    }
}

/// Basis of the submodule spanned by the given columns.
pub fn span_basis<R: EuclideanRing>(generators: &Matrix<R>) -> Matrix<R> {
    let ce = column_echelon(generators);
    let rows: Vec<usize> = (0..generators.rows()).collect();
    let keep: Vec<usize> = (0..ce.rank).collect();
    ce.h.select(&rows, &keep)
}

/// Basis of `{x : m x ∈ span(target)}`.
///
/// When every target vector is a standard basis vector the preimage is the
/// kernel of `m` followed by projection onto the remaining coordinates;
/// otherwise it is read off from the kernel of `[m | -target]`.
pub fn preimage_basis<R: EuclideanRing>(
    m: &Matrix<R>,
    target: &[Vec<R>],
) -> Result<Matrix<R>, AlgebraError> {
    for v in target {
        if v.len() != m.rows() {
            return Err(AlgebraError::DimensionMismatch {
                expected: m.rows(),
                found: v.len(),
            });
        }
    }
    if let Some(coords) = standard_coordinates(target) {
        let rows: Vec<usize> = (0..m.rows()).filter(|i| !coords.contains(i)).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        return Ok(kernel_basis(&m.select(&rows, &cols)));
    }
    let n = m.cols();
    let mut joined = Matrix::<R>::zeros(m.rows(), n + target.len());
    for i in 0..m.rows() {
        for j in 0..n {
            joined.set(i, j, m.get(i, j).clone());
        }
        for (k, v) in target.iter().enumerate() {
            joined.set(i, n + k, v[i].neg());
        }
    }
    let kernel = kernel_basis(&joined);
    let x_rows: Vec<usize> = (0..n).collect();
    let all_cols: Vec<usize> = (0..kernel.cols()).collect();
    Ok(span_basis(&kernel.select(&x_rows, &all_cols)))
}

/// Coordinates touched by target vectors when each is `unit * e_i`.
fn standard_coordinates<R: EuclideanRing>(target: &[Vec<R>]) -> Option<Vec<usize>> {
    let mut coords = Vec::with_capacity(target.len());
    for v in target {
        let mut nz = v.iter().enumerate().filter(|(_, x)| !x.is_zero());
        let (i, x) = nz.next()?;
        if nz.next().is_some() || !x.is_unit() {
            return None;
        }
        coords.push(i);
    }
    coords.sort_unstable();
    Some(coords)
}

/// A basis of a submodule cut out as `ker(constraint)`, together with a
/// complement, so that coordinates and quotients are exact.
///
/// Columns of `v` split into `complement` (the first `rank`) and `kernel`
/// (the rest); `v_inv` gives coordinates in that split basis.
#[derive(Clone, Debug)]
pub struct SplitBasis<R> {
    pub ambient: usize,
    pub rank: usize,
    pub v: Matrix<R>,
    pub v_inv: Matrix<R>,
    constraint: Matrix<R>,
}

impl<R: EuclideanRing> SplitBasis<R> {
    pub fn new(constraint: &Matrix<R>) -> Self {
        let ce = column_echelon(constraint);
        Self {
            ambient: constraint.cols(),
            rank: ce.rank,
            v: ce.v,
            v_inv: ce.v_inv,
            constraint: constraint.clone(),
        }
    }

    /// The whole ambient module (empty constraint).
    pub fn full(ambient: usize) -> Self {
        Self::new(&Matrix::zeros(0, ambient))
    }

    pub fn kernel_dim(&self) -> usize {
        self.ambient - self.rank
    }

    pub fn kernel(&self) -> Matrix<R> {
        let rows: Vec<usize> = (0..self.ambient).collect();
        let cols: Vec<usize> = (self.rank..self.ambient).collect();
        self.v.select(&rows, &cols)
    }

    pub fn complement(&self) -> Matrix<R> {
        let rows: Vec<usize> = (0..self.ambient).collect();
        let cols: Vec<usize> = (0..self.rank).collect();
        self.v.select(&rows, &cols)
    }

    /// Coordinates of `y` in the kernel basis, `None` if `y` is not in it.
    pub fn kernel_coords(&self, y: &[R]) -> Option<Vec<R>> {
        if self.constraint.mul_vec(y).iter().any(|x| !x.is_zero()) {
            return None;
        }
        let full = self.v_inv.mul_vec(y);
        Some(full[self.rank..].to_vec())
    }

    /// Projection `ambient -> ambient / kernel`, in complement coordinates.
    pub fn quotient_projection(&self) -> Matrix<R> {
        let rows: Vec<usize> = (0..self.rank).collect();
        let cols: Vec<usize> = (0..self.ambient).collect();
        self.v_inv.select(&rows, &cols)
    }

    /// Rows of `v_inv` giving kernel coordinates (valid on the kernel).
    pub fn kernel_projection(&self) -> Matrix<R> {
        let rows: Vec<usize> = (self.rank..self.ambient).collect();
        let cols: Vec<usize> = (0..self.ambient).collect();
        self.v_inv.select(&rows, &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{IntMatrix, LaurentPoly};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn echelon_transforms_are_inverse() {
        let m = IntMatrix::from_i64_rows(&[&[3, 5, 7], &[2, 4, 6]]);
        let ce = column_echelon(&m);
        assert_eq!(m.mul(&ce.v), ce.h);
        assert_eq!(ce.v.mul(&ce.v_inv), IntMatrix::identity(3));
        assert_eq!(ce.rank, 2);
    }

    #[test]
    fn kernel_of_row_of_ones() {
        let m = IntMatrix::from_i64_rows(&[&[1, 1, 1]]);
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x == &BigInt::from(0)));
        }
        // Both k and {(1,-1,0), (0,1,-1)} are saturated bases of the same
        // rank-2 kernel, so they differ by a unimodular change of basis.
        let one = BigInt::from(1);
        let basis = Matrix::from_columns(3, &k);
        assert_eq!(
            crate::algebra::invariant_factors(&basis),
            vec![one.clone(), one.clone()]
        );
        let expected = Matrix::from_columns(3, &[ints(&[1, -1, 0]), ints(&[0, 1, -1])]);
        assert_eq!(
            crate::algebra::invariant_factors(&expected),
            vec![one.clone(), one]
        );
    }

    #[test]
    fn kernel_of_invertible_is_empty() {
        assert!(integer_kernel(&IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]])).is_empty());
    }

    #[test]
    fn kernel_is_primitive() {
        let k = integer_kernel(&IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]));
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(v == &ints(&[2, -1]) || v == &ints(&[-2, 1]));
    }

    #[test]
    fn preimage_of_everything_is_everything() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2, 3], &[0, 5, 7]]);
        let target = vec![ints(&[1, 0]), ints(&[0, 1])];
        let b = preimage_basis(&m, &target).unwrap();
        assert_eq!(b.cols(), 3);
        assert!(b.determinant().is_unit());
    }

    #[test]
    fn preimage_of_zero_under_identity() {
        let b = preimage_basis(&IntMatrix::identity(3), &[]).unwrap();
        assert_eq!(b.cols(), 0);
    }

    #[test]
    fn preimage_of_non_coordinate_target() {
        // m = identity, target spans (1, 1): preimage is that line.
        let b = preimage_basis(&IntMatrix::identity(2), &[ints(&[2, 2])]).unwrap();
        assert_eq!(b.cols(), 1);
        let c = b.column(0);
        assert_eq!(c[0], c[1]);
        assert_eq!(c[0].magnitude(), &num_bigint::BigUint::from(2u32));
    }

    #[test]
    fn preimage_dimension_mismatch() {
        let err = preimage_basis(&IntMatrix::identity(2), &[ints(&[1, 0, 0])]);
        assert!(err.is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&IntMatrix::identity(4)), 4);
        assert_eq!(rank(&IntMatrix::zeros(3, 2)), 0);
        let tm1 = LaurentPoly::from_int_terms(&[(1, 1), (0, -1)]);
        let t2m1 = LaurentPoly::from_int_terms(&[(2, 1), (0, -1)]);
        let m = Matrix::from_rows(vec![vec![tm1, t2m1]]);
        assert_eq!(rank_over_fractions(&ExactMatrix::Laurent(m)), 1);
    }

    #[test]
    fn split_basis_coordinates() {
        let constraint = IntMatrix::from_i64_rows(&[&[1, 1, 0, 2]]);
        let s = SplitBasis::new(&constraint);
        assert_eq!(s.kernel_dim(), 3);
        let k = s.kernel();
        for j in 0..k.cols() {
            let col = k.column(j);
            let coords = s.kernel_coords(&col).unwrap();
            let mut e = vec![BigInt::from(0); 3];
            e[j] = BigInt::from(1);
            assert_eq!(coords, e);
        }
        assert!(s.kernel_coords(&ints(&[1, 0, 0, 0])).is_none());
        assert_eq!(s.quotient_projection().mul(&k), IntMatrix::zeros(1, 3));
    }
}
