//! Smith normal form over a Euclidean domain.
//!
//! [`smith_normal_form`] accumulates the unimodular transforms and is meant
//! for small matrices and cross-checks. [`invariant_factors`] skips the
//! transforms: it first eliminates on unit pivots (boundary matrices are
//! mostly `±t^k` or `±1`), then finishes the leftover block densely.

use std::cmp::Ordering;

use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use super::matrix::Matrix;
use super::ring::EuclideanRing;

/// `u * m * v = d` with `u`, `v` invertible and `d` diagonal, its nonzero
/// entries normalized and forming a divisibility chain.
#[derive(Clone, Debug)]
pub struct Smith<R> {
    pub d: Matrix<R>,
    pub u: Matrix<R>,
    pub v: Matrix<R>,
}

impl<R: EuclideanRing> Smith<R> {
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Nonzero diagonal entries, in order.
    pub fn factors(&self) -> Vec<R> {
        self.d
            .diagonal()
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect()
    }
}

/// Smallest-size nonzero entry in the lower-right block starting at `t`,
/// ties broken by `(row, col)`.
fn pivot_in<R: EuclideanRing>(a: &Matrix<R>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if x.size_cmp(a.get(bi, bj)) == Ordering::Less {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

pub fn smith_normal_form<R: EuclideanRing>(m: &Matrix<R>) -> Smith<R> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = Matrix::<R>::identity(rows);
    let mut v = Matrix::<R>::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = pivot_in(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // Clear column t below the pivot.
            for i in t + 1..rows {
                while !a.get(i, t).is_zero() {
                    let (q, _) = a.get(i, t).div_rem(a.get(t, t));
                    let f = q.neg();
                    a.add_row_multiple(i, t, &f);
                    u.add_row_multiple(i, t, &f);
                    if !a.get(i, t).is_zero() {
                        a.swap_rows(i, t);
                        u.swap_rows(i, t);
                    }
                }
            }
            // Clear row t right of the pivot.
            for j in t + 1..cols {
                while !a.get(t, j).is_zero() {
                    let (q, _) = a.get(t, j).div_rem(a.get(t, t));
                    let f = q.neg();
                    a.add_col_multiple(j, t, &f);
                    v.add_col_multiple(j, t, &f);
                    if !a.get(t, j).is_zero() {
                        a.swap_cols(j, t);
                        v.swap_cols(j, t);
                    }
                }
            }
            if (t + 1..rows).any(|i| !a.get(i, t).is_zero()) {
                continue;
            }
            // Pivot must divide the rest of the block.
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(t, t).divides(a.get(i, j))));
            match offender {
                Some(i) => {
                    let one = R::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        let unit = a.get(t, t).normalizing_unit();
        a.scale_row(t, &unit);
        u.scale_row(t, &unit);
    }

    Smith { d: a, u, v }
}

/// Nonzero invariant factors (normalized, divisibility chain), without
/// transforms. The count equals the rank over the fraction field.
pub fn invariant_factors<R: EuclideanRing>(m: &Matrix<R>) -> Vec<R> {
    let mut rows: Vec<Vec<R>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let cols = m.cols();
    let mut live_rows: Vec<bool> = vec![true; rows.len()];
    let mut live_cols: Vec<bool> = vec![true; cols];
    let mut unit_count = 0usize;

    // Unit-pivot elimination with a Markowitz-style fill heuristic.
    loop {
        let mut row_nnz = vec![0usize; rows.len()];
        let mut col_nnz = vec![0usize; cols];
        for (i, row) in rows.iter().enumerate() {
            if !live_rows[i] {
                continue;
            }
            for (j, x) in row.iter().enumerate() {
                if live_cols[j] && !x.is_zero() {
                    row_nnz[i] += 1;
                    col_nnz[j] += 1;
                }
            }
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in rows.iter().enumerate() {
            if !live_rows[i] {
                continue;
            }
            for (j, x) in row.iter().enumerate() {
                if !live_cols[j] || x.is_zero() || !x.is_unit() {
                    continue;
                }
                let cost = (row_nnz[i] - 1) * (col_nnz[j] - 1);
                if best.is_none_or(|(c, _, _)| cost < c) {
                    best = Some((cost, i, j));
                }
            }
        }
        let Some((_, pi, pj)) = best else {
            break;
        };
        let inv = rows[pi][pj].unit_inverse();
        let pivot_row: Vec<(usize, R)> = rows[pi]
            .iter()
            .enumerate()
            .filter(|(j, x)| live_cols[*j] && *j != pj && !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect();
        for i in 0..rows.len() {
            if i == pi || !live_rows[i] || rows[i][pj].is_zero() {
                continue;
            }
            let f = rows[i][pj].mul(&inv);
            for (j, x) in &pivot_row {
                rows[i][*j] = rows[i][*j].sub(&f.mul(x));
            }
            rows[i][pj] = R::zero();
        }
        live_rows[pi] = false;
        live_cols[pj] = false;
        unit_count += 1;
    }

    let keep_rows: Vec<usize> = (0..rows.len())
        .filter(|&i| {
            live_rows[i]
                && rows[i]
                    .iter()
                    .enumerate()
                    .any(|(j, x)| live_cols[j] && !x.is_zero())
        })
        .collect();
    let keep_cols: Vec<usize> = (0..cols)
        .filter(|&j| live_cols[j] && keep_rows.iter().any(|&i| !rows[i][j].is_zero()))
        .collect();
    let rest = Matrix::from_rows(
        keep_rows
            .iter()
            .map(|&i| keep_cols.iter().map(|&j| rows[i][j].clone()).collect())
            .collect(),
    );
    let mut factors = vec![R::one(); unit_count];
    if rest.rows() > 0 && rest.cols() > 0 {
        factors.extend(smith_diagonal(rest));
    }
    factors
}

/// Diagonal-only Smith reduction of a dense block.
fn smith_diagonal<R: EuclideanRing>(mut a: Matrix<R>) -> Vec<R> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = pivot_in(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            for i in t + 1..rows {
                while !a.get(i, t).is_zero() {
                    let (q, _) = a.get(i, t).div_rem(a.get(t, t));
                    a.add_row_multiple(i, t, &q.neg());
                    if !a.get(i, t).is_zero() {
                        a.swap_rows(i, t);
                    }
                }
            }
            for j in t + 1..cols {
                while !a.get(t, j).is_zero() {
                    let (q, _) = a.get(t, j).div_rem(a.get(t, t));
                    a.add_col_multiple(j, t, &q.neg());
                    if !a.get(t, j).is_zero() {
                        a.swap_cols(j, t);
                    }
                }
            }
            if (t + 1..rows).any(|i| !a.get(i, t).is_zero()) {
                continue;
            }
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(t, t).divides(a.get(i, j))));
            match offender {
                Some(i) => a.add_row_multiple(t, i, &R::one()),
                None => break,
            }
        }
        out.push(a.get(t, t).normalized());
    }
    out
}

/// Integer Smith normal form with transforms.
pub fn snf_int(m: &Matrix<BigInt>) -> Smith<BigInt> {
    smith_normal_form(m)
}

/// Smith normal form over `Q[t, t^-1]` with transforms; diagonal entries are
/// monic with lowest exponent zero.
pub fn snf_laurent(m: &Matrix<LaurentPoly>) -> Smith<LaurentPoly> {
    smith_normal_form(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntMatrix;

    fn check<R: EuclideanRing>(m: &Matrix<R>) -> Smith<R> {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.determinant().is_unit());
        assert!(s.v.determinant().is_unit());
        let f = s.factors();
        for w in f.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
        assert_eq!(invariant_factors(m), f);
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntMatrix::zeros(2, 3));
        assert!(s.d.is_zero());
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn two_by_two_example() {
        let s = check(&IntMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.factors(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) has invariant factors 1, 6.
        let s = check(&IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.factors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn laurent_examples() {
        let tm1 = LaurentPoly::from_int_terms(&[(1, 1), (0, -1)]);
        let t2m1 = LaurentPoly::from_int_terms(&[(2, 1), (0, -1)]);
        let s = check(&Matrix::from_rows(vec![vec![tm1.clone()]]));
        assert_eq!(s.factors(), vec![tm1.clone()]);

        let diag = Matrix::from_rows(vec![
            vec![tm1.clone(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), tm1.clone()],
        ]);
        let s = check(&diag);
        assert_eq!(s.d, diag);

        let s = check(&Matrix::from_rows(vec![vec![tm1.clone(), t2m1]]));
        assert_eq!(s.d, Matrix::from_rows(vec![vec![tm1, LaurentPoly::zero()]]));
    }

    #[test]
    fn laurent_units_normalize_away() {
        let m = Matrix::from_rows(vec![vec![LaurentPoly::signed_power(-3, 4)]]);
        let s = check(&m);
        assert_eq!(s.factors(), vec![LaurentPoly::from_i64(1)]);
    }
}
