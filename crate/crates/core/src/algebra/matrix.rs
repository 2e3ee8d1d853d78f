use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::laurent::LaurentPoly;
use super::ring::EuclideanRing;

/// Dense row-major matrix over an exact ring.
#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;
pub type LaurentMatrix = Matrix<LaurentPoly>;

impl<R: EuclideanRing> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<R>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| R::from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<R>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.add(&a.mul(x));
                    }
                }
                acc
            })
            .collect()
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map<S: EuclideanRing>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor * row[source]`
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &R) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let v = s.mul(factor);
            let t = &mut self.data[target * self.cols + j];
            *t = t.add(&v);
        }
    }

    /// `col[target] += factor * col[source]`
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &R) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + source];
            if s.is_zero() {
                continue;
            }
            let v = s.mul(factor);
            let t = &mut self.data[i * self.cols + target];
            *t = t.add(&v);
        }
    }

    pub fn scale_row(&mut self, i: usize, factor: &R) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = self.data[idx].mul(factor);
        }
    }

    pub fn scale_col(&mut self, j: usize, factor: &R) {
        for i in 0..self.rows {
            let idx = i * self.cols + j;
            self.data[idx] = self.data[idx].mul(factor);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> R {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return R::one();
        }
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = R::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return R::zero();
                };
                a.swap_rows(k, p);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a
                        .get(i, j)
                        .mul(a.get(k, k))
                        .sub(&a.get(i, k).mul(a.get(k, j)));
                    let v = num.exact_div(&prev).expect("Bareiss division is exact");
                    a.set(i, j, v);
                }
                a.set(i, k, R::zero());
            }
            prev = a.get(k, k).clone();
        }
        let d = a.get(n - 1, n - 1).clone();
        if sign_flip {
            d.neg()
        } else {
            d
        }
    }

    /// Inverse over the ring, `None` unless the matrix is square with unit
    /// determinant.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            // Euclid down column k until a single nonzero entry remains.
            loop {
                let mut best: Option<usize> = None;
                for i in k..n {
                    let x = a.get(i, k);
                    if !x.is_zero() && best.is_none_or(|b| x.size_cmp(a.get(b, k)).is_lt()) {
                        best = Some(i);
                    }
                }
                let p = best?;
                a.swap_rows(k, p);
                inv.swap_rows(k, p);
                let mut clean = true;
                for i in k + 1..n {
                    if a.get(i, k).is_zero() {
                        continue;
                    }
                    let (q, r) = a.get(i, k).div_rem(a.get(k, k));
                    let f = q.neg();
                    a.add_row_multiple(i, k, &f);
                    inv.add_row_multiple(i, k, &f);
                    clean &= r.is_zero();
                }
                if clean {
                    break;
                }
            }
            if !a.get(k, k).is_unit() {
                return None;
            }
            let u = a.get(k, k).unit_inverse();
            a.scale_row(k, &u);
            inv.scale_row(k, &u);
        }
        for k in (0..n).rev() {
            for i in 0..k {
                let f = a.get(i, k).neg();
                a.add_row_multiple(i, k, &f);
                inv.add_row_multiple(i, k, &f);
            }
        }
        Some(inv)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<R> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|x| format!("{x:?}"))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    pub fn to_laurent(&self) -> LaurentMatrix {
        self.map(|x| LaurentPoly::constant(BigRational::from_integer(x.clone())))
    }
}

impl LaurentMatrix {
    /// Entry-wise evaluation at a rational value of `t`.
    pub fn specialize(&self, t: &BigRational) -> RatMatrix {
        self.map(|x| x.eval(t))
    }
}

/// Which coefficient ring a matrix lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    Integers,
    Rationals,
    Laurent,
}

/// A matrix tagged with its coefficient ring.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactMatrix {
    Integer(IntMatrix),
    Rational(RatMatrix),
    Laurent(LaurentMatrix),
}

impl ExactMatrix {
    pub fn ring(&self) -> Ring {
        match self {
            ExactMatrix::Integer(_) => Ring::Integers,
            ExactMatrix::Rational(_) => Ring::Rationals,
            ExactMatrix::Laurent(_) => Ring::Laurent,
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        match self {
            ExactMatrix::Integer(m) => (m.rows(), m.cols()),
            ExactMatrix::Rational(m) => (m.rows(), m.cols()),
            ExactMatrix::Laurent(m) => (m.rows(), m.cols()),
        }
    }
}

impl From<IntMatrix> for ExactMatrix {
    fn from(m: IntMatrix) -> Self {
        ExactMatrix::Integer(m)
    }
}

impl From<RatMatrix> for ExactMatrix {
    fn from(m: RatMatrix) -> Self {
        ExactMatrix::Rational(m)
    }
}

impl From<LaurentMatrix> for ExactMatrix {
    fn from(m: LaurentMatrix) -> Self {
        ExactMatrix::Laurent(m)
    }
}
