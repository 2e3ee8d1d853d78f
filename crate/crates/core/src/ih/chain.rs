use rayon::prelude::*;

use crate::algebra::{invariant_factors, EuclideanRing, Matrix};
use crate::complex::StratifiedComplex;

/// A finite free chain complex `C_dim -> ... -> C_0`.
///
/// `boundaries[i]` is the matrix of `C_i -> C_{i-1}`; `boundaries[0]` has
/// no rows.
#[derive(Clone, Debug)]
pub struct ChainComplex<R> {
    ranks: Vec<usize>,
    boundaries: Vec<Matrix<R>>,
}

impl<R: EuclideanRing> ChainComplex<R> {
    pub fn new(boundaries: Vec<Matrix<R>>) -> Self {
        let ranks: Vec<usize> = boundaries.iter().map(Matrix::cols).collect();
        for i in 1..boundaries.len() {
            assert_eq!(
                boundaries[i].rows(),
                ranks[i - 1],
                "boundary {i} has the wrong codomain"
            );
        }
        Self { ranks, boundaries }
    }

    /// Top degree plus one.
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks.get(i).copied().unwrap_or(0)
    }

    pub fn boundary(&self, i: usize) -> &Matrix<R> {
        &self.boundaries[i]
    }

    /// `Σ (-1)^i rank C_i`.
    pub fn euler(&self) -> i64 {
        alternating(self.ranks.iter().copied())
    }

    /// Free rank and torsion invariant factors of each homology group.
    pub fn homology(&self) -> Vec<(usize, Vec<R>)> {
        let factors: Vec<Vec<R>> = (0..=self.len())
            .into_par_iter()
            .map(|i| {
                if i == 0 || i >= self.len() {
                    Vec::new()
                } else {
                    invariant_factors(&self.boundaries[i])
                }
            })
            .collect();
        (0..self.len())
            .map(|i| {
                let rank = self.ranks[i] - factors[i].len() - factors[i + 1].len();
                let torsion = factors[i + 1]
                    .iter()
                    .filter(|d| !d.is_unit())
                    .cloned()
                    .collect();
                (rank, torsion)
            })
            .collect()
    }

    /// `∂ ∘ ∂ = 0` in every degree.
    pub fn is_complex(&self) -> bool {
        (2..self.len()).all(|i| self.boundaries[i - 1].mul(&self.boundaries[i]).is_zero())
    }
}

impl ChainComplex<num_bigint::BigInt> {
    /// Simplicial chains of `x` with integer coefficients.
    pub fn simplicial(x: &StratifiedComplex) -> Self {
        Self::new(
            (0..=x.dim())
                .map(|i| x.boundary_matrix(i).expect("degree in range"))
                .collect(),
        )
    }
}

pub(crate) fn alternating(values: impl Iterator<Item = usize>) -> i64 {
    values
        .enumerate()
        .map(|(i, r)| if i % 2 == 0 { r as i64 } else { -(r as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn circle_homology() {
        let x =
            StratifiedComplex::manifold(0, Some(1), 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]])
                .unwrap();
        let c = ChainComplex::simplicial(&x);
        assert!(c.is_complex());
        assert_eq!(c.homology(), vec![(1, vec![]), (1, vec![])]);
        assert_eq!(c.euler(), 0);
    }

    #[test]
    fn torsion_from_next_boundary() {
        // Z --2--> Z : H_0 = Z/2, H_1 = 0.
        let c = ChainComplex::new(vec![
            Matrix::<BigInt>::zeros(0, 1),
            Matrix::from_i64_rows(&[&[2]]),
        ]);
        assert_eq!(c.homology(), vec![(0, vec![BigInt::from(2)]), (0, vec![])]);
    }
}
