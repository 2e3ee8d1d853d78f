use num_bigint::BigInt;

use super::chain::ChainComplex;
use crate::algebra::{EuclideanRing, Matrix, SplitBasis};
use crate::complex::StratifiedComplex;
use crate::error::ComplexError;

/// Membership flags for allowable `i`-simplices under the middle perversity:
/// for every singular stratum `S` of complex codimension `s`, the largest
/// face of `σ` lying in `S` has dimension `< i - s`.
pub fn allowable_mask(x: &StratifiedComplex, i: usize) -> Vec<bool> {
    let i64_i = i as i64;
    x.simplices(i)
        .iter()
        .map(|s| {
            let mut top_face = vec![-1i64; x.strata().len()];
            for f in s.faces() {
                let st = x.stratum_index(f.dim(), x.index_of(&f).expect("face present"));
                top_face[st] = top_face[st].max(f.dim() as i64);
            }
            x.singular_strata()
                .all(|(st, _)| top_face[st] < 0 || top_face[st] < i64_i - x.codim(st) as i64)
        })
        .collect()
}

/// Indices (into `x.simplices(i)`) of the allowable `i`-simplices.
pub fn allowable_simplices(x: &StratifiedComplex, i: usize) -> Vec<usize> {
    allowable_mask(x, i)
        .into_iter()
        .enumerate()
        .filter_map(|(j, a)| a.then_some(j))
        .collect()
}

/// Allowable chains `A_i` and the intersection chain complex `IC_i`.
///
/// `IC_i = {ξ ∈ span A_i : ∂ξ ∈ span A_{i-1}}`, stored as a basis of the
/// kernel of the part of `∂` leaving `A_{i-1}`. The basis is saturated, and
/// the induced boundaries are written in these bases.
#[derive(Clone, Debug)]
pub struct AllowableChainSystem<R> {
    simplex_counts: Vec<usize>,
    allowable: Vec<Vec<usize>>,
    bases: Vec<SplitBasis<R>>,
    complex: ChainComplex<R>,
}

impl<R: EuclideanRing> AllowableChainSystem<R> {
    /// Builds the system from the simplicial boundary matrices of `x`
    /// (ordinary or twisted). Does not validate `x`.
    pub fn from_boundaries(x: &StratifiedComplex, boundary: impl Fn(usize) -> Matrix<R>) -> Self {
        let dim = x.dim();
        let masks: Vec<Vec<bool>> = (0..=dim).map(|i| allowable_mask(x, i)).collect();
        let allowable: Vec<Vec<usize>> = masks
            .iter()
            .map(|m| {
                m.iter()
                    .enumerate()
                    .filter_map(|(j, a)| a.then_some(j))
                    .collect()
            })
            .collect();
        let full: Vec<Matrix<R>> = (0..=dim).map(&boundary).collect();

        let mut bases = Vec::with_capacity(dim + 1);
        for i in 0..=dim {
            let blocked: Vec<usize> = if i == 0 {
                Vec::new()
            } else {
                (0..x.count(i - 1)).filter(|&r| !masks[i - 1][r]).collect()
            };
            let constraint = if blocked.is_empty() {
                Matrix::zeros(0, allowable[i].len())
            } else {
                full[i].select(&blocked, &allowable[i])
            };
            bases.push(if constraint.is_zero() {
                SplitBasis::full(allowable[i].len())
            } else {
                SplitBasis::new(&constraint)
            });
        }

        let mut boundaries = Vec::with_capacity(dim + 1);
        boundaries.push(Matrix::zeros(0, bases[0].kernel_dim()));
        for i in 1..=dim {
            let d = full[i].select(&allowable[i - 1], &allowable[i]);
            let image = d.mul(&bases[i].kernel());
            boundaries.push(bases[i - 1].kernel_projection().mul(&image));
        }

        Self {
            simplex_counts: (0..=dim).map(|i| x.count(i)).collect(),
            allowable,
            bases,
            complex: ChainComplex::new(boundaries),
        }
    }

    pub fn allowable(&self, i: usize) -> &[usize] {
        &self.allowable[i]
    }

    pub fn ic_rank(&self, i: usize) -> usize {
        self.complex.rank(i)
    }

    /// Basis of `IC_i` as columns in the simplex basis of `C_i`.
    pub fn basis(&self, i: usize) -> Matrix<R> {
        let k = self.bases[i].kernel();
        let mut out = Matrix::zeros(self.simplex_counts[i], k.cols());
        for (r, &s) in self.allowable[i].iter().enumerate() {
            for c in 0..k.cols() {
                out.set(s, c, k.get(r, c).clone());
            }
        }
        out
    }

    /// Coordinates in the `IC_i` basis of a chain given in the simplex
    /// basis; `None` if the chain is not in `IC_i`.
    pub fn coordinates(&self, i: usize, chain: &[R]) -> Option<Vec<R>> {
        let allowed = &self.allowable[i];
        let mut on_allowed = Vec::with_capacity(allowed.len());
        let mut k = 0;
        for (s, v) in chain.iter().enumerate() {
            if k < allowed.len() && allowed[k] == s {
                on_allowed.push(v.clone());
                k += 1;
            } else if !v.is_zero() {
                return None;
            }
        }
        self.bases[i].kernel_coords(&on_allowed)
    }

    /// The intersection chain complex with its induced boundaries.
    pub fn complex(&self) -> &ChainComplex<R> {
        &self.complex
    }
}

/// The integral intersection chain system of a valid, full complex.
pub fn build_ic(x: &StratifiedComplex) -> Result<AllowableChainSystem<BigInt>, ComplexError> {
    super::require_valid(x)?;
    Ok(AllowableChainSystem::from_boundaries(x, |i| {
        x.boundary_matrix(i).expect("degree in range")
    }))
}
