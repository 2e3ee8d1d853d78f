use serde::Serialize;

use super::cocycle::{validate_cocycle, Cocycle};
use super::gauge::{gauged_boundary, SpanningTree};
use super::twisted::twisted_ih;
use crate::complex::StratifiedComplex;
use crate::error::CocycleError;
use crate::ih::{intersection_homology, ordinary_homology, ChainComplex};

/// Outcome of the signed Euler criterion for one theory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    /// Twisted ranks vanish off degree `n`, so the Euler characteristic is
    /// `(-1)^n * rank_n` and its signed value is `rank_n ≥ 0`.
    Witness { rank_n: usize, euler: i64 },
    /// Degrees other than `n` with nonzero twisted rank.
    Inapplicable { degrees: Vec<usize> },
}

impl Verdict {
    fn from_ranks(ranks: &[usize], n: usize) -> Self {
        let off: Vec<usize> = (0..ranks.len())
            .filter(|&i| i != n && ranks[i] != 0)
            .collect();
        if off.is_empty() {
            let rank_n = ranks.get(n).copied().unwrap_or(0);
            let euler = if n.is_multiple_of(2) {
                rank_n as i64
            } else {
                -(rank_n as i64)
            };
            Verdict::Witness { rank_n, euler }
        } else {
            Verdict::Inapplicable { degrees: off }
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self, Verdict::Witness { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub n: usize,
    pub twisted_ih_ranks: Vec<usize>,
    /// `Iχ` from untwisted intersection homology.
    pub ichi: i64,
    pub ih: Verdict,
    pub twisted_h_ranks: Vec<usize>,
    pub chi: i64,
    pub h: Verdict,
}

impl WitnessReport {
    /// Both theories produced a witness.
    pub fn is_witness(&self) -> bool {
        self.ih.is_witness() && self.h.is_witness()
    }
}

/// Twisted ranks for a surjective cocycle, and the witness
/// `Iχ = (-1)^n rank_n` when every other twisted rank vanishes; the same for
/// ordinary homology and `χ`. The alternating sum of twisted ranks is
/// asserted to equal the untwisted Euler characteristic.
pub fn euler_witness(
    x: &StratifiedComplex,
    w: &Cocycle,
    n: usize,
) -> Result<WitnessReport, CocycleError> {
    let induced = validate_cocycle(x, w)?;
    if !induced.surjective {
        return Err(CocycleError::NotSurjective(induced.image_generator));
    }
    let tw = twisted_ih(x, w)?;
    let ichi = intersection_homology(x)?.euler();
    assert_eq!(tw.euler(), ichi, "twisted ranks do not sum to Iχ");

    let p = SpanningTree::bfs(x).potentials(w);
    let chains = ChainComplex::new(
        (0..=x.dim())
            .map(|i| gauged_boundary(x, w, &p, i))
            .collect::<Result<Vec<_>, _>>()?,
    );
    let twisted_h_ranks: Vec<usize> = chains.homology().into_iter().map(|(r, _)| r).collect();
    let chi = ordinary_homology(x).euler();
    let twisted_chi: i64 = twisted_h_ranks
        .iter()
        .enumerate()
        .map(|(i, &r)| if i % 2 == 0 { r as i64 } else { -(r as i64) })
        .sum();
    assert_eq!(twisted_chi, chi, "twisted ranks do not sum to χ");

    let twisted_ih_ranks = tw.ranks();
    Ok(WitnessReport {
        n,
        ih: Verdict::from_ranks(&twisted_ih_ranks, n),
        twisted_ih_ranks,
        ichi,
        h: Verdict::from_ranks(&twisted_h_ranks, n),
        twisted_h_ranks,
        chi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_witness_in_degree_zero() {
        let x =
            StratifiedComplex::manifold(0, Some(1), 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]])
                .unwrap();
        let r = euler_witness(&x, &Cocycle::from_edges([(2, 0, 1)]), 0).unwrap();
        assert_eq!(
            r.ih,
            Verdict::Witness {
                rank_n: 0,
                euler: 0
            }
        );
        assert!(r.is_witness());
        assert_eq!(
            euler_witness(&x, &Cocycle::zero(), 0).unwrap_err(),
            CocycleError::NotSurjective(0)
        );
    }

    #[test]
    fn verdict_from_ranks() {
        assert_eq!(
            Verdict::from_ranks(&[0, 2, 0], 1),
            Verdict::Witness {
                rank_n: 2,
                euler: -2
            }
        );
        assert_eq!(
            Verdict::from_ranks(&[1, 2, 1], 1),
            Verdict::Inapplicable {
                degrees: vec![0, 2]
            }
        );
    }
}
