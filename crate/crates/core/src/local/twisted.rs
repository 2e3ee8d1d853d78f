use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use super::cocycle::Cocycle;
use super::gauge::{gauged_boundary, SpanningTree};
use crate::algebra::LaurentPoly;
use crate::complex::StratifiedComplex;
use crate::error::CocycleError;
use crate::ih::AllowableChainSystem;

/// Rank over `Q(t)` and torsion of one twisted homology module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedDegree {
    pub rank: usize,
    /// Non-unit invariant factors, monic with lowest exponent zero.
    pub torsion: Vec<LaurentPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedIHReport {
    pub degrees: Vec<TwistedDegree>,
}

impl TwistedIHReport {
    pub fn from_degrees(raw: Vec<(usize, Vec<LaurentPoly>)>) -> Self {
        Self {
            degrees: raw
                .into_iter()
                .map(|(rank, torsion)| TwistedDegree { rank, torsion })
                .collect(),
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.rank).collect()
    }

    /// `Σ (-1)^i rank_i`.
    pub fn euler(&self) -> i64 {
        self.degrees
            .iter()
            .enumerate()
            .map(|(i, d)| {
                if i % 2 == 0 {
                    d.rank as i64
                } else {
                    -(d.rank as i64)
                }
            })
            .sum()
    }
}

impl Serialize for TwistedDegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let torsion: Vec<String> = self.torsion.iter().map(ToString::to_string).collect();
        let mut st = s.serialize_struct("TwistedDegree", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("torsion", &torsion)?;
        st.end()
    }
}

impl Serialize for TwistedIHReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.degrees.len()))?;
        for (i, d) in self.degrees.iter().enumerate() {
            map.serialize_entry(&i.to_string(), d)?;
        }
        map.end()
    }
}

/// Twisted intersection chains: the allowable sets of the untwisted
/// complex with the twisted boundary.
pub fn twisted_chain_system(
    x: &StratifiedComplex,
    w: &Cocycle,
    tree: &SpanningTree,
) -> Result<AllowableChainSystem<LaurentPoly>, CocycleError> {
    crate::ih::require_valid(x)?;
    w.check(x)?;
    let p = tree.potentials(w);
    Ok(AllowableChainSystem::from_boundaries(x, |i| {
        gauged_boundary(x, w, &p, i).expect("degree in range")
    }))
}

/// Twisted intersection homology in the breadth-first gauge.
pub fn twisted_ih(x: &StratifiedComplex, w: &Cocycle) -> Result<TwistedIHReport, CocycleError> {
    twisted_ih_with_tree(x, w, &SpanningTree::bfs(x))
}

pub fn twisted_ih_with_tree(
    x: &StratifiedComplex,
    w: &Cocycle,
    tree: &SpanningTree,
) -> Result<TwistedIHReport, CocycleError> {
    let sys = twisted_chain_system(x, w, tree)?;
    Ok(TwistedIHReport::from_degrees(sys.complex().homology()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> StratifiedComplex {
        StratifiedComplex::manifold(0, Some(1), 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]])
            .unwrap()
    }

    #[test]
    fn circle_surjective() {
        let r = twisted_ih(&circle(), &Cocycle::from_edges([(2, 0, 1)])).unwrap();
        assert_eq!(r.ranks(), vec![0, 0]);
        assert_eq!(
            r.degrees[0].torsion,
            vec![LaurentPoly::from_int_terms(&[(1, 1), (0, -1)])]
        );
        assert!(r.degrees[1].torsion.is_empty());
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"0":{"rank":0,"torsion":["t - 1"]},"1":{"rank":0,"torsion":[]}}"#
        );
    }

    #[test]
    fn circle_double_cover_class() {
        let r = twisted_ih(&circle(), &Cocycle::from_edges([(2, 0, 2)])).unwrap();
        assert_eq!(
            r.degrees[0].torsion,
            vec![LaurentPoly::from_int_terms(&[(2, 1), (0, -1)])]
        );
    }

    #[test]
    fn zero_cocycle_is_untwisted() {
        let r = twisted_ih(&circle(), &Cocycle::zero()).unwrap();
        assert_eq!(r.ranks(), vec![1, 1]);
    }

    #[test]
    fn gauge_choice_does_not_matter() {
        let x = circle();
        let w = Cocycle::from_edges([(1, 2, 5)]);
        assert_eq!(
            twisted_ih_with_tree(&x, &w, &SpanningTree::bfs(&x)).unwrap(),
            twisted_ih_with_tree(&x, &w, &SpanningTree::dfs(&x)).unwrap()
        );
    }
}
