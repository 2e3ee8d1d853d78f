use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

/// Free rank and torsion invariant factors of one homology group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub rank: usize,
    /// Invariant factors `> 1`, each dividing the next.
    pub torsion: Vec<BigInt>,
}

/// Integral homology, degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyReport {
    pub fn from_degrees(raw: Vec<(usize, Vec<BigInt>)>) -> Self {
        Self {
            degrees: raw
                .into_iter()
                .map(|(rank, torsion)| DegreeHomology { rank, torsion })
                .collect(),
        }
    }

    /// Torsion-free report with the given ranks.
    pub fn free(ranks: &[usize]) -> Self {
        Self::from_degrees(ranks.iter().map(|&r| (r, Vec::new())).collect())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.rank).collect()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.degrees.iter().all(|d| d.torsion.is_empty())
    }

    pub fn is_zero(&self) -> bool {
        self.degrees
            .iter()
            .all(|d| d.rank == 0 && d.torsion.is_empty())
    }

    /// `Σ (-1)^i rank_i`.
    pub fn euler(&self) -> i64 {
        super::chain::alternating(self.degrees.iter().map(|d| d.rank))
    }
}

struct Factors<'a>(&'a [BigInt]);

impl Serialize for Factors<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for d in self.0 {
            // Large factors are written as decimal strings.
            match d.to_u64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&d.to_string())?,
            }
        }
        seq.end()
    }
}

impl Serialize for DegreeHomology {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DegreeHomology", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("torsion", &Factors(&self.torsion))?;
        st.end()
    }
}

impl Serialize for HomologyReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.degrees.len()))?;
        for (i, d) in self.degrees.iter().enumerate() {
            map.serialize_entry(&i.to_string(), d)?;
        }
        map.end()
    }
}
