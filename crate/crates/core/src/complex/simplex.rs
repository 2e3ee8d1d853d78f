use std::fmt;

use serde::{Serialize, Serializer};

/// An oriented simplex: strictly increasing vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Sorts the vertices; `None` if a vertex repeats or the list is empty.
    pub fn new(mut vertices: Vec<usize>) -> Option<Self> {
        if vertices.is_empty() {
            return None;
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Self(vertices))
    }

    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self(vertices)
    }

    pub fn vertex(v: usize) -> Self {
        Self(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// Face opposite the vertex in position `j`.
    pub fn facet(&self, j: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(j);
        Self(v)
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let k = self.0.len();
        (1u64..(1u64 << k)).map(move |mask| {
            Self(
                (0..k)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| self.0[b])
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_rejects_repeats() {
        assert_eq!(Simplex::new(vec![3, 1, 2]).unwrap().vertices(), &[1, 2, 3]);
        assert!(Simplex::new(vec![1, 1]).is_none());
        assert!(Simplex::new(vec![]).is_none());
    }

    #[test]
    fn faces_of_triangle() {
        let s = Simplex::new(vec![0, 1, 2]).unwrap();
        assert_eq!(s.faces().count(), 7);
        assert_eq!(s.facet(1).vertices(), &[0, 2]);
        assert_eq!(s.to_string(), "(0,1,2)");
    }
}
