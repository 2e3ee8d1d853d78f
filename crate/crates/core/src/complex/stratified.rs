use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use serde::Serialize;

use super::simplex::Simplex;
use crate::algebra::IntMatrix;
use crate::error::ComplexError;

/// A stratum with its complex dimension. Its complex codimension inside an
/// `n`-dimensional space is `n - cdim`, its real dimension `dim - 2 * codim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Stratum {
    pub id: u32,
    pub cdim: usize,
}

/// Simplicial complex together with a stratification by open simplices.
///
/// Every simplex belongs to exactly one stratum. Simplices not explicitly
/// assigned belong to the top stratum, the unique stratum with `cdim == n`.
#[derive(Clone, Debug)]
pub struct StratifiedComplex {
    n: usize,
    dim: usize,
    vertex_count: usize,
    maximal: Vec<Simplex>,
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    strata: Vec<Stratum>,
    top: usize,
    assignment: Vec<Vec<usize>>,
}

impl StratifiedComplex {
    /// Builds a complex from its maximal simplices.
    ///
    /// `dim` is the real dimension; `None` means `2 * n`. Structural errors
    /// (bad vertex ids, unknown strata, assignments to missing simplices)
    /// are rejected here; geometric conditions are left to `validate`.
    pub fn new(
        n: usize,
        dim: Option<usize>,
        vertex_count: usize,
        maximal: Vec<Vec<usize>>,
        strata: Vec<Stratum>,
        assign: Vec<(Vec<usize>, u32)>,
    ) -> Result<Self, ComplexError> {
        let mut max_simplices = Vec::with_capacity(maximal.len());
        for raw in maximal {
            for &v in &raw {
                if v >= vertex_count {
                    return Err(ComplexError::VertexOutOfRange {
                        vertex: v,
                        count: vertex_count,
                    });
                }
            }
            if raw.is_empty() {
                return Err(ComplexError::EmptySimplex);
            }
            let s = Simplex::new(raw.clone()).ok_or(ComplexError::RepeatedVertex(raw))?;
            max_simplices.push(s);
        }
        max_simplices.sort();

        let mut strata = strata;
        strata.sort();
        for w in strata.windows(2) {
            if w[0].id == w[1].id {
                return Err(ComplexError::DuplicateStratum(w[0].id));
            }
        }
        let tops: Vec<usize> = (0..strata.len()).filter(|&i| strata[i].cdim == n).collect();
        let top = match tops.as_slice() {
            [t] => *t,
            [] => return Err(ComplexError::MissingTopStratum(n)),
            _ => {
                return Err(ComplexError::Unsupported(
                    "more than one stratum of top dimension".into(),
                ))
            }
        };

        let mut by_dim: Vec<BTreeSet<Simplex>> = Vec::new();
        for s in &max_simplices {
            for f in s.faces() {
                let d = f.dim();
                if by_dim.len() <= d {
                    by_dim.resize_with(d + 1, BTreeSet::new);
                }
                by_dim[d].insert(f);
            }
        }
        let simplices: Vec<Vec<Simplex>> = by_dim
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let index: Vec<HashMap<Simplex, usize>> = simplices
            .iter()
            .map(|layer| {
                layer
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, s)| (s, i))
                    .collect()
            })
            .collect();
        let mut assignment: Vec<Vec<usize>> =
            simplices.iter().map(|l| vec![top; l.len()]).collect();
        let mut seen = BTreeSet::new();
        for (raw, id) in assign {
            let s = Simplex::new(raw.clone()).ok_or(ComplexError::RepeatedVertex(raw))?;
            let d = s.dim();
            let Some(&idx) = index.get(d).and_then(|m| m.get(&s)) else {
                return Err(ComplexError::UnknownSimplex(s));
            };
            let Ok(stratum) = strata.binary_search_by_key(&id, |st| st.id) else {
                return Err(ComplexError::UnknownStratum(id));
            };
            if !seen.insert(s.clone()) {
                return Err(ComplexError::DuplicateAssignment(s));
            }
            assignment[d][idx] = stratum;
        }

        Ok(Self {
            n,
            dim: dim.unwrap_or(2 * n),
            vertex_count,
            maximal: max_simplices,
            simplices,
            index,
            strata,
            top,
            assignment,
        })
    }

    /// A complex with the single top stratum (id 0).
    pub fn manifold(
        n: usize,
        dim: Option<usize>,
        vertex_count: usize,
        maximal: Vec<Vec<usize>>,
    ) -> Result<Self, ComplexError> {
        Self::new(
            n,
            dim,
            vertex_count,
            maximal,
            vec![Stratum { id: 0, cdim: n }],
            vec![],
        )
    }

    /// Same simplices, but every simplex of the given strata recorded by a
    /// per-simplex function returning a stratum index.
    pub(crate) fn with_assignment(
        n: usize,
        dim: usize,
        vertex_count: usize,
        maximal: Vec<Vec<usize>>,
        strata: Vec<Stratum>,
        stratum_of: impl Fn(&Simplex) -> u32,
    ) -> Result<Self, ComplexError> {
        let plain = Self::new(
            n,
            Some(dim),
            vertex_count,
            maximal.clone(),
            strata.clone(),
            vec![],
        )?;
        let top_id = plain.strata[plain.top].id;
        let mut assign = Vec::new();
        for layer in &plain.simplices {
            for s in layer {
                let id = stratum_of(s);
                if id != top_id {
                    assign.push((s.vertices().to_vec(), id));
                }
            }
        }
        Self::new(n, Some(dim), vertex_count, maximal, strata, assign)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Real (top) dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn maximal(&self) -> &[Simplex] {
        &self.maximal
    }

    /// Highest dimension in which simplices exist.
    pub fn max_simplex_dim(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }

    /// Simplices of dimension `d`, sorted lexicographically.
    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    pub fn face_counts(&self) -> Vec<usize> {
        (0..=self.dim).map(|d| self.count(d)).collect()
    }

    /// Euler characteristic from face counts.
    pub fn euler_from_faces(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn top_stratum(&self) -> Stratum {
        self.strata[self.top]
    }

    /// Strata other than the top one.
    pub fn singular_strata(&self) -> impl Iterator<Item = (usize, Stratum)> + '_ {
        self.strata
            .iter()
            .copied()
            .enumerate()
            .filter(move |(i, _)| *i != self.top)
    }

    pub fn has_singular_strata(&self) -> bool {
        self.strata.len() > 1
    }

    /// Complex codimension of a stratum (by index into `strata()`).
    pub fn codim(&self, stratum: usize) -> usize {
        self.n - self.strata[stratum].cdim
    }

    /// Index into `strata()` of the stratum containing the open simplex.
    pub fn stratum_index(&self, d: usize, idx: usize) -> usize {
        self.assignment[d][idx]
    }

    pub fn stratum_of(&self, s: &Simplex) -> Option<Stratum> {
        let idx = self.index_of(s)?;
        Some(self.strata[self.assignment[s.dim()][idx]])
    }

    pub(crate) fn top_index(&self) -> usize {
        self.top
    }

    pub fn is_singular(&self, d: usize, idx: usize) -> bool {
        self.assignment[d][idx] != self.top
    }

    /// Singular simplices with their stratum ids, in canonical order.
    pub fn singular_assignments(&self) -> Vec<(Simplex, u32)> {
        let mut out = Vec::new();
        for (d, layer) in self.simplices.iter().enumerate() {
            for (i, s) in layer.iter().enumerate() {
                if self.is_singular(d, i) {
                    out.push((s.clone(), self.strata[self.assignment[d][i]].id));
                }
            }
        }
        out
    }

    /// Matrix of `∂: C_i -> C_{i-1}` in the sorted-vertex orientation.
    pub fn boundary_matrix(&self, i: usize) -> Result<IntMatrix, ComplexError> {
        if i > self.dim {
            return Err(ComplexError::DegreeOutOfRange {
                degree: i,
                max: self.dim,
            });
        }
        let cols = self.count(i);
        if i == 0 {
            return Ok(IntMatrix::zeros(0, cols));
        }
        let mut m = IntMatrix::zeros(self.count(i - 1), cols);
        for (c, s) in self.simplices(i).iter().enumerate() {
            for j in 0..=i {
                let r = self.index_of(&s.facet(j)).expect("faces are present");
                m.set(r, c, BigInt::from(if j % 2 == 0 { 1 } else { -1 }));
            }
        }
        Ok(m)
    }

    /// Vertex adjacency lists, sorted.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in self.simplices(1) {
            let (a, b) = (e.vertices()[0], e.vertices()[1]);
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Edge-path distance from `from` to every vertex (`usize::MAX` if
    /// unreachable).
    pub fn distances_from(&self, from: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut dist = vec![usize::MAX; self.vertex_count];
        let mut queue = VecDeque::from([from]);
        dist[from] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// A set of simplices of a fixed complex, stored as per-dimension flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexSet {
    members: Vec<Vec<bool>>,
}

impl SimplexSet {
    pub fn empty(x: &StratifiedComplex) -> Self {
        Self {
            members: (0..=x.max_simplex_dim())
                .map(|d| vec![false; x.count(d)])
                .collect(),
        }
    }

    pub fn contains(&self, d: usize, idx: usize) -> bool {
        self.members.get(d).is_some_and(|l| l[idx])
    }

    pub(crate) fn insert(&mut self, d: usize, idx: usize) {
        self.members[d][idx] = true;
    }

    pub fn len(&self) -> usize {
        self.members
            .iter()
            .map(|l| l.iter().filter(|b| **b).count())
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(dimension, index)` pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.members.iter().enumerate().flat_map(|(d, l)| {
            l.iter()
                .enumerate()
                .filter(|(_, b)| **b)
                .map(move |(i, _)| (d, i))
        })
    }

    pub fn simplices(&self, x: &StratifiedComplex) -> Vec<Simplex> {
        self.iter()
            .map(|(d, i)| x.simplices(d)[i].clone())
            .collect()
    }
}

/// A subcomplex: closed under taking faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcomplex {
    set: SimplexSet,
}

impl Subcomplex {
    /// The full subcomplex spanned by a vertex set.
    pub fn spanned(x: &StratifiedComplex, vertices: &[usize]) -> Self {
        let vs: BTreeSet<usize> = vertices.iter().copied().collect();
        let mut set = SimplexSet::empty(x);
        for d in 0..=x.max_simplex_dim() {
            for (i, s) in x.simplices(d).iter().enumerate() {
                if s.vertices().iter().all(|v| vs.contains(v)) {
                    set.insert(d, i);
                }
            }
        }
        Self { set }
    }

    /// Closure of a list of simplices under faces.
    pub fn generated(x: &StratifiedComplex, generators: &[Simplex]) -> Result<Self, ComplexError> {
        let mut set = SimplexSet::empty(x);
        for g in generators {
            for f in g.faces() {
                let idx = x
                    .index_of(&f)
                    .ok_or_else(|| ComplexError::UnknownSimplex(g.clone()))?;
                set.insert(f.dim(), idx);
            }
        }
        Ok(Self { set })
    }

    pub fn empty(x: &StratifiedComplex) -> Self {
        Self {
            set: SimplexSet::empty(x),
        }
    }

    pub fn whole(x: &StratifiedComplex) -> Self {
        Self::spanned(x, &(0..x.vertex_count()).collect::<Vec<_>>())
    }

    pub fn set(&self) -> &SimplexSet {
        &self.set
    }

    pub fn contains(&self, d: usize, idx: usize) -> bool {
        self.set.contains(d, idx)
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.set
            .iter()
            .filter(|(d, _)| *d == 0)
            .map(|(_, i)| i)
            .collect()
    }

    /// `Err` with the first simplex spanned by member vertices that is
    /// missing from the subcomplex.
    pub fn check_full(&self, x: &StratifiedComplex) -> Result<(), ComplexError> {
        let in_vertices: BTreeSet<usize> = self
            .vertices()
            .into_iter()
            .map(|i| x.simplices(0)[i].vertices()[0])
            .collect();
        for d in 0..=x.max_simplex_dim() {
            for (i, s) in x.simplices(d).iter().enumerate() {
                if !self.contains(d, i) && s.vertices().iter().all(|v| in_vertices.contains(v)) {
                    return Err(ComplexError::NotFull(s.clone()));
                }
            }
        }
        Ok(())
    }
}

/// Open star of a full subcomplex: every simplex with a vertex in it.
pub fn star_neighborhood(
    x: &StratifiedComplex,
    a: &Subcomplex,
) -> Result<SimplexSet, ComplexError> {
    a.check_full(x)?;
    let verts: BTreeSet<usize> = a
        .vertices()
        .into_iter()
        .map(|i| x.simplices(0)[i].vertices()[0])
        .collect();
    let mut set = SimplexSet::empty(x);
    for d in 0..=x.max_simplex_dim() {
        for (i, s) in x.simplices(d).iter().enumerate() {
            if s.vertices().iter().any(|v| verts.contains(v)) {
                set.insert(d, i);
            }
        }
    }
    Ok(set)
}
