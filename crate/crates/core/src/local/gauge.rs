use std::collections::VecDeque;

use crate::algebra::{LaurentMatrix, LaurentPoly};
use crate::complex::{Simplex, StratifiedComplex};
use crate::error::CocycleError;

use super::cocycle::Cocycle;

/// A spanning forest of the 1-skeleton, rooted at the lowest vertex of each
/// component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    parent: Vec<Option<usize>>,
    /// Vertices in breadth-first order; parents come before children.
    order: Vec<usize>,
}

impl SpanningTree {
    /// Breadth-first forest, neighbours visited in increasing order.
    pub fn bfs(x: &StratifiedComplex) -> Self {
        Self::search(x.vertex_count(), &x.adjacency())
    }

    /// Depth-first forest, neighbours tried in increasing order.
    pub fn dfs(x: &StratifiedComplex) -> Self {
        let adj = x.adjacency();
        let count = x.vertex_count();
        let mut parent = vec![None; count];
        let mut seen = vec![false; count];
        let mut preorder = Vec::with_capacity(count);
        for root in 0..count {
            if seen[root] {
                continue;
            }
            let mut stack = vec![(root, None)];
            while let Some((v, from)) = stack.pop() {
                if seen[v] {
                    continue;
                }
                seen[v] = true;
                parent[v] = from;
                preorder.push(v);
                for &w in adj[v].iter().rev() {
                    if !seen[w] {
                        stack.push((w, Some(v)));
                    }
                }
            }
        }
        Self {
            parent,
            order: preorder,
        }
    }

    /// The forest formed by the given edges, which must be edges of `x`,
    /// contain no cycle and connect each component of `x`.
    pub fn from_edges(
        x: &StratifiedComplex,
        edges: &[(usize, usize)],
    ) -> Result<Self, CocycleError> {
        let mut adj = vec![Vec::new(); x.vertex_count()];
        for &(a, b) in edges {
            let e = Simplex::new(vec![a, b]).ok_or(CocycleError::BadTree(a, b))?;
            if x.index_of(&e).is_none() {
                return Err(CocycleError::BadTree(a, b));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        let tree = Self::search(x.vertex_count(), &adj);
        let full = Self::bfs(x);
        for v in 0..x.vertex_count() {
            if tree.root_of(v) != full.root_of(v) {
                return Err(CocycleError::TreeNotSpanning(v));
            }
        }
        if edges.len() != tree.edges().len() {
            let (a, b) = edges
                .iter()
                .copied()
                .find(|&(a, b)| tree.parent[a] != Some(b) && tree.parent[b] != Some(a))
                .expect("an extra edge exists");
            return Err(CocycleError::BadTree(a, b));
        }
        Ok(tree)
    }

    fn search(count: usize, adj: &[Vec<usize>]) -> Self {
        let mut parent = vec![None; count];
        let mut seen = vec![false; count];
        let mut order = Vec::with_capacity(count);
        for root in 0..count {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(v);
                        queue.push_back(w);
                    }
                }
            }
        }
        Self { parent, order }
    }

    fn root_of(&self, mut v: usize) -> usize {
        while let Some(p) = self.parent[v] {
            v = p;
        }
        v
    }

    /// Tree edges as `(parent, child)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.order
            .iter()
            .filter_map(|&v| self.parent[v].map(|p| (p, v)))
            .collect()
    }

    /// Integer potentials `p` with `p(root) = 0` and
    /// `p(child) = p(parent) + ω(parent, child)`, so that the gauged cocycle
    /// `ω - δp` vanishes on tree edges.
    pub fn potentials(&self, w: &Cocycle) -> Vec<i64> {
        let mut p = vec![0i64; self.parent.len()];
        for &v in &self.order {
            if let Some(u) = self.parent[v] {
                p[v] = p[u] + w.value(u, v);
            }
        }
        p
    }

    pub fn vertices_in_order(&self) -> &[usize] {
        &self.order
    }
}

/// Twisted boundary `C_i -> C_{i-1}` over `Q[t, t^-1]` for the gauge of
/// the breadth-first tree.
pub fn twisted_boundary(
    x: &StratifiedComplex,
    w: &Cocycle,
    i: usize,
) -> Result<LaurentMatrix, CocycleError> {
    twisted_boundary_with(x, w, &SpanningTree::bfs(x), i)
}

/// Twisted boundary in the gauge of `tree`: face `j` of `σ` gets the usual
/// sign times `t^{ω'(σ_0, τ_0)}`, with `ω' = ω - δp` and `τ_0` the first
/// vertex of the face.
pub fn twisted_boundary_with(
    x: &StratifiedComplex,
    w: &Cocycle,
    tree: &SpanningTree,
    i: usize,
) -> Result<LaurentMatrix, CocycleError> {
    w.check(x)?;
    Ok(gauged_boundary(x, w, &tree.potentials(w), i)?)
}

pub(crate) fn gauged_boundary(
    x: &StratifiedComplex,
    w: &Cocycle,
    p: &[i64],
    i: usize,
) -> Result<LaurentMatrix, crate::error::ComplexError> {
    let plain = x.boundary_matrix(i)?;
    if i == 0 {
        return Ok(plain.to_laurent());
    }
    let mut m = LaurentMatrix::zeros(x.count(i - 1), x.count(i));
    for (c, s) in x.simplices(i).iter().enumerate() {
        for j in 0..=i {
            let face = s.facet(j);
            let r = x.index_of(&face).expect("faces are present");
            let (a, b) = (s.vertices()[0], face.vertices()[0]);
            let exponent = w.value(a, b) - p[b] + p[a];
            let sign = if j % 2 == 0 { 1 } else { -1 };
            m.set(r, c, LaurentPoly::signed_power(sign, exponent));
        }
    }
    Ok(m)
}
