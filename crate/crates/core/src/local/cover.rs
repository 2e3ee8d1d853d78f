use std::collections::HashMap;

use serde::Serialize;

use super::cocycle::Cocycle;
use super::gauge::{twisted_boundary_with, SpanningTree};
use crate::algebra::{LaurentMatrix, LaurentPoly};
use crate::complex::StratifiedComplex;
use crate::error::CocycleError;

/// Lifted vertex set `(vertex, sheet)` to `(simplex index, sheet)`.
type LiftTable = HashMap<Vec<(usize, i64)>, (usize, i64)>;

/// A finite window of the infinite cyclic cover.
///
/// Vertex `v` on sheet `k` is the pair `(v, k)`. A simplex `σ` lifted to
/// sheet `k` has its first vertex on sheet `k` and vertex `σ_j` on sheet
/// `k + ω(σ_0, σ_j)`. The deck generator moves every lift up one sheet and
/// acts as multiplication by `t`.
#[derive(Clone, Debug)]
pub struct CoverPresentation {
    window: i64,
    /// One table per dimension.
    lifts: Vec<LiftTable>,
}

impl CoverPresentation {
    /// Enumerates all lifts with sheet in `-window..=window`.
    pub fn new(x: &StratifiedComplex, w: &Cocycle, window: i64) -> Result<Self, CocycleError> {
        w.check(x)?;
        let mut lifts = Vec::with_capacity(x.max_simplex_dim() + 1);
        for d in 0..=x.max_simplex_dim() {
            let mut layer = HashMap::with_capacity(x.count(d) * (2 * window as usize + 1));
            for (idx, s) in x.simplices(d).iter().enumerate() {
                for k in -window..=window {
                    layer.insert(lift(w, s.vertices(), k), (idx, k));
                }
            }
            lifts.push(layer);
        }
        Ok(Self { window, lifts })
    }

    /// Smallest window containing every face of a sheet-0 lift.
    pub fn minimal_window(w: &Cocycle) -> i64 {
        w.max_abs()
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn lift_count(&self) -> usize {
        self.lifts.iter().map(HashMap::len).sum()
    }

    /// Boundary `C_i -> C_{i-1}` over `Q[t, t^-1]` read off the cover: the
    /// column of `σ` is the boundary of its sheet-0 lift, where a face found
    /// on sheet `k` contributes `t^k`.
    pub fn boundary(
        &self,
        x: &StratifiedComplex,
        w: &Cocycle,
        i: usize,
    ) -> Result<LaurentMatrix, CocycleError> {
        let plain = x.boundary_matrix(i)?;
        if i == 0 {
            return Ok(plain.to_laurent());
        }
        let mut m = LaurentMatrix::zeros(x.count(i - 1), x.count(i));
        for (c, s) in x.simplices(i).iter().enumerate() {
            let up = lift(w, s.vertices(), 0);
            if self.lifts[i].get(&up) != Some(&(c, 0)) {
                return Err(CocycleError::WindowTooSmall(s.clone()));
            }
            for j in 0..=i {
                let mut face = up.clone();
                face.remove(j);
                let &(r, k) = self.lifts[i - 1]
                    .get(&face)
                    .ok_or_else(|| CocycleError::WindowTooSmall(s.clone()))?;
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let entry = m.get(r, c).clone();
                m.set(
                    r,
                    c,
                    crate::algebra::EuclideanRing::add(&entry, &LaurentPoly::signed_power(sign, k)),
                );
            }
        }
        Ok(m)
    }
}

fn lift(w: &Cocycle, vertices: &[usize], sheet: i64) -> Vec<(usize, i64)> {
    let a = vertices[0];
    vertices
        .iter()
        .map(|&v| (v, sheet + w.value(a, v)))
        .collect()
}

/// First entry where the two constructions disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub degree: usize,
    pub row: usize,
    pub col: usize,
    pub representation: String,
    pub cover: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub degrees_checked: usize,
    pub window: i64,
    pub mismatch: Option<Mismatch>,
}

impl CrosscheckReport {
    pub fn agrees(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Builds the twisted boundary from the gauge (representation) and from
/// the cover, and compares them entry by entry after the change of lifts
/// `P = diag(t^{p(σ_0)})`: the gauge matrix must equal `P^-1 M_cover P`.
pub fn prop25_crosscheck(
    x: &StratifiedComplex,
    w: &Cocycle,
) -> Result<CrosscheckReport, CocycleError> {
    let tree = SpanningTree::bfs(x);
    let p = tree.potentials(w);
    let cover = CoverPresentation::new(x, w, CoverPresentation::minimal_window(w))?;
    for i in 1..=x.dim() {
        let rep = twisted_boundary_with(x, w, &tree, i)?;
        let cov = cover.boundary(x, w, i)?;
        for (c, s) in x.simplices(i).iter().enumerate() {
            for (r, f) in x.simplices(i - 1).iter().enumerate() {
                let moved = cov.get(r, c).shift(p[s.vertices()[0]] - p[f.vertices()[0]]);
                if &moved != rep.get(r, c) {
                    return Ok(CrosscheckReport {
                        degrees_checked: i - 1,
                        window: cover.window(),
                        mismatch: Some(Mismatch {
                            degree: i,
                            row: r,
                            col: c,
                            representation: rep.get(r, c).to_string(),
                            cover: moved.to_string(),
                        }),
                    });
                }
            }
        }
    }
    Ok(CrosscheckReport {
        degrees_checked: x.dim(),
        window: cover.window(),
        mismatch: None,
    })
}
