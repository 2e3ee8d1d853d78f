//! Deterministic triangulations of the catalog spaces.

use std::collections::BTreeMap;

use crate::complex::{Simplex, StratifiedComplex, Stratum};
use crate::error::ComplexError;
use crate::local::Cocycle;

/// Circle with `k ≥ 3` vertices, as an odd-dimensional complex with `n = 0`.
pub fn circle(k: usize) -> Result<StratifiedComplex, ComplexError> {
    if k < 3 {
        return Err(ComplexError::Unsupported(format!(
            "circle needs at least 3 vertices, got {k}"
        )));
    }
    let maximal = (0..k).map(|i| vec![i, (i + 1) % k]).collect();
    StratifiedComplex::manifold(0, Some(1), k, maximal)
}

/// Boundary of the `(d+1)`-simplex.
pub fn sphere(d: usize) -> Result<StratifiedComplex, ComplexError> {
    if d == 0 {
        return Err(ComplexError::Unsupported(
            "sphere needs dimension at least 1".into(),
        ));
    }
    let maximal = (0..d + 2)
        .map(|skip| (0..d + 2).filter(|&v| v != skip).collect())
        .collect();
    StratifiedComplex::manifold(d / 2, Some(d), d + 2, maximal)
}

/// Edge offsets of the 7-vertex torus and their classes in `H_1 = Z e1 + Z e2`.
const TORUS_STEPS: [(usize, [i64; 2]); 3] = [(1, [1, 0]), (3, [0, 1]), (2, [-1, 1])];

/// Minimal 7-vertex torus: triangles `(i, i+1, i+3)` and `(i, i+2, i+3)`
/// mod 7.
pub fn torus() -> StratifiedComplex {
    let mut maximal = Vec::new();
    for i in 0..7 {
        maximal.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        maximal.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    StratifiedComplex::manifold(1, None, 7, maximal).expect("torus is well formed")
}

/// Cocycle on the 7-vertex torus evaluating to `phi[0]` on `e1` and
/// `phi[1]` on `e2`.
pub fn torus_cocycle(phi: [i64; 2]) -> Cocycle {
    let mut edges = Vec::new();
    for i in 0..7 {
        for (step, class) in TORUS_STEPS {
            edges.push((i, (i + step) % 7, phi[0] * class[0] + phi[1] * class[1]));
        }
    }
    Cocycle::from_edges(edges)
}

/// Adds a coboundary to `w` so that it vanishes on the edges of each of the
/// given (pairwise disjoint) triangles.
fn gauge_to_zero(x: &StratifiedComplex, w: &Cocycle, triangles: &[[usize; 3]]) -> Cocycle {
    let mut f = vec![0i64; x.vertex_count()];
    for &[a, b, c] in triangles {
        f[b] = w.value(a, b);
        f[c] = w.value(a, c);
    }
    Cocycle::from_edges(x.simplices(1).iter().map(|e| {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        (a, b, w.value(a, b) - f[b] + f[a])
    }))
}

/// Genus-`g` surface as a chain of 7-vertex tori, copy `c` glued to copy
/// `c + 1` along triangle `(2,4,5)` of the first and `(0,1,3)` of the second
/// (both removed). Returns the surface and, per copy, the global id of each
/// local vertex.
pub fn genus_g(g: usize) -> Result<(StratifiedComplex, Vec<[usize; 7]>), ComplexError> {
    if g == 0 {
        return Ok((sphere(2)?, Vec::new()));
    }
    let mut ids: Vec<[usize; 7]> = Vec::with_capacity(g);
    let mut next = 0;
    for c in 0..g {
        let mut m = [usize::MAX; 7];
        if c > 0 {
            let prev = ids[c - 1];
            m[0] = prev[2];
            m[1] = prev[4];
            m[3] = prev[5];
        }
        for slot in m.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = next;
            next += 1;
        }
        ids.push(m);
    }
    let base = torus();
    let mut maximal = Vec::new();
    for (c, m) in ids.iter().enumerate() {
        for t in base.maximal() {
            let v = t.vertices();
            if (c > 0 && v == [0, 1, 3]) || (c + 1 < g && v == [2, 4, 5]) {
                continue;
            }
            maximal.push(v.iter().map(|&u| m[u]).collect());
        }
    }
    Ok((StratifiedComplex::manifold(1, None, next, maximal)?, ids))
}

/// The torus class `phi` on copy `c` of `genus_g`, zero off that copy.
pub fn genus_cocycle(g: usize, ids: &[[usize; 7]], c: usize, phi: [i64; 2]) -> Cocycle {
    let mut removed = Vec::new();
    if c > 0 {
        removed.push([0, 1, 3]);
    }
    if c + 1 < g {
        removed.push([2, 4, 5]);
    }
    let local = gauge_to_zero(&torus(), &torus_cocycle(phi), &removed);
    Cocycle::from_edges(local.edges().map(|(a, b, v)| (ids[c][a], ids[c][b], v)))
}

/// `p x q` grid torus, each square cut along its increasing diagonal.
/// Vertex `(i, j)` has id `i * q + j`.
pub fn grid_torus(p: usize, q: usize) -> Result<StratifiedComplex, ComplexError> {
    if p < 3 || q < 3 {
        return Err(ComplexError::Unsupported(
            "grid torus needs both sides at least 3".into(),
        ));
    }
    let id = |i: usize, j: usize| (i % p) * q + (j % q);
    let mut maximal = Vec::new();
    for i in 0..p {
        for j in 0..q {
            maximal.push(vec![id(i, j), id(i + 1, j), id(i + 1, j + 1)]);
            maximal.push(vec![id(i, j), id(i, j + 1), id(i + 1, j + 1)]);
        }
    }
    StratifiedComplex::manifold(1, None, p * q, maximal)
}

/// Winding number in the first (`axis = 0`) or second grid coordinate.
pub fn grid_cocycle(x: &StratifiedComplex, p: usize, q: usize, axis: usize) -> Cocycle {
    let (len, coord): (usize, Box<dyn Fn(usize) -> usize>) = if axis == 0 {
        (p, Box::new(move |v| v / q))
    } else {
        (q, Box::new(move |v| v % q))
    };
    Cocycle::from_edges(x.simplices(1).iter().map(|e| {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        let (ca, cb) = (coord(a), coord(b));
        let v = if ca == len - 1 && cb == 0 {
            1
        } else if ca == 0 && cb == len - 1 {
            -1
        } else {
            0
        };
        (a, b, v)
    }))
}

/// Result of gluing two vertices of a complex.
pub struct Identified {
    pub maximal: Vec<Vec<usize>>,
    pub vertex_count: usize,
    /// Old vertex id to new vertex id.
    pub map: Vec<usize>,
    /// The merged vertex.
    pub node: usize,
}

impl Identified {
    /// Pushes a cocycle forward; every edge of the quotient has a single
    /// preimage because the glued vertices are far apart.
    pub fn push_cocycle(&self, w: &Cocycle) -> Cocycle {
        Cocycle::from_edges(w.edges().map(|(a, b, v)| (self.map[a], self.map[b], v)))
    }
}

/// Glues vertex `b` onto vertex `a`. They must be at edge distance at least
/// 3 so the quotient is again a simplicial complex.
pub fn identify_vertices(
    x: &StratifiedComplex,
    a: usize,
    b: usize,
) -> Result<Identified, ComplexError> {
    let (a, b) = (a.min(b), a.max(b));
    let d = x.distances_from(a)[b];
    if d < 3 {
        return Err(ComplexError::IdentificationTooClose(a, b, d));
    }
    let map: Vec<usize> = (0..x.vertex_count())
        .map(|v| match v.cmp(&b) {
            std::cmp::Ordering::Less => v,
            std::cmp::Ordering::Equal => a,
            std::cmp::Ordering::Greater => v - 1,
        })
        .collect();
    let maximal = x
        .maximal()
        .iter()
        .map(|s| s.vertices().iter().map(|&v| map[v]).collect())
        .collect();
    Ok(Identified {
        maximal,
        vertex_count: x.vertex_count() - 1,
        map,
        node: a,
    })
}

const TOP: Stratum = Stratum { id: 0, cdim: 1 };
const NODE: Stratum = Stratum { id: 1, cdim: 0 };

fn curve_with_node(glued: &Identified) -> Result<StratifiedComplex, ComplexError> {
    StratifiedComplex::new(
        1,
        None,
        glued.vertex_count,
        glued.maximal.clone(),
        vec![TOP, NODE],
        vec![(vec![glued.node], NODE.id)],
    )
}

/// Sphere made from a cylinder over a triangle capped at both ends, with
/// the two cap points glued into a single node. Returns the complex and the
/// node id. Ring 0 is vertices 0..3.
pub fn pinched_torus() -> Result<(StratifiedComplex, usize), ComplexError> {
    let (north, south) = (6, 7);
    let mut maximal = Vec::new();
    for i in 0..3 {
        let j = (i + 1) % 3;
        maximal.push(vec![i, j, 3 + i]);
        maximal.push(vec![j, 3 + i, 3 + j]);
        maximal.push(vec![north, i, j]);
        maximal.push(vec![south, 3 + i, 3 + j]);
    }
    let sphere = StratifiedComplex::manifold(1, None, 8, maximal)?;
    let glued = identify_vertices(&sphere, north, south)?;
    Ok((curve_with_node(&glued)?, glued.node))
}

/// The 5x5 grid torus with vertex 0 glued to the first vertex at distance
/// at least 3 from it.
pub fn nodal_genus1() -> Result<(StratifiedComplex, Identified, StratifiedComplex), ComplexError> {
    let t = grid_torus(5, 5)?;
    let dist = t.distances_from(0);
    let far = (0..t.vertex_count())
        .find(|&v| dist[v] >= 3 && dist[v] != usize::MAX)
        .ok_or_else(|| ComplexError::Unsupported("no vertex far enough to glue".into()))?;
    let glued = identify_vertices(&t, 0, far)?;
    let x = curve_with_node(&glued)?;
    Ok((x, glued, t))
}

/// Suspension with apexes `v` and `v + 1`. For odd-dimensional `x` the
/// complex dimension goes up by one and each marked apex becomes a point
/// stratum; for even-dimensional `x` the apexes stay in the top stratum.
pub fn suspension_marked(
    x: &StratifiedComplex,
    mark_north: bool,
    mark_south: bool,
) -> Result<StratifiedComplex, ComplexError> {
    let v = x.vertex_count();
    let (north, south) = (v, v + 1);
    let mut maximal = Vec::new();
    for s in x.maximal() {
        for apex in [north, south] {
            let mut t = s.vertices().to_vec();
            t.push(apex);
            maximal.push(t);
        }
    }
    let odd = x.dim() % 2 == 1;
    let n = if odd { x.n() + 1 } else { x.n() };
    let mut strata: Vec<Stratum> = x
        .strata()
        .iter()
        .map(|s| Stratum {
            id: s.id,
            cdim: if odd { s.cdim + 1 } else { s.cdim },
        })
        .collect();
    let apex_id = strata.iter().map(|s| s.id).max().unwrap_or(0) + 1;
    let mut marked = Vec::new();
    if odd && (mark_north || mark_south) {
        strata.push(Stratum {
            id: apex_id,
            cdim: 0,
        });
        if mark_north {
            marked.push(north);
        }
        if mark_south {
            marked.push(south);
        }
    }
    let stratum_of = |s: &Simplex| -> u32 {
        let verts = s.vertices();
        if verts.len() == 1 && marked.contains(&verts[0]) {
            return apex_id;
        }
        let base: Vec<usize> = verts.iter().copied().filter(|&u| u < v).collect();
        match Simplex::new(base) {
            Some(face) => x.stratum_of(&face).expect("face of x").id,
            None => x.top_stratum().id,
        }
    };
    StratifiedComplex::with_assignment(n, x.dim() + 1, v + 2, maximal, strata, stratum_of)
}

pub fn suspension(x: &StratifiedComplex) -> Result<StratifiedComplex, ComplexError> {
    suspension_marked(x, true, true)
}

/// Open cone on `x` with apex `v`, a point stratum when `x` is
/// odd-dimensional. Its base is boundary, so it is not a pseudomanifold.
pub fn cone(x: &StratifiedComplex) -> Result<StratifiedComplex, ComplexError> {
    let v = x.vertex_count();
    let maximal: Vec<Vec<usize>> = x
        .maximal()
        .iter()
        .map(|s| {
            let mut t = s.vertices().to_vec();
            t.push(v);
            t
        })
        .collect();
    let odd = x.dim() % 2 == 1;
    let n = if odd { x.n() + 1 } else { x.n() };
    let mut strata: Vec<Stratum> = x
        .strata()
        .iter()
        .map(|s| Stratum {
            id: s.id,
            cdim: if odd { s.cdim + 1 } else { s.cdim },
        })
        .collect();
    let apex_id = strata.iter().map(|s| s.id).max().unwrap_or(0) + 1;
    if odd {
        strata.push(Stratum {
            id: apex_id,
            cdim: 0,
        });
    }
    let stratum_of = |s: &Simplex| -> u32 {
        let verts = s.vertices();
        if odd && verts == [v] {
            return apex_id;
        }
        let base: Vec<usize> = verts.iter().copied().filter(|&u| u < v).collect();
        match Simplex::new(base) {
            Some(face) => x.stratum_of(&face).expect("face of x").id,
            None => x.top_stratum().id,
        }
    };
    StratifiedComplex::with_assignment(n, x.dim() + 1, v + 1, maximal, strata, stratum_of)
}

/// Cone on `x` with its base capped off by a second, unmarked cone.
pub fn capped_cone(x: &StratifiedComplex) -> Result<StratifiedComplex, ComplexError> {
    suspension_marked(x, true, false)
}

/// Monotone lattice paths from `(0,0)` to `(p,q)`.
fn staircases(p: usize, q: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut path = vec![(0, 0)];
    fn rec(p: usize, q: usize, path: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let (i, j) = *path.last().unwrap();
        if i == p && j == q {
            out.push(path.clone());
            return;
        }
        if i < p {
            path.push((i + 1, j));
            rec(p, q, path, out);
            path.pop();
        }
        if j < q {
            path.push((i, j + 1));
            rec(p, q, path, out);
            path.pop();
        }
    }
    rec(p, q, &mut path, &mut out);
    out
}

/// Product with the staircase triangulation; vertex `(a, b)` has id
/// `a * |V(y)| + b`. Strata are products of strata, with complex
/// codimensions added.
pub fn product(
    x: &StratifiedComplex,
    y: &StratifiedComplex,
) -> Result<StratifiedComplex, ComplexError> {
    let vy = y.vertex_count();
    let mut maximal = Vec::new();
    for s in x.maximal() {
        for t in y.maximal() {
            for path in staircases(s.dim(), t.dim()) {
                maximal.push(
                    path.iter()
                        .map(|&(i, j)| s.vertices()[i] * vy + t.vertices()[j])
                        .collect(),
                );
            }
        }
    }
    let dim = x.dim() + y.dim();
    let n = dim / 2;
    let ny = y.strata().len();
    let mut strata = Vec::new();
    let mut id_of = BTreeMap::new();
    for (i, sx) in x.strata().iter().enumerate() {
        for (j, sy) in y.strata().iter().enumerate() {
            let codim = (x.n() - sx.cdim) + (y.n() - sy.cdim);
            let id = (i * ny + j) as u32;
            id_of.insert((sx.id, sy.id), id);
            strata.push(Stratum {
                id,
                cdim: n.checked_sub(codim).ok_or_else(|| {
                    ComplexError::Unsupported("product stratum of negative dimension".into())
                })?,
            });
        }
    }
    let stratum_of = |s: &Simplex| -> u32 {
        let mut xs: Vec<usize> = s.vertices().iter().map(|&v| v / vy).collect();
        let mut ys: Vec<usize> = s.vertices().iter().map(|&v| v % vy).collect();
        xs.sort_unstable();
        xs.dedup();
        ys.sort_unstable();
        ys.dedup();
        let sx = x
            .stratum_of(&Simplex::new(xs).unwrap())
            .expect("projection is a face")
            .id;
        let sy = y
            .stratum_of(&Simplex::new(ys).unwrap())
            .expect("projection is a face")
            .id;
        id_of[&(sx, sy)]
    };
    StratifiedComplex::with_assignment(n, dim, x.vertex_count() * vy, maximal, strata, stratum_of)
}

/// Pulls a cocycle back along the first (`first = true`) or second
/// projection of `product(x, y)`.
pub fn product_pullback(pxy: &StratifiedComplex, vy: usize, w: &Cocycle, first: bool) -> Cocycle {
    let proj = |v: usize| if first { v / vy } else { v % vy };
    Cocycle::from_edges(pxy.simplices(1).iter().map(|e| {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        let (pa, pb) = (proj(a), proj(b));
        (a, b, if pa == pb { 0 } else { w.value(pa, pb) })
    }))
}

/// A nonzero coboundary, `δf` with `f(v) = (v mod 3) - 1`.
pub fn sample_coboundary(x: &StratifiedComplex) -> Cocycle {
    let f: Vec<i64> = (0..x.vertex_count()).map(|v| (v % 3) as i64 - 1).collect();
    Cocycle::coboundary(x, &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{is_full, validate};

    #[test]
    fn face_counts() {
        assert_eq!(circle(3).unwrap().face_counts(), vec![3, 3]);
        assert_eq!(torus().face_counts(), vec![7, 21, 14]);
        assert_eq!(sphere(2).unwrap().face_counts(), vec![4, 6, 4]);
        let (g2, _) = genus_g(2).unwrap();
        assert_eq!(g2.euler_from_faces(), -2);
        assert_eq!(g2.vertex_count(), 11);
        let (p, node) = pinched_torus().unwrap();
        assert_eq!(p.face_counts(), vec![7, 18, 12]);
        assert_eq!(node, 6);
        let (nodal, _, t) = nodal_genus1().unwrap();
        assert_eq!(t.euler_from_faces(), 0);
        assert_eq!(nodal.euler_from_faces(), -1);
    }

    #[test]
    fn builders_validate() {
        let (g3, _) = genus_g(3).unwrap();
        let (p, _) = pinched_torus().unwrap();
        let (nodal, _, _) = nodal_genus1().unwrap();
        let c3 = circle(3).unwrap();
        for x in [
            torus(),
            g3,
            p,
            nodal,
            suspension(&circle(4).unwrap()).unwrap(),
            capped_cone(&circle(6).unwrap()).unwrap(),
            product(&c3, &c3).unwrap(),
            product(&c3, &sphere(2).unwrap()).unwrap(),
            suspension(&product(&c3, &sphere(2).unwrap()).unwrap()).unwrap(),
        ] {
            let r = validate(&x);
            assert!(r.is_valid(), "{:?}", r.first_failure());
            assert!(is_full(&x));
        }
    }

    #[test]
    fn raw_cone_has_boundary() {
        let c = cone(&circle(6).unwrap()).unwrap();
        assert!(
            !validate(&c)
                .get(crate::complex::Flag::Pseudomanifold)
                .passed
        );
        assert!(is_full(&c));
    }

    #[test]
    fn cocycles_are_closed() {
        let t = torus();
        torus_cocycle([0, 1]).check(&t).unwrap();
        torus_cocycle([1, 0]).check(&t).unwrap();
        let (g2, ids) = genus_g(2).unwrap();
        for c in 0..2 {
            genus_cocycle(2, &ids, c, [0, 1]).check(&g2).unwrap();
            genus_cocycle(2, &ids, c, [1, 0]).check(&g2).unwrap();
        }
        let grid = grid_torus(5, 5).unwrap();
        grid_cocycle(&grid, 5, 5, 0).check(&grid).unwrap();
        grid_cocycle(&grid, 5, 5, 1).check(&grid).unwrap();
    }

    #[test]
    fn close_vertices_cannot_be_glued() {
        let t = torus();
        assert!(matches!(
            identify_vertices(&t, 0, 1),
            Err(ComplexError::IdentificationTooClose(0, 1, 1))
        ));
    }

    #[test]
    fn staircase_counts() {
        assert_eq!(staircases(1, 1).len(), 2);
        assert_eq!(staircases(2, 1).len(), 3);
        assert_eq!(staircases(2, 2).len(), 6);
    }
}
