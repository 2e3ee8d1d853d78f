use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::algebra::{smith_normal_form, EuclideanRing, IntMatrix, SplitBasis};
use crate::complex::{barycenter_id, Simplex, StratifiedComplex};
use crate::error::{CocycleError, ParseError};

pub const COCYCLE_HEADER: &str = "strathom-cocycle v1";

/// An integer 1-cochain on oriented edges, `value(b, a) = -value(a, b)`.
///
/// Only nonzero values on edges `(a, b)` with `a < b` are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Cocycle {
    values: BTreeMap<(usize, usize), i64>,
}

impl Cocycle {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Values on oriented edges; repeated edges accumulate.
    pub fn from_edges(edges: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut c = Self::zero();
        for (a, b, v) in edges {
            c.add_to(a, b, v);
        }
        c
    }

    fn add_to(&mut self, a: usize, b: usize, v: i64) {
        let (key, v) = if a < b { ((a, b), v) } else { ((b, a), -v) };
        let e = self.values.entry(key).or_insert(0);
        *e += v;
        if *e == 0 {
            self.values.remove(&key);
        }
    }

    /// `δf(a, b) = f(b) - f(a)` on every edge of `x`.
    pub fn coboundary(x: &StratifiedComplex, f: &[i64]) -> Self {
        Self::from_edges(x.simplices(1).iter().map(|e| {
            let (a, b) = (e.vertices()[0], e.vertices()[1]);
            (a, b, f[b] - f[a])
        }))
    }

    pub fn value(&self, a: usize, b: usize) -> i64 {
        if a < b {
            self.values.get(&(a, b)).copied().unwrap_or(0)
        } else {
            -self.values.get(&(b, a)).copied().unwrap_or(0)
        }
    }

    /// Nonzero values as `(a, b, value)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.values.iter().map(|(&(a, b), &v)| (a, b, v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn plus(&self, other: &Cocycle) -> Cocycle {
        let mut c = self.clone();
        for (a, b, v) in other.edges() {
            c.add_to(a, b, v);
        }
        c
    }

    pub fn scaled(&self, k: i64) -> Cocycle {
        Self::from_edges(self.edges().map(|(a, b, v)| (a, b, k * v)))
    }

    pub fn max_abs(&self) -> i64 {
        self.values.values().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Every nonzero edge exists in `x` and the cocycle condition holds on
    /// every triangle.
    pub fn check(&self, x: &StratifiedComplex) -> Result<(), CocycleError> {
        for &(a, b) in self.values.keys() {
            let e = Simplex::new(vec![a, b]).ok_or(CocycleError::UnknownEdge(a, b))?;
            if x.index_of(&e).is_none() {
                return Err(CocycleError::UnknownEdge(a, b));
            }
        }
        for t in x.simplices(2) {
            let [a, b, c] = [t.vertices()[0], t.vertices()[1], t.vertices()[2]];
            let sum = self.value(a, b) + self.value(b, c) - self.value(a, c);
            if sum != 0 {
                return Err(CocycleError::NotClosed(t.clone(), sum));
            }
        }
        Ok(())
    }

    /// Evaluation on a 1-chain given in the edge basis of `x`.
    pub fn evaluate(&self, x: &StratifiedComplex, chain: &[BigInt]) -> BigInt {
        x.simplices(1)
            .iter()
            .zip(chain)
            .map(|(e, c)| c * BigInt::from(self.value(e.vertices()[0], e.vertices()[1])))
            .sum()
    }
}

/// The induced homomorphism `H_1(X) -> Z` of a cocycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleReport {
    /// Values on a basis of the free part of `H_1`.
    pub values: Vec<i64>,
    /// Generator of the image in `Z` (0 when the map is zero).
    pub image_generator: u64,
    pub surjective: bool,
}

/// Checks the cocycle condition and computes the induced map on `H_1`.
pub fn validate_cocycle(x: &StratifiedComplex, w: &Cocycle) -> Result<CocycleReport, CocycleError> {
    w.check(x)?;
    let d1 = x.boundary_matrix(1)?;
    let cycles = SplitBasis::new(&d1);
    let z = cycles.kernel();
    let on_cycles: Vec<BigInt> = z.columns().iter().map(|c| w.evaluate(x, c)).collect();

    // H_1 = Z^k / im(∂_2) in cycle coordinates; U B V = D puts the
    // generators in the columns of U^-1.
    let values = if x.dim() >= 2 && z.cols() > 0 {
        let b = cycles.kernel_projection().mul(&x.boundary_matrix(2)?);
        let snf = smith_normal_form(&b);
        let gens = snf.u.inverse().expect("Smith transforms are unimodular");
        let rank = snf.rank();
        let row = IntMatrix::from_rows(vec![on_cycles]).mul(&gens);
        for j in 0..rank {
            debug_assert!(row.get(0, j).is_zero(), "cocycle is nonzero on a boundary");
        }
        row.row(0)[rank..].to_vec()
    } else {
        on_cycles
    };
    let values: Vec<i64> = values
        .iter()
        .map(|v| v.to_i64().expect("cocycle values fit in i64"))
        .collect();
    let g = values.iter().fold(BigInt::from(0), |acc, v| {
        crate::algebra::gcd(&acc, &BigInt::from(*v))
    });
    let image_generator = g.abs().to_u64().expect("gcd fits in u64");
    Ok(CocycleReport {
        values,
        image_generator,
        surjective: image_generator == 1,
    })
}

/// The cocycle on `barycentric_subdivide(x)` pulled back along the map
/// sending each barycenter `b_σ` to the first vertex of `σ`.
pub fn subdivide_cocycle(x: &StratifiedComplex, sd: &StratifiedComplex, w: &Cocycle) -> Cocycle {
    let mut first = vec![0usize; sd.vertex_count()];
    for d in 0..=x.max_simplex_dim() {
        for s in x.simplices(d) {
            first[barycenter_id(x, s).expect("simplex of x")] = s.vertices()[0];
        }
    }
    Cocycle::from_edges(sd.simplices(1).iter().map(|e| {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        (a, b, w.value(first[a], first[b]))
    }))
}

pub fn emit_cocycle(w: &Cocycle) -> String {
    let mut out = String::from(COCYCLE_HEADER);
    out.push('\n');
    for (a, b, v) in w.edges() {
        out.push_str(&format!("edge {a} {b} {v}\n"));
    }
    out
}

/// Parses a cocycle document. Edges may be given in either orientation;
/// an edge may appear only once.
pub fn parse_cocycle(text: &str) -> Result<Cocycle, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, l)) if l == COCYCLE_HEADER => {}
        _ => return Err(ParseError::MissingHeader(COCYCLE_HEADER)),
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut c = Cocycle::zero();
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let syntax = |message: String| ParseError::Syntax { line, message };
        let ["edge", a, b, v] = parts.as_slice() else {
            return Err(syntax(format!("expected `edge a b value`, found `{l}`")));
        };
        let a: usize = a.parse().map_err(|_| syntax(format!("bad vertex `{a}`")))?;
        let b: usize = b.parse().map_err(|_| syntax(format!("bad vertex `{b}`")))?;
        let v: i64 = v.parse().map_err(|_| syntax(format!("bad value `{v}`")))?;
        if a == b {
            return Err(syntax(format!("degenerate edge {a} {b}")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(syntax(format!("edge {a} {b} given twice")));
        }
        c.add_to(a, b, v);
    }
    Ok(c)
}
