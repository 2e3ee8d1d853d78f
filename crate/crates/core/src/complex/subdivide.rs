use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::simplex::Simplex;
use super::stratified::StratifiedComplex;
use crate::algebra::IntMatrix;
use crate::error::ComplexError;

/// First barycenter id of each dimension. The subdivision has one vertex per
/// simplex of `x`, numbered by dimension and then lexicographically, so
/// original vertices keep their ids when every vertex is used.
pub(crate) fn barycenter_offsets(x: &StratifiedComplex) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(x.max_simplex_dim() + 1);
    let mut acc = 0;
    for d in 0..=x.max_simplex_dim() {
        offsets.push(acc);
        acc += x.count(d);
    }
    offsets
}

fn barycenter(x: &StratifiedComplex, offsets: &[usize], s: &Simplex) -> usize {
    offsets[s.dim()] + x.index_of(s).expect("face of the complex")
}

/// Vertex id of the barycenter of `s` in `barycentric_subdivide(x)`.
pub fn barycenter_id(x: &StratifiedComplex, s: &Simplex) -> Option<usize> {
    let offsets = barycenter_offsets(x);
    Some(offsets[s.dim()] + x.index_of(s)?)
}

pub fn barycentric_subdivide(x: &StratifiedComplex) -> StratifiedComplex {
    let offsets = barycenter_offsets(x);
    let total: usize = (0..=x.max_simplex_dim()).map(|d| x.count(d)).sum();
    // Barycenter id back to (dim, index) in x.
    let mut origin = Vec::with_capacity(total);
    for d in 0..=x.max_simplex_dim() {
        for i in 0..x.count(d) {
            origin.push((d, i));
        }
    }

    let mut maximal = Vec::new();
    for top in x.maximal() {
        let verts = top.vertices();
        for perm in permutations(verts.len()) {
            let mut flag = Vec::with_capacity(verts.len());
            let mut prefix: Vec<usize> = Vec::with_capacity(verts.len());
            for &p in &perm {
                prefix.push(verts[p]);
                let mut sorted = prefix.clone();
                sorted.sort_unstable();
                flag.push(barycenter(x, &offsets, &Simplex::from_sorted(sorted)));
            }
            maximal.push(flag);
        }
    }

    // An open flag simplex lies in the open simplex of its largest member,
    // which has the largest barycenter id.
    let stratum_of = |s: &Simplex| -> u32 {
        let top_member = *s.vertices().last().unwrap();
        let (d, i) = origin[top_member];
        x.strata()[x.stratum_index(d, i)].id
    };
    StratifiedComplex::with_assignment(
        x.n(),
        x.dim(),
        total,
        maximal,
        x.strata().to_vec(),
        stratum_of,
    )
    .expect("subdivision of a valid complex is well formed")
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Sign of the permutation sorting `seq` (entries distinct).
fn sort_sign(seq: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Subdivision chain map `Sd: C_i(x) -> C_i(sd)`, given by the cone
/// recursion `Sd(σ) = b_σ * Sd(∂σ)`.
pub fn subdivision_chain_map(
    x: &StratifiedComplex,
    sd: &StratifiedComplex,
    i: usize,
) -> Result<IntMatrix, ComplexError> {
    if i > x.dim() {
        return Err(ComplexError::DegreeOutOfRange {
            degree: i,
            max: x.dim(),
        });
    }
    let offsets = barycenter_offsets(x);
    let mut m = IntMatrix::zeros(sd.count(i), x.count(i));
    for (c, s) in x.simplices(i).iter().enumerate() {
        for (seq, coeff) in sd_ordered(x, &offsets, s) {
            let sign = sort_sign(&seq);
            let mut sorted = seq.clone();
            sorted.sort_unstable();
            let r = sd
                .index_of(&Simplex::from_sorted(sorted))
                .ok_or_else(|| ComplexError::Invalid("subdivision does not match".into()))?;
            let v = m.get(r, c) + BigInt::from(sign * coeff);
            m.set(r, c, v);
        }
    }
    Ok(m)
}

/// `Sd(σ)` as ordered vertex sequences of the subdivision with coefficients.
fn sd_ordered(x: &StratifiedComplex, offsets: &[usize], s: &Simplex) -> BTreeMap<Vec<usize>, i64> {
    let b = barycenter(x, offsets, s);
    let mut out = BTreeMap::new();
    if s.dim() == 0 {
        out.insert(vec![b], 1);
        return out;
    }
    for j in 0..=s.dim() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for (mut seq, c) in sd_ordered(x, offsets, &s.facet(j)) {
            seq.insert(0, b);
            *out.entry(seq).or_insert(0) += sign * c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}
