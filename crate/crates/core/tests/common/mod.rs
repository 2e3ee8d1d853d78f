//! Independent reference computations. Nothing here goes through the
//! crate's matrices, normal forms or allowability code: boundaries are
//! rebuilt from the simplex lists and everything reduces to ranks of
//! matrices over a field.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use strathom::complex::{Simplex, StratifiedComplex};
use strathom::local::Cocycle;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rank by Gaussian elimination over `Q`.
pub fn rank_q(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for j in c..cols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Rank over `F_p`.
pub fn rank_mod(m: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = m
        .iter()
        .map(|row| row.iter().map(|v| v.rem_euclid(p)).collect())
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let inv = |a: i64| -> i64 {
        let (mut base, mut e, mut acc) = (a, p - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let s = inv(m[r][c]);
        for j in c..cols {
            m[r][j] = m[r][j] * s % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in c..cols {
                    m[i][j] = (m[i][j] - f * m[r][j]).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}

/// All `i`-simplices, rebuilt from the maximal simplices.
pub fn simplices(x: &StratifiedComplex, i: usize) -> Vec<Vec<usize>> {
    let mut out = std::collections::BTreeSet::new();
    for s in x.maximal() {
        let v = s.vertices();
        let k = v.len();
        for mask in 1u64..(1 << k) {
            if mask.count_ones() as usize == i + 1 {
                out.insert(
                    (0..k)
                        .filter(|b| mask & (1 << b) != 0)
                        .map(|b| v[b])
                        .collect::<Vec<_>>(),
                );
            }
        }
    }
    out.into_iter().collect()
}

/// Twisted boundary with every simplex based at its first vertex and `t`
/// specialized to `t`: dropping vertex 0 moves the base along
/// `(v0, v1)` and picks up `t^{ω(v0, v1)}`.
pub fn boundary_at(
    x: &StratifiedComplex,
    w: &Cocycle,
    i: usize,
    t: &BigRational,
) -> Vec<Vec<BigRational>> {
    let rows = simplices(x, i - 1);
    let cols = simplices(x, i);
    let index: std::collections::HashMap<&Vec<usize>, usize> =
        rows.iter().enumerate().map(|(k, s)| (s, k)).collect();
    let mut m = vec![vec![BigRational::zero(); cols.len()]; rows.len()];
    for (c, s) in cols.iter().enumerate() {
        for j in 0..s.len() {
            let mut face = s.clone();
            face.remove(j);
            let sign = if j % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            let coeff = if j == 0 {
                let e = w.value(s[0], s[1]);
                let base = if e >= 0 { t.clone() } else { t.recip() };
                sign * num_traits::pow(base, e.unsigned_abs() as usize)
            } else {
                sign
            };
            m[index[&face]][c] += coeff;
        }
    }
    m
}

/// Middle-perversity allowability, straight from the definition.
pub fn allowable(x: &StratifiedComplex, i: usize) -> Vec<bool> {
    simplices(x, i)
        .iter()
        .map(|s| {
            let sx = Simplex::new(s.clone()).unwrap();
            x.strata().iter().filter(|st| st.cdim < x.n()).all(|st| {
                let codim = (x.n() - st.cdim) as i64;
                // Missing the stratum entirely is always allowed.
                sx.faces()
                    .filter(|f| x.stratum_of(f).unwrap().id == st.id)
                    .map(|f| f.dim() as i64)
                    .max()
                    .is_none_or(|top_face| top_face < i as i64 - codim)
            })
        })
        .collect()
}

fn select_cols(m: &[Vec<BigRational>], cols: &[usize]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
        .collect()
}

fn select_rows(m: &[Vec<BigRational>], rows: &[usize]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|&r| m[r].clone()).collect()
}

/// `dim IH_i = a_i - rank M_i - rank M_{i+1} + rank A_{i+1}` with `M_i` the
/// boundary on allowable columns and `A_i` its non-allowable rows. Each
/// rank is the largest over the sample values of `t`, since specializing
/// can only lower a rank.
fn ih_ranks_sampled(x: &StratifiedComplex, w: &Cocycle, samples: &[BigRational]) -> Vec<usize> {
    let top = x.dim();
    let mask: Vec<Vec<bool>> = (0..=top).map(|i| allowable(x, i)).collect();
    let pick = |i: usize, want: bool| -> Vec<usize> {
        (0..mask[i].len()).filter(|&k| mask[i][k] == want).collect()
    };
    let mut rank_m = vec![0; top + 2];
    let mut rank_a = vec![0; top + 2];
    for i in 1..=top {
        for t in samples {
            let m = select_cols(&boundary_at(x, w, i, t), &pick(i, true));
            rank_a[i] = rank_a[i].max(rank_q(select_rows(&m, &pick(i - 1, false))));
            rank_m[i] = rank_m[i].max(rank_q(m));
        }
    }
    (0..=top)
        .map(|i| pick(i, true).len() + rank_a[i + 1] - rank_m[i] - rank_m[i + 1])
        .collect()
}

/// Twisted intersection homology ranks over `Q(t)`.
pub fn twisted_ih_ranks(x: &StratifiedComplex, w: &Cocycle) -> Vec<usize> {
    ih_ranks_sampled(x, w, &[q(2, 1), q(-3, 2), q(7, 5)])
}

pub fn ih_ranks(x: &StratifiedComplex) -> Vec<usize> {
    ih_ranks_sampled(x, &Cocycle::zero(), &[BigRational::one()])
}

/// Ordinary homology ranks over `Q`.
pub fn h_ranks(x: &StratifiedComplex) -> Vec<usize> {
    let top = x.dim();
    let one = BigRational::one();
    let mut rank = vec![0; top + 2];
    for i in 1..=top {
        rank[i] = rank_q(boundary_at(x, &Cocycle::zero(), i, &one));
    }
    (0..=top)
        .map(|i| simplices(x, i).len() - rank[i] - rank[i + 1])
        .collect()
}

/// Ordinary homology dimensions over `F_p`.
pub fn h_ranks_mod(x: &StratifiedComplex, p: i64) -> Vec<usize> {
    let top = x.dim();
    let one = BigRational::one();
    let mut rank = vec![0; top + 2];
    for i in 1..=top {
        let m: Vec<Vec<i64>> = boundary_at(x, &Cocycle::zero(), i, &one)
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| i64::try_from(v.to_integer()).unwrap())
                    .collect()
            })
            .collect();
        rank[i] = rank_mod(&m, p);
    }
    (0..=top)
        .map(|i| simplices(x, i).len() - rank[i] - rank[i + 1])
        .collect()
}
