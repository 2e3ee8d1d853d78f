use num_rational::BigRational;
use serde::Serialize;

use super::allowable::AllowableChainSystem;
use super::chain::ChainComplex;
use super::report::HomologyReport;
use crate::algebra::{kernel_basis, rank, EuclideanRing, Matrix, SplitBasis};
use crate::complex::{star_neighborhood, StratifiedComplex, Subcomplex};
use crate::error::ComplexError;

/// `IC(U) ⊆ IC(X)` for `U` the open star of a full subcomplex `A`, and the
/// quotient `IC(X) / IC(U)`.
///
/// A chain of `X` has its closed support inside the open star exactly when
/// every simplex it uses lies in `A`, so `IC(U) = IC(X) ∩ C(A)`.
struct Pair<R> {
    sub: Vec<SplitBasis<R>>,
    sub_complex: ChainComplex<R>,
    quotient: ChainComplex<R>,
}

impl<R: EuclideanRing> Pair<R> {
    fn new(sys: &AllowableChainSystem<R>, x: &StratifiedComplex, a: &Subcomplex) -> Self {
        let whole = sys.complex();
        let mut sub = Vec::with_capacity(whole.len());
        for i in 0..whole.len() {
            let outside: Vec<usize> = (0..x.count(i)).filter(|&s| !a.contains(i, s)).collect();
            let basis = sys.basis(i);
            let cols: Vec<usize> = (0..basis.cols()).collect();
            sub.push(SplitBasis::new(&basis.select(&outside, &cols)));
        }
        let mut sub_b = vec![Matrix::zeros(0, sub[0].kernel_dim())];
        let mut quot_b = vec![Matrix::zeros(0, sub[0].rank)];
        for i in 1..whole.len() {
            let d = whole.boundary(i);
            sub_b.push(sub[i - 1].kernel_projection().mul(&d.mul(&sub[i].kernel())));
            quot_b.push(
                sub[i - 1]
                    .quotient_projection()
                    .mul(&d.mul(&sub[i].complement())),
            );
        }
        Self {
            sub,
            sub_complex: ChainComplex::new(sub_b),
            quotient: ChainComplex::new(quot_b),
        }
    }
}

/// Intersection homology of `X` relative to the open star of `A`.
pub fn relative_ih(x: &StratifiedComplex, a: &Subcomplex) -> Result<HomologyReport, ComplexError> {
    star_neighborhood(x, a)?;
    let sys = super::build_ic(x)?;
    let pair = Pair::new(&sys, x, a);
    Ok(HomologyReport::from_degrees(pair.quotient.homology()))
}

/// One group in the long exact sequence of a pair, with the ranks of the
/// maps into and out of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesNode {
    /// `"U"`, `"X"` or `"X,U"`.
    pub space: &'static str,
    pub degree: usize,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    /// The composite of the incoming and outgoing maps vanishes.
    pub composition_zero: bool,
    /// `dim = rank_in + rank_out`, i.e. image equals kernel.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesReport {
    /// From `IH_top(U)` down to `IH_0(X,U)`.
    pub nodes: Vec<LesNode>,
}

impl LesReport {
    pub fn is_exact(&self) -> bool {
        self.nodes.iter().all(|n| n.exact && n.composition_zero)
    }
}

/// The long exact sequence `IH_i(U) -> IH_i(X) -> IH_i(X,U) -> IH_{i-1}(U)`
/// over `Q`, with every map computed at chain level.
pub fn long_exact_sequence(
    x: &StratifiedComplex,
    a: &Subcomplex,
) -> Result<LesReport, ComplexError> {
    star_neighborhood(x, a)?;
    super::require_valid(x)?;
    let sys = AllowableChainSystem::<BigRational>::from_boundaries(x, |i| {
        x.boundary_matrix(i).expect("degree in range").to_rational()
    });
    let pair = Pair::new(&sys, x, a);
    let (u, whole, rel) = (&pair.sub_complex, sys.complex(), &pair.quotient);
    let top = whole.len();

    // Chain-level maps in each degree.
    let f = |i: usize| pair.sub[i].kernel();
    let g = |i: usize| pair.sub[i].quotient_projection();
    let delta = |i: usize| {
        pair.sub[i - 1]
            .kernel_projection()
            .mul(&whole.boundary(i).mul(&pair.sub[i].complement()))
    };

    let h_u: Vec<usize> = u.homology().into_iter().map(|(r, _)| r).collect();
    let h_x: Vec<usize> = whole.homology().into_iter().map(|(r, _)| r).collect();
    let h_rel: Vec<usize> = rel.homology().into_iter().map(|(r, _)| r).collect();

    let mut nodes = Vec::with_capacity(3 * top);
    for i in (0..top).rev() {
        // U_i: in from δ_{i+1}, out through f_i.
        let (rank_in, comp) = if i + 1 < top {
            let d = delta(i + 1);
            (
                induced_rank(&d, rel, i + 1, u, i),
                induced_rank(&f(i).mul(&d), rel, i + 1, whole, i),
            )
        } else {
            (0, 0)
        };
        let rank_out = induced_rank(&f(i), u, i, whole, i);
        nodes.push(node("U", i, h_u[i], rank_in, rank_out, comp));

        // X_i: in through f_i, out through g_i.
        let comp = induced_rank(&g(i).mul(&f(i)), u, i, rel, i);
        let rank_out_x = induced_rank(&g(i), whole, i, rel, i);
        nodes.push(node("X", i, h_x[i], rank_out, rank_out_x, comp));

        // (X,U)_i: in through g_i, out through δ_i.
        let (rank_out_rel, comp) = if i > 0 {
            let d = delta(i);
            (
                induced_rank(&d, rel, i, u, i - 1),
                induced_rank(&d.mul(&g(i)), whole, i, u, i - 1),
            )
        } else {
            (0, 0)
        };
        nodes.push(node("X,U", i, h_rel[i], rank_out_x, rank_out_rel, comp));
    }
    Ok(LesReport { nodes })
}

fn node(
    space: &'static str,
    degree: usize,
    dim: usize,
    rank_in: usize,
    rank_out: usize,
    comp: usize,
) -> LesNode {
    LesNode {
        space,
        degree,
        dim,
        rank_in,
        rank_out,
        composition_zero: comp == 0,
        exact: dim == rank_in + rank_out,
    }
}

/// Rank of the map on homology induced by a chain-level map `m` from
/// degree `i` of `src` to degree `j` of `tgt`, defined on cycles.
fn induced_rank<R: EuclideanRing>(
    m: &Matrix<R>,
    src: &ChainComplex<R>,
    i: usize,
    tgt: &ChainComplex<R>,
    j: usize,
) -> usize {
    let cycles = kernel_basis(src.boundary(i));
    if cycles.cols() == 0 {
        return 0;
    }
    let image = m.mul(&cycles);
    let boundaries = if j + 1 < tgt.len() {
        tgt.boundary(j + 1).clone()
    } else {
        Matrix::zeros(tgt.rank(j), 0)
    };
    let mut joined = Matrix::zeros(image.rows(), image.cols() + boundaries.cols());
    for r in 0..image.rows() {
        for c in 0..image.cols() {
            joined.set(r, c, image.get(r, c).clone());
        }
        for c in 0..boundaries.cols() {
            joined.set(r, image.cols() + c, boundaries.get(r, c).clone());
        }
    }
    rank(&joined) - rank(&boundaries)
}

#[cfg(test)]
fn relative_complex(
    x: &StratifiedComplex,
    a: &Subcomplex,
) -> Result<ChainComplex<num_bigint::BigInt>, ComplexError> {
    let sys = super::build_ic(x)?;
    Ok(Pair::new(&sys, x, a).quotient)
}
