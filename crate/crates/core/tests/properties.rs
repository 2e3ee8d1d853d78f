use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use strathom::algebra::{
    integer_kernel, invariant_factors, rank_over_fractions, smith_normal_form, EuclideanRing,
    ExactMatrix, IntMatrix, LaurentMatrix, LaurentPoly, SplitBasis,
};
use strathom::catalog::{build, CatalogEntry};
use strathom::complex::{emit_complex, parse_complex};
use strathom::ih::intersection_homology;
use strathom::local::{
    emit_cocycle, parse_cocycle, twisted_boundary, twisted_ih, twisted_ih_with_tree, Cocycle,
    SpanningTree,
};

fn int_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r).prop_map(|rows| {
            IntMatrix::from_rows(
                rows.into_iter()
                    .map(|row| row.into_iter().map(BigInt::from).collect())
                    .collect(),
            )
        })
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-2i64..=2, -3i64..=3), 0..=3)
        .prop_map(|terms| LaurentPoly::from_int_terms(&terms))
}

fn laurent_matrix(max_dim: usize) -> impl Strategy<Value = LaurentMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(laurent(), c), r)
            .prop_map(LaurentMatrix::from_rows)
    })
}

fn check_smith<R: EuclideanRing>(m: &strathom::algebra::Matrix<R>) {
    let s = smith_normal_form(m);
    assert_eq!(s.u.mul(m).mul(&s.v), s.d);
    assert!(s.d.is_diagonal());
    let diag = s.d.diagonal();
    let nonzero = diag.iter().take_while(|x| !x.is_zero()).count();
    assert!(
        diag[nonzero..].iter().all(|x| x.is_zero()),
        "zeros trail the factors"
    );
    for w in diag[..nonzero].windows(2) {
        assert!(w[0].divides(&w[1]), "{} does not divide {}", w[0], w[1]);
    }
    for x in &diag[..nonzero] {
        assert_eq!(&x.normalized(), x);
    }
    assert!(s.u.determinant().is_unit());
    assert!(s.v.determinant().is_unit());
    assert_eq!(invariant_factors(m), s.factors());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_over_integers(m in int_matrix(5, 9)) {
        check_smith(&m);
    }

    #[test]
    fn smith_over_laurent(m in laurent_matrix(3)) {
        check_smith(&m);
    }

    #[test]
    fn kernel_basis_is_saturated(m in int_matrix(5, 4), coeffs in prop::collection::vec(-5i64..=5, 5)) {
        let split = SplitBasis::new(&m);
        let k = split.kernel();
        prop_assert!(m.mul(&k).is_zero());
        // v is unimodular, so its kernel columns span a saturated lattice.
        prop_assert_eq!(split.v.mul(&split.v_inv), IntMatrix::identity(m.cols()));
        let c: Vec<BigInt> = coeffs.iter().take(k.cols()).map(|&v| BigInt::from(v)).collect();
        let y = k.mul_vec(&c);
        prop_assert_eq!(split.kernel_coords(&y), Some(c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn integer_kernel_has_no_p_divisible_vectors(m in int_matrix(5, 4), coeffs in prop::collection::vec(-3i64..=3, 5)) {
        let basis = integer_kernel(&m);
        let k = IntMatrix::from_columns(m.cols(), &basis);
        let split = SplitBasis::new(&m);
        for p in [2i64, 3, 5, 7] {
            let p = BigInt::from(p);
            for v in &basis {
                prop_assert!(!v.iter().all(|x| (x % &p) == BigInt::from(0)), "basis vector divisible by {}", p);
            }
            // A combination divisible by p, divided by p, is still in the lattice.
            let c: Vec<BigInt> = coeffs.iter().take(basis.len()).map(|&v| BigInt::from(v) * &p).collect();
            let y: Vec<BigInt> = k.mul_vec(&c).into_iter().map(|x| x / &p).collect();
            prop_assert!(split.kernel_coords(&y).is_some());
        }
    }

    #[test]
    fn rank_plus_nullity_is_width(m in int_matrix(6, 3)) {
        let cols = m.cols();
        let nullity = integer_kernel(&m).len();
        prop_assert_eq!(rank_over_fractions(&ExactMatrix::Integer(m)) + nullity, cols);
    }
}

fn entries() -> &'static [CatalogEntry] {
    static E: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    E.get_or_init(|| {
        [
            "circle(4)",
            "torus",
            "genus_g(2)",
            "pinched_torus",
            "nodal_genus1",
            "product(circle(3),circle(3))",
        ]
        .iter()
        .map(|n| build(n).unwrap())
        .collect()
    })
}

/// An entry and a random integer combination of its named cocycles.
fn entry_and_cocycle() -> impl Strategy<Value = (usize, Cocycle, Vec<i64>)> {
    (
        0..entries().len(),
        prop::collection::vec(-2i64..=2, 8),
        prop::collection::vec(-2i64..=2, 40),
    )
        .prop_map(|(i, coeffs, f)| {
            let e = &entries()[i];
            let w = e
                .cocycles
                .iter()
                .zip(&coeffs)
                .fold(Cocycle::zero(), |acc, (c, &k)| {
                    acc.plus(&c.cocycle.scaled(k))
                });
            (i, w, f[..e.complex.vertex_count().min(40)].to_vec())
        })
}

fn padded(f: &[i64], n: usize) -> Vec<i64> {
    (0..n).map(|v| f.get(v).copied().unwrap_or(0)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn twisted_boundary_squares_to_zero((i, w, _) in entry_and_cocycle()) {
        let x = &entries()[i].complex;
        for d in 2..=x.dim() {
            let a = twisted_boundary(x, &w, d - 1).unwrap();
            let b = twisted_boundary(x, &w, d).unwrap();
            prop_assert!(a.mul(&b).is_zero());
        }
    }

    #[test]
    fn twisted_boundary_at_one_is_the_integer_boundary((i, w, _) in entry_and_cocycle()) {
        let x = &entries()[i].complex;
        for d in 1..=x.dim() {
            let at_one = twisted_boundary(x, &w, d).unwrap().specialize(&<BigRational as One>::one());
            prop_assert_eq!(at_one, x.boundary_matrix(d).unwrap().to_rational());
        }
    }

    #[test]
    fn cohomologous_cocycles_give_equal_reports((i, w, f) in entry_and_cocycle()) {
        let x = &entries()[i].complex;
        let shifted = w.plus(&Cocycle::coboundary(x, &padded(&f, x.vertex_count())));
        prop_assert_eq!(twisted_ih(x, &w).unwrap(), twisted_ih(x, &shifted).unwrap());
    }

    #[test]
    fn gauge_tree_does_not_matter((i, w, _) in entry_and_cocycle()) {
        let x = &entries()[i].complex;
        let bfs = twisted_ih_with_tree(x, &w, &SpanningTree::bfs(x)).unwrap();
        let dfs = twisted_ih_with_tree(x, &w, &SpanningTree::dfs(x)).unwrap();
        prop_assert_eq!(bfs, dfs);
    }

    #[test]
    fn twisted_ranks_sum_to_ichi((i, w, _) in entry_and_cocycle()) {
        let x = &entries()[i].complex;
        prop_assert_eq!(twisted_ih(x, &w).unwrap().euler(), intersection_homology(x).unwrap().euler());
    }

    #[test]
    fn cocycle_text_round_trip((_, w, _) in entry_and_cocycle()) {
        prop_assert_eq!(parse_cocycle(&emit_cocycle(&w)).unwrap(), w);
    }

    #[test]
    fn scaling_by_minus_one_inverts_t((i, w, _) in entry_and_cocycle()) {
        // ω and -ω give reports related by t -> t^-1; ranks agree.
        let x = &entries()[i].complex;
        prop_assert_eq!(twisted_ih(x, &w).unwrap().ranks(), twisted_ih(x, &w.scaled(-1)).unwrap().ranks());
    }
}

#[test]
fn complex_text_round_trip() {
    for e in entries() {
        let text = emit_complex(&e.complex);
        let back = parse_complex(&text).unwrap();
        assert_eq!(emit_complex(&back), text);
        assert_eq!(back.face_counts(), e.complex.face_counts());
    }
}
