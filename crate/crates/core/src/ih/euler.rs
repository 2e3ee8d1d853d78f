use serde::Serialize;

use super::report::HomologyReport;
use crate::complex::StratifiedComplex;
use crate::error::ComplexError;

/// Euler characteristics and the two sign verdicts `(-1)^n Iχ ≥ 0` and
/// `(-1)^n χ ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub ichi: i64,
    pub chi: i64,
    pub n: usize,
    pub signed_ih: bool,
    pub signed_lci: bool,
}

fn signed(n: usize, v: i64) -> i64 {
    if n.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

pub fn euler_from_reports(ih: &HomologyReport, h: &HomologyReport, n: usize) -> EulerReport {
    let (ichi, chi) = (ih.euler(), h.euler());
    EulerReport {
        ichi,
        chi,
        n,
        signed_ih: signed(n, ichi) >= 0,
        signed_lci: signed(n, chi) >= 0,
    }
}

/// Euler report of a valid, full complex. `Iχ` is computed both from
/// homology and from the ranks of the intersection chain groups, and the
/// two must agree.
pub fn euler(x: &StratifiedComplex) -> Result<EulerReport, ComplexError> {
    let sys = super::build_ic(x)?;
    let ih = HomologyReport::from_degrees(sys.complex().homology());
    let chain_level = sys.complex().euler();
    assert_eq!(
        chain_level,
        ih.euler(),
        "chain-level and homology-level Iχ disagree"
    );
    let h = super::ordinary_homology(x);
    assert_eq!(
        x.euler_from_faces(),
        h.euler(),
        "face count and homology χ disagree"
    );
    Ok(euler_from_reports(&ih, &h, x.n()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_signs() {
        let ih = HomologyReport::free(&[1, 4, 1]);
        let r = euler_from_reports(&ih, &ih, 1);
        assert_eq!((r.ichi, r.chi), (-2, -2));
        assert!(r.signed_ih && r.signed_lci);
        let r = euler_from_reports(
            &HomologyReport::free(&[1, 0, 1]),
            &HomologyReport::free(&[1, 1, 1]),
            1,
        );
        assert!(!r.signed_ih && !r.signed_lci);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"ichi":2,"chi":1,"n":1,"signed_ih":false,"signed_lci":false}"#
        );
    }

    #[test]
    fn circle_euler() {
        let x = StratifiedComplex::manifold(
            0,
            Some(1),
            4,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )
        .unwrap();
        let r = euler(&x).unwrap();
        assert_eq!((r.ichi, r.chi), (0, 0));
    }
}
