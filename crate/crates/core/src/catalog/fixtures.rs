//! Expected reports for catalog entries, each with where the numbers come
//! from.

use super::name::{Arg, EntryName};
use crate::algebra::LaurentPoly;
use crate::ih::{euler_from_reports, EulerReport, HomologyReport};
use crate::local::TwistedIHReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Holds by definition, e.g. IH = H on a manifold.
    ByDefinition,
    /// Worked out by hand from a classical invariant, named here.
    Classical(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected<T> {
    pub value: T,
    pub provenance: Provenance,
}

fn expect<T>(value: T, provenance: Provenance) -> Option<Expected<T>> {
    Some(Expected { value, provenance })
}

/// Expected twisted intersection homology. Torsion is only pinned down
/// where it is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedFixture {
    pub ranks: Vec<usize>,
    pub torsion: Option<Vec<Vec<LaurentPoly>>>,
}

impl TwistedFixture {
    pub fn matches(&self, r: &TwistedIHReport) -> bool {
        if r.ranks() != self.ranks {
            return false;
        }
        match &self.torsion {
            None => true,
            Some(t) => r.degrees.iter().map(|d| &d.torsion).eq(t.iter()),
        }
    }

    pub fn report(&self) -> Option<TwistedIHReport> {
        let torsion = self.torsion.as_ref()?;
        Some(TwistedIHReport::from_degrees(
            self.ranks
                .iter()
                .copied()
                .zip(torsion.iter().cloned())
                .collect(),
        ))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Fixture {
    pub ih: Option<Expected<HomologyReport>>,
    pub homology: Option<Expected<HomologyReport>>,
    pub euler: Option<Expected<EulerReport>>,
    /// Keyed by cocycle name.
    pub twisted: Vec<(String, Expected<TwistedFixture>)>,
}

fn t_minus_1() -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(1, 1), (0, -1)])
}

fn free_twisted(ranks: &[usize]) -> TwistedFixture {
    TwistedFixture {
        ranks: ranks.to_vec(),
        torsion: Some(vec![Vec::new(); ranks.len()]),
    }
}

/// Cover of a torus along a primitive class is a cylinder.
fn cylinder_twisted() -> TwistedFixture {
    TwistedFixture {
        ranks: vec![0, 0, 0],
        torsion: Some(vec![vec![t_minus_1()], vec![t_minus_1()], vec![]]),
    }
}

fn with_euler(mut f: Fixture, n: usize, provenance: Provenance) -> Fixture {
    if let (Some(ih), Some(h)) = (&f.ih, &f.homology) {
        f.euler = expect(euler_from_reports(&ih.value, &h.value, n), provenance);
    }
    f
}

fn manifold(ranks: &[usize], n: usize, source: &'static str) -> Fixture {
    let h = HomologyReport::free(ranks);
    let f = Fixture {
        ih: expect(h.clone(), Provenance::ByDefinition),
        homology: expect(h, Provenance::Classical(source)),
        ..Fixture::default()
    };
    with_euler(f, n, Provenance::Classical(source))
}

fn twisted(
    name: &str,
    value: TwistedFixture,
    provenance: Provenance,
) -> (String, Expected<TwistedFixture>) {
    (name.to_string(), Expected { value, provenance })
}

fn sphere_ranks(d: usize) -> Vec<usize> {
    let mut r = vec![0; d + 1];
    r[0] = 1;
    r[d] = 1;
    r
}

fn circle_k(s: &EntryName) -> Option<usize> {
    match (s.name.as_str(), s.args.as_slice()) {
        ("circle", [Arg::Int(k)]) => Some(*k),
        ("circle", []) => Some(3),
        _ => None,
    }
}

fn is_circle(a: &Arg) -> bool {
    matches!(a, Arg::Space(s) if circle_k(s).is_some())
}

fn is_circle_times_2_sphere(s: &EntryName) -> bool {
    match (s.name.as_str(), s.args.as_slice()) {
        ("product", [a, Arg::Space(b)]) => {
            is_circle(a) && b.name == "sphere" && matches!(b.args.as_slice(), [] | [Arg::Int(2)])
        }
        _ => false,
    }
}

/// Expected reports for `key`; empty when nothing is recorded.
pub fn fixtures(key: &EntryName) -> Fixture {
    let cover = Provenance::Classical("infinite cyclic cover");
    match (key.name.as_str(), key.args.as_slice()) {
        ("circle", _) => {
            let mut f = manifold(&[1, 1], 0, "circle");
            f.twisted = vec![
                twisted(
                    "cut",
                    TwistedFixture {
                        ranks: vec![0, 0],
                        torsion: Some(vec![vec![t_minus_1()], vec![]]),
                    },
                    Provenance::Classical("universal cover is a line"),
                ),
                twisted(
                    "double",
                    TwistedFixture {
                        ranks: vec![0, 0],
                        torsion: Some(vec![
                            vec![LaurentPoly::from_int_terms(&[(2, 1), (0, -1)])],
                            vec![],
                        ]),
                    },
                    Provenance::Classical("cover is two lines swapped by t"),
                ),
            ];
            f
        }
        ("sphere", args) => {
            let d = match args {
                [Arg::Int(d)] => *d,
                _ => 2,
            };
            let mut f = manifold(&sphere_ranks(d), d / 2, "sphere");
            f.twisted = vec![twisted(
                "zero",
                free_twisted(&sphere_ranks(d)),
                Provenance::ByDefinition,
            )];
            f
        }
        ("torus", []) => {
            let mut f = manifold(&[1, 2, 1], 1, "torus");
            f.twisted = vec![
                twisted("meridian", cylinder_twisted(), cover),
                twisted("longitude", cylinder_twisted(), cover),
                twisted(
                    "coboundary",
                    free_twisted(&[1, 2, 1]),
                    Provenance::ByDefinition,
                ),
            ];
            f
        }
        ("product", [a, b]) if is_circle(a) && is_circle(b) => {
            let mut f = manifold(&[1, 2, 1], 1, "Kunneth formula");
            f.twisted = vec![
                twisted("pr1.cut", cylinder_twisted(), cover),
                twisted("pr2.cut", cylinder_twisted(), cover),
            ];
            f
        }
        ("genus_g", args) => {
            let g = match args {
                [Arg::Int(g)] => *g,
                _ => 2,
            };
            let mut f = manifold(&[1, 2 * g, 1], 1, "surface classification");
            f.twisted = vec![twisted(
                "meridian_1",
                TwistedFixture {
                    ranks: vec![0, 2 * g - 2, 0],
                    torsion: None,
                },
                Provenance::Classical("Euler characteristic of the cyclic cover"),
            )];
            f
        }
        ("pinched_torus", []) => {
            let norm = Provenance::Classical("normalization is a sphere with two points glued");
            let f = Fixture {
                ih: expect(HomologyReport::free(&[1, 0, 1]), norm),
                homology: expect(
                    HomologyReport::free(&[1, 1, 1]),
                    Provenance::Classical("sphere with two points glued"),
                ),
                euler: None,
                twisted: vec![twisted(
                    "node_loop",
                    free_twisted(&[1, 0, 1]),
                    Provenance::Classical("local system is trivial on the normalization"),
                )],
            };
            with_euler(f, 1, norm)
        }
        ("nodal_genus1", []) => {
            let norm = Provenance::Classical("normalization is a torus");
            let f = Fixture {
                ih: expect(HomologyReport::free(&[1, 2, 1]), norm),
                homology: expect(
                    HomologyReport::free(&[1, 3, 1]),
                    Provenance::Classical("torus with two points glued"),
                ),
                euler: None,
                twisted: vec![
                    twisted("meridian", cylinder_twisted(), norm),
                    twisted(
                        "node_loop",
                        free_twisted(&[1, 2, 1]),
                        Provenance::Classical("local system is trivial on the normalization"),
                    ),
                ],
            };
            with_euler(f, 1, norm)
        }
        ("suspension" | "cone", [a]) if is_circle(a) => {
            let mut f = manifold(&[1, 0, 1], 1, "sphere with marked points");
            f.ih.as_mut().unwrap().provenance =
                Provenance::Classical("link of each apex is a circle");
            f.twisted = vec![twisted(
                "zero",
                free_twisted(&[1, 0, 1]),
                Provenance::ByDefinition,
            )];
            f
        }
        ("suspension", [Arg::Space(inner)]) if is_circle_times_2_sphere(inner) => {
            let f = Fixture {
                ih: expect(
                    HomologyReport::free(&[1, 1, 0, 1, 1]),
                    Provenance::Classical("truncation of the link homology at the apexes"),
                ),
                homology: expect(
                    HomologyReport::free(&[1, 0, 1, 1, 1]),
                    Provenance::Classical("suspension isomorphism"),
                ),
                euler: None,
                twisted: Vec::new(),
            };
            with_euler(
                f,
                2,
                Provenance::Classical("truncation of the link homology at the apexes"),
            )
        }
        _ => Fixture::default(),
    }
}
