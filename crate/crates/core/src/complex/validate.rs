use std::collections::BTreeSet;

use serde::Serialize;

use super::simplex::Simplex;
use super::stratified::StratifiedComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    SimplicialComplex,
    PureDimensional,
    Pseudomanifold,
    StratificationCompatible,
    FullTriangulation,
    EvenCodimension,
}

impl Flag {
    pub const ALL: [Flag; 6] = [
        Flag::SimplicialComplex,
        Flag::PureDimensional,
        Flag::Pseudomanifold,
        Flag::StratificationCompatible,
        Flag::FullTriangulation,
        Flag::EvenCodimension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::SimplicialComplex => "simplicial-complex",
            Flag::PureDimensional => "pure-dimensional",
            Flag::Pseudomanifold => "pseudomanifold",
            Flag::StratificationCompatible => "stratification-compatible",
            Flag::FullTriangulation => "full-triangulation",
            Flag::EvenCodimension => "even-codimension",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagResult {
    pub flag: Flag,
    pub passed: bool,
    /// First violating simplex, when there is one to point at.
    pub witness: Option<Simplex>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub flags: Vec<FlagResult>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.flags.iter().all(|f| f.passed)
    }

    pub fn first_failure(&self) -> Option<&FlagResult> {
        self.flags.iter().find(|f| !f.passed)
    }

    pub fn get(&self, flag: Flag) -> &FlagResult {
        self.flags
            .iter()
            .find(|f| f.flag == flag)
            .expect("all flags are reported")
    }
}

type Outcome = Result<(), (Option<Simplex>, String)>;

pub fn validate(x: &StratifiedComplex) -> ValidationReport {
    let checks: [(Flag, Outcome); 6] = [
        (Flag::SimplicialComplex, check_simplicial(x)),
        (Flag::PureDimensional, check_pure(x)),
        (Flag::Pseudomanifold, check_pseudomanifold(x)),
        (Flag::StratificationCompatible, check_stratification(x)),
        (Flag::FullTriangulation, check_full(x)),
        (Flag::EvenCodimension, check_even_codimension(x)),
    ];
    ValidationReport {
        flags: checks
            .into_iter()
            .map(|(flag, r)| match r {
                Ok(()) => FlagResult {
                    flag,
                    passed: true,
                    witness: None,
                    detail: None,
                },
                Err((witness, detail)) => FlagResult {
                    flag,
                    passed: false,
                    witness,
                    detail: Some(detail),
                },
            })
            .collect(),
    }
}

fn check_simplicial(x: &StratifiedComplex) -> Outcome {
    let max = x.maximal();
    for w in max.windows(2) {
        if w[0] == w[1] {
            return Err((
                Some(w[0].clone()),
                "listed twice as a maximal simplex".into(),
            ));
        }
    }
    let top: BTreeSet<&Simplex> = max.iter().collect();
    for s in max {
        for f in s.faces() {
            if f != *s && top.contains(&f) {
                return Err((Some(f), format!("listed as maximal but is a face of {s}")));
            }
        }
    }
    let used = x.count(0);
    if used != x.vertex_count() {
        let present: BTreeSet<usize> = x.simplices(0).iter().map(|s| s.vertices()[0]).collect();
        let missing = (0..x.vertex_count())
            .find(|v| !present.contains(v))
            .unwrap();
        return Err((None, format!("vertex {missing} lies in no simplex")));
    }
    Ok(())
}

fn check_pure(x: &StratifiedComplex) -> Outcome {
    match x.maximal().iter().find(|s| s.dim() != x.dim()) {
        Some(s) => Err((
            Some(s.clone()),
            format!(
                "maximal simplex of dimension {} in a complex of dimension {}",
                s.dim(),
                x.dim()
            ),
        )),
        None if x.maximal().is_empty() => Err((None, "no simplices".into())),
        None => Ok(()),
    }
}

fn check_pseudomanifold(x: &StratifiedComplex) -> Outcome {
    let d = x.dim();
    if d == 0 {
        return Ok(());
    }
    let mut cofaces = vec![0usize; x.count(d - 1)];
    for s in x.simplices(d) {
        for j in 0..=d {
            cofaces[x.index_of(&s.facet(j)).unwrap()] += 1;
        }
    }
    if let Some((i, c)) = cofaces.iter().enumerate().find(|(_, c)| **c != 2) {
        return Err((
            Some(x.simplices(d - 1)[i].clone()),
            format!("codimension-one face of {c} top simplices, expected 2"),
        ));
    }
    for k in (d.saturating_sub(1))..=d {
        for (i, s) in x.simplices(k).iter().enumerate() {
            if x.is_singular(k, i) {
                return Err((Some(s.clone()), "singular set has codimension < 2".into()));
            }
        }
    }
    Ok(())
}

fn check_stratification(x: &StratifiedComplex) -> Outcome {
    let dim = x.dim() as i64;
    for d in 0..=x.max_simplex_dim() {
        for (i, s) in x.simplices(d).iter().enumerate() {
            let st = x.stratum_index(d, i);
            let real_dim = dim - 2 * x.codim(st) as i64;
            if (d as i64) > real_dim {
                return Err((
                    Some(s.clone()),
                    format!(
                        "simplex of dimension {d} in stratum {} of real dimension {real_dim}",
                        x.strata()[st].id
                    ),
                ));
            }
            // Faces lie in the closure of the stratum: the same stratum or a
            // strictly smaller one.
            for f in s.faces() {
                let fi = x.index_of(&f).unwrap();
                let fst = x.stratum_index(f.dim(), fi);
                if fst != st && x.strata()[fst].cdim >= x.strata()[st].cdim {
                    return Err((
                        Some(f),
                        format!(
                            "face of {s} lies in stratum {} which is not in the frontier of stratum {}",
                            x.strata()[fst].id,
                            x.strata()[st].id
                        ),
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_even_codimension(x: &StratifiedComplex) -> Outcome {
    let (n, dim) = (x.n(), x.dim());
    if dim != 2 * n && dim != 2 * n + 1 {
        return Err((
            None,
            format!("real dimension {dim} does not match complex dimension {n}"),
        ));
    }
    if x.has_singular_strata() && dim != 2 * n {
        return Err((None, format!("singular strata in odd real dimension {dim}")));
    }
    Ok(())
}

fn check_full(x: &StratifiedComplex) -> Outcome {
    match first_non_full(x) {
        Some((s, level)) => Err((
            Some(s),
            format!("meets the closed filtration piece of complex dimension {level} in more than one face"),
        )),
        None => Ok(()),
    }
}

/// Every simplex meets every closed filtration piece in a single face.
pub fn is_full(x: &StratifiedComplex) -> bool {
    first_non_full(x).is_none()
}

fn first_non_full(x: &StratifiedComplex) -> Option<(Simplex, usize)> {
    let levels: BTreeSet<usize> = x.singular_strata().map(|(_, s)| s.cdim).collect();
    for &level in &levels {
        // X_level: singular simplices in strata of complex dimension <= level.
        let in_piece = |s: &Simplex| -> bool {
            x.index_of(s).is_some_and(|i| {
                let st = x.stratum_index(s.dim(), i);
                st != x.top_index() && x.strata()[st].cdim <= level
            })
        };
        for d in 1..=x.max_simplex_dim() {
            for s in x.simplices(d) {
                let verts: Vec<usize> = s
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|v| in_piece(&Simplex::vertex(*v)))
                    .collect();
                if verts.is_empty() {
                    continue;
                }
                if !in_piece(&Simplex::from_sorted(verts)) {
                    return Some((s.clone(), level));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Stratum;

    #[test]
    fn circle_passes() {
        let x =
            StratifiedComplex::manifold(0, Some(1), 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]])
                .unwrap();
        assert!(validate(&x).is_valid());
    }

    #[test]
    fn open_disk_fails_pseudomanifold() {
        let x =
            StratifiedComplex::manifold(1, None, 4, vec![vec![0, 1, 2], vec![0, 2, 3]]).unwrap();
        let r = validate(&x);
        let f = r.get(Flag::Pseudomanifold);
        assert!(!f.passed);
        assert_eq!(f.witness.as_ref().unwrap().to_string(), "(0,1)");
    }

    #[test]
    fn edge_between_two_singular_points_is_not_full() {
        // Two triangles glued along (0,1); both endpoints singular, the edge
        // interior is in the top stratum.
        let x = StratifiedComplex::new(
            1,
            None,
            4,
            vec![vec![0, 1, 2], vec![0, 1, 3]],
            vec![Stratum { id: 0, cdim: 1 }, Stratum { id: 1, cdim: 0 }],
            vec![(vec![0], 1), (vec![1], 1)],
        )
        .unwrap();
        assert!(!is_full(&x));
        assert_eq!(
            validate(&x)
                .get(Flag::FullTriangulation)
                .witness
                .as_ref()
                .unwrap()
                .to_string(),
            "(0,1)"
        );
    }

    #[test]
    fn non_maximal_listing_is_caught() {
        let x = StratifiedComplex::manifold(
            0,
            Some(1),
            3,
            vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![1]],
        )
        .unwrap();
        assert!(!validate(&x).get(Flag::SimplicialComplex).passed);
    }

    #[test]
    fn singular_edge_interior_breaks_frontier_condition() {
        let x = StratifiedComplex::new(
            1,
            None,
            3,
            vec![vec![0, 1, 2]],
            vec![Stratum { id: 0, cdim: 1 }, Stratum { id: 1, cdim: 0 }],
            vec![(vec![0, 1], 1)],
        )
        .unwrap();
        assert!(!validate(&x).get(Flag::StratificationCompatible).passed);
    }
}
