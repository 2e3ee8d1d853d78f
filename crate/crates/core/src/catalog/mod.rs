//! Model spaces with named cocycles and expected reports.
//!
//! Entries are addressed by name, e.g. `torus`, `genus_g(2)` or
//! `product(circle(3),circle(3))`.

pub mod builders;
mod fixtures;
mod name;

pub use fixtures::{fixtures, Expected, Fixture, Provenance, TwistedFixture};
pub use name::{Arg, EntryName};

use crate::complex::{barycentric_subdivide, is_full, validate, StratifiedComplex};
use crate::error::{CatalogError, ComplexError};
use crate::local::{subdivide_cocycle, Cocycle};

/// The standard entries, in a fixed order.
pub const STANDARD: [&str; 8] = [
    "circle(3)",
    "torus",
    "genus_g(2)",
    "pinched_torus",
    "nodal_genus1",
    "suspension(circle(4))",
    "cone(circle(6))",
    "product(circle(3),circle(3))",
];

#[derive(Clone, Debug)]
pub struct NamedCocycle {
    pub name: String,
    pub cocycle: Cocycle,
}

/// What an entry stands for geometrically; the engine itself only sees
/// topology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metadata {
    /// Models a subvariety of an abelian variety.
    pub abelian_model: bool,
    /// Models a local complete intersection in an abelian variety.
    pub lci: bool,
    pub narrative: String,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: EntryName,
    pub complex: StratifiedComplex,
    pub n: usize,
    pub cocycles: Vec<NamedCocycle>,
    pub metadata: Metadata,
}

impl CatalogEntry {
    pub fn name(&self) -> String {
        self.key.to_string()
    }

    pub fn cocycle(&self, name: &str) -> Option<&Cocycle> {
        self.cocycles
            .iter()
            .find(|c| c.name == name)
            .map(|c| &c.cocycle)
    }

    pub fn fixture(&self) -> Fixture {
        fixtures(&self.key)
    }
}

pub fn build(name: &str) -> Result<CatalogEntry, CatalogError> {
    build_name(&EntryName::parse(name)?)
}

/// Builds every entry of [`STANDARD`].
pub fn standard_entries() -> Result<Vec<CatalogEntry>, CatalogError> {
    STANDARD.iter().map(|n| build(n)).collect()
}

pub fn build_name(key: &EntryName) -> Result<CatalogEntry, CatalogError> {
    let raw = build_raw(key)?;
    let mut entry = CatalogEntry {
        key: name_with_defaults(key),
        n: raw.complex.n(),
        complex: raw.complex,
        cocycles: raw.cocycles,
        metadata: raw.metadata,
    };
    let report = validate(&entry.complex);
    let non_full_only = report
        .flags
        .iter()
        .all(|f| f.passed || f.flag == crate::complex::Flag::FullTriangulation);
    if !report.is_valid() && non_full_only {
        let sd = barycentric_subdivide(&entry.complex);
        for c in &mut entry.cocycles {
            c.cocycle = subdivide_cocycle(&entry.complex, &sd, &c.cocycle);
        }
        entry.complex = sd;
    }
    let report = validate(&entry.complex);
    if let Some(f) = report.first_failure() {
        return Err(ComplexError::Invalid(format!(
            "{} fails {}{}",
            entry.key,
            f.flag.name(),
            f.detail
                .as_deref()
                .map(|d| format!(": {d}"))
                .unwrap_or_default()
        ))
        .into());
    }
    debug_assert!(is_full(&entry.complex));
    Ok(entry)
}

struct Raw {
    complex: StratifiedComplex,
    cocycles: Vec<NamedCocycle>,
    metadata: Metadata,
}

fn named(name: &str, cocycle: Cocycle) -> NamedCocycle {
    NamedCocycle {
        name: name.to_string(),
        cocycle,
    }
}

fn meta(abelian_model: bool, lci: bool, narrative: &str) -> Metadata {
    Metadata {
        abelian_model,
        lci,
        narrative: narrative.to_string(),
    }
}

fn int_arg(key: &EntryName, default: usize) -> Result<usize, CatalogError> {
    match key.args.as_slice() {
        [] => Ok(default),
        [Arg::Int(k)] => Ok(*k),
        _ => Err(CatalogError::BadParams(format!(
            "{} takes one integer",
            key.name
        ))),
    }
}

fn space_args(key: &EntryName, count: usize) -> Result<Vec<&EntryName>, CatalogError> {
    let spaces: Vec<&EntryName> = key
        .args
        .iter()
        .filter_map(|a| match a {
            Arg::Space(s) => Some(s),
            Arg::Int(_) => None,
        })
        .collect();
    if spaces.len() != count || key.args.len() != count {
        return Err(CatalogError::BadParams(format!(
            "{} takes {count} space argument(s)",
            key.name
        )));
    }
    Ok(spaces)
}

/// Fills in default integer parameters so names are canonical.
fn name_with_defaults(key: &EntryName) -> EntryName {
    let default = match key.name.as_str() {
        "circle" => Some(3),
        "genus_g" | "sphere" => Some(2),
        _ => None,
    };
    let args = match (default, key.args.is_empty()) {
        (Some(d), true) => vec![Arg::Int(d)],
        _ => key
            .args
            .iter()
            .map(|a| match a {
                Arg::Space(s) => Arg::Space(name_with_defaults(s)),
                other => other.clone(),
            })
            .collect(),
    };
    EntryName::new(&key.name, args)
}

fn build_raw(key: &EntryName) -> Result<Raw, CatalogError> {
    use builders as b;
    let raw = match key.name.as_str() {
        "circle" => {
            let k = int_arg(key, 3)?;
            let x = b::circle(k)?;
            let cut = |v| Cocycle::from_edges([(k - 1, 0, v)]);
            Raw {
                cocycles: vec![
                    named("cut", cut(1)),
                    named("double", cut(2)),
                    named("coboundary", b::sample_coboundary(&x)),
                ],
                complex: x,
                metadata: meta(false, false, "real circle; no complex structure"),
            }
        }
        "sphere" => {
            let d = int_arg(key, 2)?;
            let x = b::sphere(d)?;
            Raw {
                cocycles: vec![
                    named("zero", Cocycle::zero()),
                    named("coboundary", b::sample_coboundary(&x)),
                ],
                complex: x,
                metadata: meta(
                    false,
                    false,
                    "sphere; simply connected, so no nonconstant map to an abelian variety",
                ),
            }
        }
        "torus" => {
            no_args(key)?;
            let x = b::torus();
            Raw {
                cocycles: vec![
                    named("meridian", b::torus_cocycle([1, 0])),
                    named("longitude", b::torus_cocycle([0, 1])),
                    named("coboundary", b::sample_coboundary(&x)),
                ],
                complex: x,
                metadata: meta(
                    true,
                    true,
                    "models an elliptic curve, itself an abelian variety",
                ),
            }
        }
        "genus_g" => {
            let g = int_arg(key, 2)?;
            if g == 0 {
                return Err(CatalogError::BadParams("genus_g needs g >= 1".into()));
            }
            let (x, ids) = b::genus_g(g)?;
            let mut cocycles = Vec::new();
            for c in 0..g {
                cocycles.push(named(
                    &format!("meridian_{}", c + 1),
                    b::genus_cocycle(g, &ids, c, [1, 0]),
                ));
                cocycles.push(named(
                    &format!("longitude_{}", c + 1),
                    b::genus_cocycle(g, &ids, c, [0, 1]),
                ));
            }
            cocycles.push(named("coboundary", b::sample_coboundary(&x)));
            let narrative = if g == 2 {
                "models a smooth theta divisor"
            } else {
                "models a smooth curve in its Jacobian"
            };
            Raw {
                complex: x,
                cocycles,
                metadata: meta(true, true, narrative),
            }
        }
        "pinched_torus" => {
            no_args(key)?;
            let (x, node) = b::pinched_torus()?;
            let node_loop = Cocycle::from_edges((0..3).map(|v| (node, v, 1)));
            Raw {
                cocycles: vec![
                    named("node_loop", node_loop),
                    named("coboundary", b::sample_coboundary(&x)),
                ],
                complex: x,
                metadata: meta(
                    false,
                    false,
                    "models a rational nodal curve; no abelian embedding exists",
                ),
            }
        }
        "nodal_genus1" => {
            no_args(key)?;
            let (x, glued, torus) = b::nodal_genus1()?;
            let far = glued
                .map
                .iter()
                .enumerate()
                .find(|&(v, &m)| m == glued.node && v != glued.node)
                .unwrap()
                .0;
            let mut f = vec![0i64; torus.vertex_count()];
            f[far] = 1;
            Raw {
                cocycles: vec![
                    named(
                        "meridian",
                        glued.push_cocycle(&b::grid_cocycle(&torus, 5, 5, 0)),
                    ),
                    named(
                        "node_loop",
                        glued.push_cocycle(&Cocycle::coboundary(&torus, &f)),
                    ),
                    named("coboundary", b::sample_coboundary(&x)),
                ],
                complex: x,
                metadata: meta(
                    true,
                    true,
                    "models a geometric-genus-1 nodal curve in an abelian surface",
                ),
            }
        }
        "suspension" | "cone" => {
            let inner = build_name(space_args(key, 1)?[0])?;
            let x = if key.name == "suspension" {
                b::suspension(&inner.complex)?
            } else {
                b::capped_cone(&inner.complex)?
            };
            Raw {
                cocycles: vec![
                    named("zero", Cocycle::zero()),
                    named("coboundary", b::sample_coboundary(&x)),
                ],
                complex: x,
                metadata: meta(
                    false,
                    false,
                    "cone-type test space with an isolated singular point",
                ),
            }
        }
        "product" => {
            let args = space_args(key, 2)?;
            let (left, right) = (build_name(args[0])?, build_name(args[1])?);
            let x = b::product(&left.complex, &right.complex)?;
            let vy = right.complex.vertex_count();
            let mut cocycles = Vec::new();
            for (prefix, factor, first) in [("pr1", &left, true), ("pr2", &right, false)] {
                for c in factor
                    .cocycles
                    .iter()
                    .filter(|c| c.name != "coboundary" && !c.cocycle.is_zero())
                {
                    cocycles.push(named(
                        &format!("{prefix}.{}", c.name),
                        b::product_pullback(&x, vy, &c.cocycle, first),
                    ));
                }
            }
            cocycles.push(named("coboundary", b::sample_coboundary(&x)));
            let circles = left.key.name == "circle" && right.key.name == "circle";
            let metadata = if circles {
                meta(
                    true,
                    true,
                    "models an elliptic curve as a product of circles",
                )
            } else {
                meta(false, false, "product test space")
            };
            Raw {
                complex: x,
                cocycles,
                metadata,
            }
        }
        other => return Err(CatalogError::UnknownName(other.to_string())),
    };
    Ok(raw)
}

fn no_args(key: &EntryName) -> Result<(), CatalogError> {
    if key.args.is_empty() {
        Ok(())
    } else {
        Err(CatalogError::BadParams(format!(
            "{} takes no parameters",
            key.name
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_entries_are_valid_and_full() {
        for e in standard_entries().unwrap() {
            assert!(validate(&e.complex).is_valid(), "{}", e.name());
            assert!(is_full(&e.complex), "{}", e.name());
            assert!(e.cocycles.len() >= 2, "{}", e.name());
            for c in &e.cocycles {
                c.cocycle
                    .check(&e.complex)
                    .unwrap_or_else(|err| panic!("{} {}: {err}", e.name(), c.name));
            }
        }
    }

    #[test]
    fn canonical_names() {
        assert_eq!(build("circle").unwrap().name(), "circle(3)");
        assert_eq!(
            build("product(circle,circle(4))").unwrap().name(),
            "product(circle(3),circle(4))"
        );
    }

    #[test]
    fn bad_names() {
        assert!(matches!(
            build("klein_bottle"),
            Err(CatalogError::UnknownName(_))
        ));
        assert!(matches!(build("torus(3)"), Err(CatalogError::BadParams(_))));
        assert!(matches!(build("circle(2)"), Err(CatalogError::Complex(_))));
        assert!(matches!(
            build("product(circle)"),
            Err(CatalogError::BadParams(_))
        ));
    }

    #[test]
    fn narrative_flags() {
        let p = build("pinched_torus").unwrap();
        assert!(!p.metadata.abelian_model);
        assert!(build("nodal_genus1").unwrap().metadata.abelian_model);
        assert!(build("genus_g(2)")
            .unwrap()
            .metadata
            .narrative
            .contains("theta divisor"));
    }
}
