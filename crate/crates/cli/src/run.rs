use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};
use strathom::catalog;
use strathom::complex::{
    barycentric_subdivide, emit_complex, parse_complex, validate, StratifiedComplex,
};
use strathom::ih::{intersection_homology, ordinary_homology, HomologyReport};
use strathom::local::{
    emit_cocycle, euler_witness, parse_cocycle, prop25_crosscheck, subdivide_cocycle, twisted_ih,
    Cocycle, TwistedIHReport, Verdict,
};

use crate::cli::{CatalogCommand, Command, Input, Twisted};
use crate::error::CliError;

pub const SCHEMA: &str = "strathom-report v1";

/// Output produced before a failure is still printed.
pub struct Failure {
    pub output: String,
    pub error: CliError,
}

impl From<CliError> for Failure {
    fn from(error: CliError) -> Self {
        Failure {
            output: String::new(),
            error,
        }
    }
}

pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("STRATHOM_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        CliError::Parse(format!(
            "STRATHOM_THREADS must be a positive integer, got `{raw}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Parse(e.to_string()))
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    verb: &'a str,
    input: Provenance,
    subdivisions: usize,
    report: T,
}

#[derive(Serialize)]
struct Provenance {
    complex_sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    cocycle_sha256: Option<String>,
}

struct Loaded {
    complex: StratifiedComplex,
    cocycle: Option<Cocycle>,
    provenance: Provenance,
    subdivisions: usize,
}

fn read(path: &Path) -> Result<(String, String), CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let hash = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::Parse(format!("{}: not UTF-8", path.display())))?;
    Ok((text, hash))
}

fn load(input: &Input, cocycle: Option<&Path>) -> Result<Loaded, CliError> {
    let (text, complex_sha256) = read(&input.input)?;
    let mut complex = parse_complex(&text)?;
    let mut cocycle_sha256 = None;
    let mut w = None;
    if let Some(path) = cocycle {
        let (text, hash) = read(path)?;
        w = Some(parse_cocycle(&text)?);
        cocycle_sha256 = Some(hash);
    }
    for _ in 0..input.subdivide {
        require_valid(&complex)?;
        let sd = barycentric_subdivide(&complex);
        if let Some(c) = &w {
            c.check(&complex)?;
            w = Some(subdivide_cocycle(&complex, &sd, c));
        }
        complex = sd;
    }
    Ok(Loaded {
        complex,
        cocycle: w,
        provenance: Provenance {
            complex_sha256,
            cocycle_sha256,
        },
        subdivisions: input.subdivide,
    })
}

fn require_valid(x: &StratifiedComplex) -> Result<(), CliError> {
    match validate(x).first_failure() {
        None => Ok(()),
        Some(f) => Err(CliError::Invalid(format!(
            "complex fails {}{}",
            f.flag.name(),
            f.witness
                .as_ref()
                .map(|s| format!(" at {s}"))
                .unwrap_or_default()
        ))),
    }
}

fn to_json<T: Serialize>(verb: &str, loaded: &Loaded, report: T) -> String {
    let env = Envelope {
        schema: SCHEMA,
        verb,
        input: Provenance {
            complex_sha256: loaded.provenance.complex_sha256.clone(),
            cocycle_sha256: loaded.provenance.cocycle_sha256.clone(),
        },
        subdivisions: loaded.subdivisions,
        report,
    };
    serde_json::to_string_pretty(&env).expect("reports serialize") + "\n"
}

pub fn dispatch(cmd: &Command) -> Result<String, Failure> {
    match cmd {
        Command::Validate { input, json } => run_validate(input, *json),
        Command::Homology(input) => {
            let l = load(input, None)?;
            require_valid(&l.complex)?;
            let r = ordinary_homology(&l.complex);
            Ok(homology_output("homology", "H", &l, &r, input.json))
        }
        Command::Ih(input) => {
            let l = load(input, None)?;
            let r = intersection_homology(&l.complex).map_err(CliError::from)?;
            Ok(homology_output("ih", "IH", &l, &r, input.json))
        }
        Command::Twisted(t) => {
            let l = load(&t.input, Some(&t.cocycle))?;
            let r = twisted_ih(&l.complex, l.cocycle.as_ref().unwrap()).map_err(CliError::from)?;
            Ok(twisted_output(&l, &r, t.input.json))
        }
        Command::Witness { twisted, n } => run_witness(twisted, *n),
        Command::Crosscheck(t) => run_crosscheck(t),
        Command::Catalog(c) => run_catalog(c),
    }
}

fn run_validate(path: &Path, json: bool) -> Result<String, Failure> {
    let (text, complex_sha256) = read(path)?;
    let x = parse_complex(&text).map_err(CliError::from)?;
    let report = validate(&x);
    let out = if json {
        let l = Loaded {
            complex: x,
            cocycle: None,
            provenance: Provenance {
                complex_sha256,
                cocycle_sha256: None,
            },
            subdivisions: 0,
        };
        #[derive(Serialize)]
        struct V<'a> {
            valid: bool,
            flags: &'a [strathom::complex::FlagResult],
        }
        to_json(
            "validate",
            &l,
            V {
                valid: report.is_valid(),
                flags: &report.flags,
            },
        )
    } else {
        let mut s = String::new();
        for f in &report.flags {
            let _ = write!(
                s,
                "{:<26} {}",
                f.flag.name(),
                if f.passed { "ok" } else { "FAIL" }
            );
            if let Some(w) = &f.witness {
                let _ = write!(s, "  at {w}");
            }
            if let Some(d) = &f.detail {
                let _ = write!(s, "  ({d})");
            }
            s.push('\n');
        }
        s
    };
    match report.first_failure() {
        None => Ok(out),
        Some(f) => Err(Failure {
            output: out,
            error: CliError::Invalid(format!(
                "first failing flag: {}{}",
                f.flag.name(),
                f.witness
                    .as_ref()
                    .map(|w| format!(" at {w}"))
                    .unwrap_or_default()
            )),
        }),
    }
}

fn group(rank: usize, torsion: &[String], free: &str) -> String {
    let mut parts = Vec::new();
    match rank {
        0 => {}
        1 => parts.push(free.to_string()),
        r => parts.push(format!("{free}^{r}")),
    }
    for t in torsion {
        parts.push(format!("{free}/({t})"));
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn homology_output(verb: &str, label: &str, l: &Loaded, r: &HomologyReport, json: bool) -> String {
    if json {
        return to_json(verb, l, r);
    }
    let mut s = String::new();
    for (i, d) in r.degrees.iter().enumerate() {
        let torsion: Vec<String> = d.torsion.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "{label}_{i} = {}", group(d.rank, &torsion, "Z"));
    }
    let _ = writeln!(s, "euler = {}", r.euler());
    s
}

fn twisted_output(l: &Loaded, r: &TwistedIHReport, json: bool) -> String {
    if json {
        return to_json("twisted", l, r);
    }
    let mut s = String::new();
    for (i, d) in r.degrees.iter().enumerate() {
        let torsion: Vec<String> = d.torsion.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "IH_{i}(L) = {}", group(d.rank, &torsion, "Q[t,t^-1]"));
    }
    let _ = writeln!(s, "ranks over Q(t) = {:?}", r.ranks());
    s
}

fn verdict_line(label: &str, v: &Verdict) -> String {
    match v {
        Verdict::Witness { rank_n, euler } => {
            format!("{label}: witness, euler = {euler} (rank {rank_n})")
        }
        Verdict::Inapplicable { degrees } => {
            format!("{label}: criterion inapplicable, nonzero rank in degrees {degrees:?}")
        }
    }
}

fn run_witness(t: &Twisted, n: usize) -> Result<String, Failure> {
    let l = load(&t.input, Some(&t.cocycle))?;
    let r = euler_witness(&l.complex, l.cocycle.as_ref().unwrap(), n).map_err(CliError::from)?;
    let out = if t.input.json {
        to_json("witness", &l, &r)
    } else {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "twisted IH ranks = {:?}, Iχ = {}",
            r.twisted_ih_ranks, r.ichi
        );
        let _ = writeln!(s, "{}", verdict_line("IH", &r.ih));
        let _ = writeln!(
            s,
            "twisted H ranks = {:?}, χ = {}",
            r.twisted_h_ranks, r.chi
        );
        let _ = writeln!(s, "{}", verdict_line("H", &r.h));
        s
    };
    match &r.ih {
        Verdict::Witness { .. } => Ok(out),
        Verdict::Inapplicable { degrees } => Err(Failure {
            output: out,
            error: CliError::Inapplicable(format!(
                "twisted IH has nonzero rank in degrees {degrees:?}"
            )),
        }),
    }
}

fn run_crosscheck(t: &Twisted) -> Result<String, Failure> {
    let l = load(&t.input, Some(&t.cocycle))?;
    let r = prop25_crosscheck(&l.complex, l.cocycle.as_ref().unwrap()).map_err(CliError::from)?;
    let out = if t.input.json {
        to_json("crosscheck", &l, &r)
    } else {
        match &r.mismatch {
            None => format!(
                "gauge and cover boundaries agree in all degrees (window {})\n",
                r.window
            ),
            Some(m) => format!(
                "mismatch in degree {} at ({}, {}): gauge {} vs cover {}\n",
                m.degree, m.row, m.col, m.representation, m.cover
            ),
        }
    };
    if r.agrees() {
        Ok(out)
    } else {
        Err(Failure {
            output: out,
            error: CliError::Invalid("twisted boundary constructions disagree".into()),
        })
    }
}

fn run_catalog(c: &CatalogCommand) -> Result<String, Failure> {
    match c {
        CatalogCommand::List { json } => {
            let mut entries = Vec::new();
            for name in catalog::STANDARD {
                let e = catalog::build(name).map_err(CliError::from)?;
                entries.push(serde_json::json!({
                    "name": e.name(),
                    "n": e.n,
                    "dim": e.complex.dim(),
                    "abelian_model": e.metadata.abelian_model,
                    "lci": e.metadata.lci,
                    "narrative": e.metadata.narrative,
                    "cocycles": e.cocycles.iter().map(|c| c.name.clone()).collect::<Vec<_>>(),
                }));
            }
            if *json {
                let v = serde_json::json!({ "schema": SCHEMA, "verb": "catalog list", "entries": entries });
                return Ok(serde_json::to_string_pretty(&v).unwrap() + "\n");
            }
            let mut s = String::new();
            for e in &entries {
                let _ = writeln!(
                    s,
                    "{:<30} {}",
                    e["name"].as_str().unwrap(),
                    e["narrative"].as_str().unwrap()
                );
            }
            Ok(s)
        }
        CatalogCommand::Emit { name, out, json } => {
            let e = catalog::build(name).map_err(CliError::from)?;
            fs::create_dir_all(out)
                .map_err(|err| CliError::Parse(format!("{}: {err}", out.display())))?;
            let slug = e.key.slug();
            let mut written = Vec::new();
            let mut write = |file: String, body: String| -> Result<(), CliError> {
                let path = out.join(file);
                fs::write(&path, body)
                    .map_err(|err| CliError::Parse(format!("{}: {err}", path.display())))?;
                written.push(path.display().to_string());
                Ok(())
            };
            write(format!("{slug}.v1"), emit_complex(&e.complex))?;
            for c in &e.cocycles {
                write(
                    format!("{slug}.{}.cocycle.v1", c.name),
                    emit_cocycle(&c.cocycle),
                )?;
            }
            if *json {
                let v = serde_json::json!({
                    "schema": SCHEMA,
                    "verb": "catalog emit",
                    "name": e.name(),
                    "files": written,
                });
                Ok(serde_json::to_string_pretty(&v).unwrap() + "\n")
            } else {
                Ok(written.join("\n") + "\n")
            }
        }
    }
}
