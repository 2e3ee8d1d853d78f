//! The `strathom-complex v1` document:
//!
//! ```text
//! strathom-complex v1
//! n=1
//! vertices=4
//! maximal=(0,1,2);(0,1,3);(0,2,3);(1,2,3)
//! strata=(0,0);(1,1)
//! assign=(0):0
//! ```
//!
//! `dim=` may follow `n=` when the real dimension is not `2n`. Blank lines
//! and lines starting with `#` are ignored when parsing.

use super::stratified::{StratifiedComplex, Stratum};
use crate::error::ParseError;

pub const COMPLEX_HEADER: &str = "strathom-complex v1";

pub fn emit_complex(x: &StratifiedComplex) -> String {
    let mut out = String::new();
    out.push_str(COMPLEX_HEADER);
    out.push('\n');
    out.push_str(&format!("n={}\n", x.n()));
    if x.dim() != 2 * x.n() {
        out.push_str(&format!("dim={}\n", x.dim()));
    }
    out.push_str(&format!("vertices={}\n", x.vertex_count()));
    let maximal: Vec<String> = x.maximal().iter().map(ToString::to_string).collect();
    out.push_str(&format!("maximal={}\n", maximal.join(";")));
    let strata: Vec<String> = x
        .strata()
        .iter()
        .map(|s| format!("({},{})", s.id, s.cdim))
        .collect();
    out.push_str(&format!("strata={}\n", strata.join(";")));
    let assign: Vec<String> = x
        .singular_assignments()
        .iter()
        .map(|(s, id)| format!("{s}:{id}"))
        .collect();
    out.push_str(&format!("assign={}\n", assign.join(";")));
    out
}

pub fn parse_complex(text: &str) -> Result<StratifiedComplex, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, l)) if l == COMPLEX_HEADER => {}
        _ => return Err(ParseError::MissingHeader(COMPLEX_HEADER)),
    }

    let mut n = None;
    let mut dim = None;
    let mut vertices = None;
    let mut maximal = None;
    let mut strata = None;
    let mut assign = None;
    for (line, l) in lines {
        let Some((key, value)) = l.split_once('=') else {
            return Err(syntax(line, format!("expected key=value, found `{l}`")));
        };
        let value = value.trim();
        let slot_taken = match key.trim() {
            "n" => n.replace(parse_usize(line, value)?).is_some(),
            "dim" => dim.replace(parse_usize(line, value)?).is_some(),
            "vertices" => vertices.replace(parse_usize(line, value)?).is_some(),
            "maximal" => maximal
                .replace(parse_list(line, value, parse_tuple)?)
                .is_some(),
            "strata" => strata
                .replace(parse_list(line, value, |line, item| {
                    let t = parse_tuple(line, item)?;
                    match t.as_slice() {
                        [id, cdim] => Ok(Stratum {
                            id: u32::try_from(*id)
                                .map_err(|_| syntax(line, format!("stratum id {id} too large")))?,
                            cdim: *cdim,
                        }),
                        _ => Err(syntax(
                            line,
                            format!("stratum must be (id,cdim), found `{item}`"),
                        )),
                    }
                })?)
                .is_some(),
            "assign" => assign
                .replace(parse_list(line, value, |line, item| {
                    let Some((s, id)) = item.rsplit_once(':') else {
                        return Err(syntax(
                            line,
                            format!("assignment must be (..):id, found `{item}`"),
                        ));
                    };
                    let id = id
                        .trim()
                        .parse::<u32>()
                        .map_err(|_| syntax(line, format!("bad stratum id `{id}`")))?;
                    Ok((parse_tuple(line, s)?, id))
                })?)
                .is_some(),
            other => return Err(syntax(line, format!("unknown field `{other}`"))),
        };
        if slot_taken {
            return Err(syntax(line, format!("field `{}` given twice", key.trim())));
        }
    }

    let n = n.ok_or(ParseError::MissingField("n"))?;
    let vertices = vertices.ok_or(ParseError::MissingField("vertices"))?;
    let maximal = maximal.ok_or(ParseError::MissingField("maximal"))?;
    let strata = strata.ok_or(ParseError::MissingField("strata"))?;
    let assign = assign.unwrap_or_default();
    Ok(StratifiedComplex::new(
        n, dim, vertices, maximal, strata, assign,
    )?)
}

fn syntax(line: usize, message: String) -> ParseError {
    ParseError::Syntax { line, message }
}

fn parse_usize(line: usize, s: &str) -> Result<usize, ParseError> {
    s.parse()
        .map_err(|_| syntax(line, format!("expected a nonnegative integer, found `{s}`")))
}

fn parse_list<T>(
    line: usize,
    value: &str,
    item: impl Fn(usize, &str) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    if value.is_empty() {
        return Ok(Vec::new());
    }
    value.split(';').map(|s| item(line, s.trim())).collect()
}

fn parse_tuple(line: usize, s: &str) -> Result<Vec<usize>, ParseError> {
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| syntax(line, format!("expected a parenthesized tuple, found `{s}`")))?;
    inner
        .split(',')
        .map(|v| parse_usize(line, v.trim()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;

    const CONE_POINT: &str = "strathom-complex v1
n=1
vertices=4
maximal=(0,1,2);(0,1,3);(0,2,3);(1,2,3)
strata=(0,0);(1,1)
assign=(0):0
";

    #[test]
    fn round_trip_is_exact() {
        let x = parse_complex(CONE_POINT).unwrap();
        assert_eq!(emit_complex(&x), CONE_POINT);
        assert_eq!(x.stratum_of(&Simplex::vertex(0)).unwrap().id, 0);
        assert_eq!(x.stratum_of(&Simplex::vertex(1)).unwrap().id, 1);
    }

    #[test]
    fn odd_dimension_is_explicit() {
        let x =
            StratifiedComplex::manifold(0, Some(1), 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]])
                .unwrap();
        let text = emit_complex(&x);
        assert!(text.contains("dim=1\n"));
        assert_eq!(emit_complex(&parse_complex(&text).unwrap()), text);
    }

    #[test]
    fn input_order_is_canonicalized() {
        let messy = "# comment\nstrathom-complex v1\nvertices=4\nn=1\nmaximal=(3,2,1);(0,1,2);(0,3,1);(0,2,3)\nstrata=(1,1);(0,0)\nassign=(0):0\n";
        assert_eq!(emit_complex(&parse_complex(messy).unwrap()), CONE_POINT);
    }

    #[test]
    fn errors_are_located() {
        assert_eq!(
            parse_complex("nope").unwrap_err(),
            ParseError::MissingHeader(COMPLEX_HEADER)
        );
        let e = parse_complex("strathom-complex v1\nn=x\n").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { line: 2, .. }));
        let e = parse_complex("strathom-complex v1\nn=1\nvertices=3\nstrata=(0,1)\n").unwrap_err();
        assert_eq!(e, ParseError::MissingField("maximal"));
        let e = parse_complex("strathom-complex v1\nn=1\nn=1\n").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { line: 3, .. }));
    }
}
