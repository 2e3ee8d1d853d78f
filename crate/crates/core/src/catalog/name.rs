//! Catalog names such as `product(circle(3),circle(3))`.

use std::fmt;

use crate::error::CatalogError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Int(usize),
    Space(EntryName),
}

/// A builder name with its arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryName {
    pub name: String,
    pub args: Vec<Arg>,
}

impl EntryName {
    pub fn new(name: &str, args: Vec<Arg>) -> Self {
        Self {
            name: name.to_string(),
            args,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser {
            s: compact.as_bytes(),
            pos: 0,
        };
        let key = p.entry()?;
        if p.pos != p.s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(key)
    }

    /// File-name friendly form: `product(circle(3),circle(3))` becomes
    /// `product_circle_3_circle_3`.
    pub fn slug(&self) -> String {
        let mut out = String::new();
        for c in self.to_string().chars() {
            if c.is_ascii_alphanumeric() {
                out.push(c);
            } else if !out.ends_with('_') {
                out.push('_');
            }
        }
        out.trim_end_matches('_').to_string()
    }
}

impl fmt::Display for EntryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if self.args.is_empty() {
            return Ok(());
        }
        write!(f, "(")?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match a {
                Arg::Int(k) => write!(f, "{k}")?,
                Arg::Space(s) => write!(f, "{s}")?,
            }
        }
        write!(f, ")")
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> CatalogError {
        CatalogError::BadParams(format!("{what} at position {}", self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn entry(&mut self) -> Result<EntryName, CatalogError> {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        let name = std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .to_string();
        let mut args = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                args.push(self.arg()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected `,` or `)`")),
                }
            }
        }
        Ok(EntryName { name, args })
    }

    fn arg(&mut self) -> Result<Arg, CatalogError> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
            text.parse()
                .map(Arg::Int)
                .map_err(|_| self.error("integer too large"))
        } else {
            self.entry().map(Arg::Space)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_round_trip() {
        let s = EntryName::parse("product( circle(3), suspension(circle(4)) )").unwrap();
        assert_eq!(s.to_string(), "product(circle(3),suspension(circle(4)))");
        assert_eq!(s.slug(), "product_circle_3_suspension_circle_4");
        assert_eq!(EntryName::parse("torus").unwrap().args, vec![]);
    }

    #[test]
    fn malformed() {
        for bad in ["", "circle(", "circle(3", "circle(3))", "(3)", "circle(,)"] {
            assert!(EntryName::parse(bad).is_err(), "{bad}");
        }
    }
}
