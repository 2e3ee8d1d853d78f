use std::fmt;

/// Exit codes: 1 validation failure, 2 parse or usage error, 3 criterion
/// inapplicable.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Parse(String),
    Inapplicable(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Inapplicable(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) | CliError::Parse(m) | CliError::Inapplicable(m) => f.write_str(m),
        }
    }
}

impl From<strathom::ComplexError> for CliError {
    fn from(e: strathom::ComplexError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<strathom::CocycleError> for CliError {
    fn from(e: strathom::CocycleError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<strathom::ParseError> for CliError {
    fn from(e: strathom::ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<strathom::CatalogError> for CliError {
    fn from(e: strathom::CatalogError) -> Self {
        match e {
            strathom::CatalogError::Complex(c) => CliError::Invalid(c.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}
