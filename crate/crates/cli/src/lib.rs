//! Library surface behind the `cosimplex` binary: the JSON schemas, the
//! subcommand implementations, and the error-to-exit-code mapping.

pub mod commands;
pub mod schema;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    KindMismatch(String),
    Closure(String),
    Parity(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::KindMismatch(_) => 2,
            CliError::Closure(_) => 3,
            CliError::Parity(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m)
            | CliError::KindMismatch(m)
            | CliError::Closure(m)
            | CliError::Parity(m) => m,
        }
    }
}

impl From<cosimplex_core::Error> for CliError {
    fn from(e: cosimplex_core::Error) -> Self {
        use cosimplex_core::Error::*;
        match e {
            NotSimplicial | NotCosimplicial => CliError::Closure(e.to_string()),
            GradeParity { .. } => CliError::Parity(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}
