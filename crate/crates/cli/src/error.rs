use std::fmt;
use std::process::ExitCode;

use powercolor::{Graph6Error, GraphError, OracleError, ProcedureError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Precondition,
    Limits,
    Malformed,
    Internal,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn new(kind: Kind, message: impl Into<String>) -> Self {
        CliError {
            kind,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self.kind {
            Kind::Precondition => 2,
            Kind::Limits => 3,
            Kind::Malformed => 4,
            Kind::Internal => 5,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.kind {
            Kind::Precondition => "precondition violated",
            Kind::Limits => "limits exceeded",
            Kind::Malformed => "malformed input",
            Kind::Internal => "internal error",
        };
        write!(f, "{label}: {}", self.message)
    }
}

impl From<Graph6Error> for CliError {
    fn from(e: Graph6Error) -> Self {
        CliError::new(Kind::Malformed, e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::new(Kind::Precondition, e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        let kind = if e.is_limit() {
            Kind::Limits
        } else {
            Kind::Precondition
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<ProcedureError> for CliError {
    fn from(e: ProcedureError) -> Self {
        let kind = match &e {
            ProcedureError::PreconditionViolated(_) | ProcedureError::Bounds(_) => {
                Kind::Precondition
            }
            ProcedureError::Walk(powercolor::walks::WalkError::TooLarge { .. }) => Kind::Limits,
            ProcedureError::Walk(_) => Kind::Precondition,
            ProcedureError::PaletteExhausted { .. }
            | ProcedureError::PrecoloringConflict { .. }
            | ProcedureError::Invariant(_) => Kind::Internal,
        };
        let message = match &e {
            ProcedureError::PreconditionViolated(p) => p.to_string(),
            other => other.to_string(),
        };
        CliError::new(kind, message)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(Kind::Malformed, format!("cannot read input: {e}"))
    }
}
