use std::fmt;

/// Failure of a job, split by exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Bad invocation or job file (exit 1).
    Input { name: &'static str, message: String },
    /// The solver or verifier rejected the inputs (exit 2).
    Core(neel_core::Error),
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError::Input { name: "InvalidInput", message: message.into() }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CliError::Input { name, .. } => name,
            CliError::Core(e) => e.name(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input { .. } => 1,
            CliError::Core(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input { message, .. } => f.write_str(message),
            CliError::Core(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for CliError {}

impl From<neel_core::Error> for CliError {
    /// Malformed values are input errors; everything else is a solver verdict.
    fn from(e: neel_core::Error) -> Self {
        use neel_core::Error::*;
        match e {
            InvalidSpin(_)
            | NonHalfInteger(_)
            | InvalidDirection(_)
            | InvalidLattice(_)
            | InvalidParams(_)
            | DimensionMismatch { .. }
            | BudgetExceeded { .. } => CliError::Input { name: e.name(), message: e.to_string() },
            _ => CliError::Core(e),
        }
    }
}
