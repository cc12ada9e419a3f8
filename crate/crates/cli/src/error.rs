use thiserror::Error;

/// Failures of the command-line front end.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    /// Line 0 means the problem as a whole.
    #[error("{}", semantic_text(*line, message))]
    Semantic { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] varinterp::Error),
}

fn semantic_text(line: usize, message: &str) -> String {
    if line == 0 {
        message.to_string()
    } else {
        format!("line {line}: {message}")
    }
}

impl CliError {
    /// Process exit code: 2 for input and usage problems, 3 when a solver
    /// precondition does not hold.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(varinterp::Error::Parse { .. } | varinterp::Error::InvalidProblem(_)) => 2,
            CliError::Core(_) => 3,
            _ => 2,
        }
    }
}
