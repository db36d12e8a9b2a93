use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Config text is not valid JSON.
    Parse(String),
    /// Config is JSON but violates the schema.
    Validation { path: String, message: String },
    /// Unreadable config or unwritable output.
    Io(String),
    /// A physics routine refused the input.
    Physics(forster_core::Error),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "PARSE_ERROR",
            CliError::Validation { .. } => "VALIDATION_ERROR",
            CliError::Io(_) => "IO_ERROR",
            CliError::Physics(e) => e.code(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Physics(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Io(m) => write!(f, "{}: {m}", self.code()),
            CliError::Validation { path, message } => {
                write!(f, "VALIDATION_ERROR at {path}: {message}")
            }
            CliError::Physics(e) => write!(f, "{}: {e}", e.code()),
        }
    }
}

impl std::error::Error for CliError {}

impl From<forster_core::Error> for CliError {
    fn from(e: forster_core::Error) -> Self {
        CliError::Physics(e)
    }
}
