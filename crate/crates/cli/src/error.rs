use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] edgematch::Error),
    #[error("size guard: {0}; pass --exact or raise --exact-limit")]
    Guard(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for anything wrong with the input, 3 for a guard refusal.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Guard(_) => 3,
            _ => 2,
        }
    }
}
