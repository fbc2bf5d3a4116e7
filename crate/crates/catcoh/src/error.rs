use thiserror::Error;

/// Error type shared by all engine operations.
///
/// The CLI maps variants to exit codes: validation failures exit 1,
/// mathematical obstructions exit 2, malformed input exits 3.
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("validation failed: {0}")]
    Validation(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A construction is blocked by a nonzero cohomological obstruction.
    /// Carries a human-readable location and the invariant factors of the
    /// group where the residual class lives, plus its coordinates.
    #[error("obstruction: {message}")]
    Obstruction {
        message: String,
        residual_group: Vec<String>,
        residual_class: Vec<String>,
    },

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;

impl EngineError {
    pub fn validation(msg: impl Into<String>) -> Self {
        EngineError::Validation(msg.into())
    }
    pub fn unsupported(msg: impl Into<String>) -> Self {
        EngineError::Unsupported(msg.into())
    }
    pub fn malformed(msg: impl Into<String>) -> Self {
        EngineError::Malformed(msg.into())
    }
    pub fn dimension(msg: impl Into<String>) -> Self {
        EngineError::Dimension(msg.into())
    }

    /// Exit code used by the batch front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            EngineError::Validation(_) | EngineError::Dimension(_) => 1,
            EngineError::Obstruction { .. } => 2,
            EngineError::Malformed(_) | EngineError::Unsupported(_) => 3,
        }
    }
}

/// Report produced by the report-valued validators.
///
/// `ok()` means every checked instance passed; otherwise `failures`
/// lists located violations, first violation first.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub failures: Vec<String>,
    pub checked: usize,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }
    pub fn tick(&mut self) {
        self.checked += 1;
    }
    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
    pub fn into_result(self) -> Result<()> {
        if self.ok() {
            Ok(())
        } else {
            Err(EngineError::Validation(self.failures.join("; ")))
        }
    }
}
