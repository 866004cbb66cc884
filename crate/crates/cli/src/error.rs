use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
    #[error("degenerate data: {0}")]
    Degenerate(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 1,
            Self::Input(_) => 2,
            Self::Degenerate(_) => 3,
        }
    }
}

impl From<dentcurve::Error> for CliError {
    fn from(err: dentcurve::Error) -> Self {
        match err {
            dentcurve::Error::Decode(e) => Self::Input(e.to_string()),
            dentcurve::Error::InvalidSeverity(_) | dentcurve::Error::InvalidShape(_) | dentcurve::Error::OutOfCanvas { .. } => {
                Self::Usage(err.to_string())
            }
            other => Self::Degenerate(other.to_string()),
        }
    }
}
