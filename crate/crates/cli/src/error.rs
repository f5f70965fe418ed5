use thiserror::Error;

/// Failures, grouped by the exit code they map to.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("resource guard: {0}")]
    Guard(String),
    #[error("invariant violation: {0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl From<clutterlab::Error> for CliError {
    fn from(e: clutterlab::Error) -> Self {
        match e {
            clutterlab::Error::InvariantViolation(msg) => CliError::Violation(msg),
            e if e.is_resource_guard() => CliError::Guard(e.to_string()),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_errors_map_to_exit_codes() {
        let code = |e: clutterlab::Error| CliError::from(e).exit_code();
        assert_eq!(code(clutterlab::Error::InvariantViolation("x".into())), 1);
        assert_eq!(code(clutterlab::Error::EmptyEdge), 2);
        assert_eq!(code(clutterlab::Error::TooManyEdges { edges: 30, limit: 20 }), 3);
        assert_eq!(code(clutterlab::Error::TooLarge { what: "n", size: 9, limit: 7 }), 3);
    }
}
