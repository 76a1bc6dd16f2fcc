use thiserror::Error;

/// Numerical failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("DomainError: {0}")]
    Domain(String),
    #[error("PoleError: {0}")]
    Pole(String),
    #[error("ConvergenceError: {0}")]
    Convergence(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::Pole(_) => "PoleError",
            Error::Convergence(_) => "ConvergenceError",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }

    pub(crate) fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_starts_with_kind() {
        let e = Error::pole("gamma at -2");
        assert_eq!(e.kind(), "PoleError");
        assert!(e.to_string().starts_with("PoleError"));
        assert!(Error::domain("x").to_string().starts_with("DomainError"));
        assert!(Error::convergence("x")
            .to_string()
            .starts_with("ConvergenceError"));
    }
}
