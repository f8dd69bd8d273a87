use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the range where the formulas are defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quantity that must be an integer (or positive) came out otherwise.
    #[error("integrity error: {0}")]
    Integrity(String),

    /// Two independent computation routes disagree.
    #[error("consistency error: {0}")]
    Consistency(String),

    /// A divisor and a curve from different families were paired.
    #[error("context mismatch: divisor from {divisor}, curve from {curve}")]
    ContextMismatch { divisor: String, curve: String },

    #[error("unsupported export format `{0}`")]
    UnsupportedFormat(String),

    #[error("export failed: {0}")]
    Export(String),

    /// Any of the above, tagged with the family it was raised for.
    #[error("{label}: {source}")]
    Family {
        label: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn in_family(self, label: impl Into<String>) -> Self {
        Error::Family {
            label: label.into(),
            source: Box::new(self),
        }
    }

    /// True when the error (or its wrapped cause) is a failed cross-check.
    pub fn is_consistency(&self) -> bool {
        match self {
            Error::Consistency(_) | Error::Integrity(_) => true,
            Error::Family { source, .. } => source.is_consistency(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
