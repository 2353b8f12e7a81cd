use serde::Serialize;
use thiserror::Error;

/// Everything that can go wrong inside the engine.
///
/// Domain errors (bad input, order violations, wrong shapes) are separated
/// from resource-cap errors so callers can map them to distinct exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("order violation: {lo} is not below {hi} in the {side} weak order")]
    OrderViolation { lo: String, hi: String, side: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("resource cap exceeded for {what}: limit {limit}, reached {reached}")]
    Cap {
        what: &'static str,
        limit: usize,
        reached: usize,
    },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Cap { .. })
    }

    /// Short machine-readable tag used in the JSON error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SizeMismatch(..) => "size_mismatch",
            Error::OrderViolation { .. } => "order_violation",
            Error::Invalid(_) => "invalid_input",
            Error::Cap { .. } => "resource_cap",
            Error::Internal(_) => "internal",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Obj<'a> {
            error: &'a str,
            message: String,
        }
        serde_json::to_value(Obj {
            error: self.kind(),
            message: self.to_string(),
        })
        .expect("error object serializes")
    }
}
