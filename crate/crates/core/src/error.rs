use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type error in {context}: expected {expected}, found {found}")]
    Type {
        context: String,
        expected: String,
        found: String,
    },
    #[error("model {model} lacks capability `{capability}`")]
    Capability { model: String, capability: String },
    #[error("usage error: {0}")]
    Usage(String),
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    #[error("validation failed ({law}): {detail}")]
    Validation { law: String, detail: String },
    #[error("bundle component {component} is inconsistent at object {object}: {detail}")]
    Bundle {
        component: String,
        object: String,
        detail: String,
    },
    #[error("morphism {dom} -> {cod} is not invertible")]
    NotInvertible { dom: String, cod: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn type_mismatch(
        context: impl Into<String>,
        expected: impl std::fmt::Debug,
        found: impl std::fmt::Debug,
    ) -> Self {
        Error::Type {
            context: context.into(),
            expected: format!("{expected:?}"),
            found: format!("{found:?}"),
        }
    }

    pub fn capability(model: impl Into<String>, capability: impl Into<String>) -> Self {
        Error::Capability {
            model: model.into(),
            capability: capability.into(),
        }
    }

    pub fn validation(law: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Validation {
            law: law.into(),
            detail: detail.into(),
        }
    }

    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
