use thiserror::Error;

use rootgrade_core::coinduce::CoinduceError;
use rootgrade_core::groupfact::GroupError;
use rootgrade_core::liealg::LieAlgebraError;
use rootgrade_core::realize::RealizeError;
use rootgrade_core::rootsys::RootSystemError;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or schema-violating input; `path` points at the field.
    #[error("invalid spec at {path}: {message}")]
    Spec { path: String, message: String },
    #[error("precondition failed: {0}")]
    Math(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn spec(path: impl Into<String>, message: impl ToString) -> Self {
        CliError::Spec {
            path: path.into(),
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Spec { .. } => 2,
            CliError::Math(_) => 3,
            CliError::Internal(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Spec { .. } => "validation",
            CliError::Math(_) => "precondition",
            CliError::Internal(_) => "internal",
        }
    }

    pub fn path(&self) -> Option<&str> {
        match self {
            CliError::Spec { path, .. } => Some(path),
            _ => None,
        }
    }
}

impl From<RootSystemError> for CliError {
    fn from(e: RootSystemError) -> Self {
        CliError::spec("root_system", e)
    }
}

impl From<LieAlgebraError> for CliError {
    fn from(e: LieAlgebraError) -> Self {
        match e {
            LieAlgebraError::Invalid(_) | LieAlgebraError::Inconsistent(_) => CliError::Math(e.to_string()),
            _ => CliError::spec("construction", e),
        }
    }
}

impl From<CoinduceError> for CliError {
    fn from(e: CoinduceError) -> Self {
        match e {
            CoinduceError::InvalidModule(_)
            | CoinduceError::WeightMismatch { .. }
            | CoinduceError::NotARepresentation { .. }
            | CoinduceError::RankMismatch { .. } => CliError::spec("module_E", e),
            CoinduceError::LinAlg(_) | CoinduceError::Inconsistent(_) => CliError::Internal(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<RealizeError> for CliError {
    fn from(e: RealizeError) -> Self {
        match e {
            RealizeError::Coinduce(c) => c.into(),
            RealizeError::LieAlgebra(l) => l.into(),
            RealizeError::LinAlg(_) => CliError::Internal(e.to_string()),
            RealizeError::NotEquivariant { .. } => CliError::Math(e.to_string()),
            _ => CliError::spec("module", e),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::NotInBigCell { .. } | GroupError::NotInvertible | GroupError::NotNilpotent { .. } => {
                CliError::Math(e.to_string())
            }
            _ => CliError::spec("matrix", e),
        }
    }
}
