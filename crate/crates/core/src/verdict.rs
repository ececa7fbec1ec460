use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::superlinalg::{Scalar, SuperMap, SuperVector};

/// Environment variable overriding the size limits of exhaustive checks.
pub const MAX_DIM_ENV: &str = "SUPEROMNI_MAX_DIM";

/// What was left over when an identity failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Vector(SuperVector),
    Scalar(Scalar),
    Map(SuperMap),
    /// A non-numeric failure, e.g. a value of the wrong parity.
    Note(String),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Vector(v) => write!(f, "{v}"),
            Residual::Scalar(s) => write!(f, "{s}"),
            Residual::Map(m) => write!(f, "{m:?}"),
            Residual::Note(n) => write!(f, "{n}"),
        }
    }
}

/// First counterexample found, in lexicographic tuple order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub residual: Residual,
    /// The offending elements themselves, when the tuple is not made of
    /// basis vectors of a fixed space (e.g. vectors of a subspace).
    pub elements: Vec<SuperVector>,
}

/// Outcome of one exhaustive identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub check: String,
    pub checked: usize,
    pub failure: Option<Failure>,
}

impl Verdict {
    pub fn pass(check: impl Into<String>, checked: usize) -> Verdict {
        Verdict {
            check: check.into(),
            checked,
            failure: None,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.failure.is_none()
    }

    pub(crate) fn fail(
        check: impl Into<String>,
        checked: usize,
        indices: Vec<usize>,
        labels: Vec<String>,
        residual: Residual,
    ) -> Verdict {
        Verdict {
            check: check.into(),
            checked,
            failure: Some(Failure {
                indices,
                labels,
                residual,
                elements: Vec::new(),
            }),
        }
    }

    pub(crate) fn with_elements(mut self, elements: Vec<SuperVector>) -> Verdict {
        if let Some(f) = self.failure.as_mut() {
            f.elements = elements;
        }
        self
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} tuples)", self.check, self.checked),
            Some(fl) => write!(
                f,
                "FAIL {} at ({}): residual {}",
                self.check,
                fl.labels.join(", "),
                fl.residual
            ),
        }
    }
}

pub fn all_pass(verdicts: &[Verdict]) -> bool {
    verdicts.iter().all(Verdict::is_pass)
}

/// Size cap for exhaustive tuple loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limit {
    pub max_dim: usize,
}

impl Limit {
    pub const DEFAULT_MAX_DIM: usize = 30;

    /// The default cap, or the value of `SUPEROMNI_MAX_DIM` when set.
    pub fn from_env_or(default: usize) -> Limit {
        let max_dim = std::env::var(MAX_DIM_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(default);
        Limit { max_dim }
    }

    pub fn from_env() -> Limit {
        Limit::from_env_or(Self::DEFAULT_MAX_DIM)
    }

    pub fn unlimited() -> Limit {
        Limit { max_dim: usize::MAX }
    }

    pub fn check(&self, dim: usize) -> Result<()> {
        if dim > self.max_dim {
            Err(AlgebraError::GuardExceeded {
                dim,
                limit: self.max_dim,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Limit {
    fn default() -> Limit {
        Limit {
            max_dim: Self::DEFAULT_MAX_DIM,
        }
    }
}
