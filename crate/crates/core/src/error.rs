// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid atom name `{name}`: {reason}")]
    InvalidAtom { name: String, reason: &'static str },

    #[error("malformed c-atom: {0}")]
    MalformedCAtom(String),

    /// An enumeration would exceed the configured size limit.
    #[error("{what} has size {size}, limit is {limit}")]
    Guard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("program is not {class}: {detail}")]
    NotInClass { class: &'static str, detail: String },

    #[error("negated c-atom in a rule body; eliminate negated c-atoms first")]
    NegatedConstraint,

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn guard(what: &'static str, size: usize, limit: usize) -> Self {
        Error::Guard { what, size, limit }
    }

    pub(crate) fn not_in_class(class: &'static str, detail: impl Into<String>) -> Self {
        Error::NotInClass {
            class,
            detail: detail.into(),
        }
    }
}
