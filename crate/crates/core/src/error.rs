// SPDX-License-Identifier: MIT OR Apache-2.0

use crate::C64;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty coefficient list")]
    EmptySeries,

    #[error("series is not normalized: a1 = {0}")]
    NotNormalized(C64),

    #[error("series must have zero constant term, got {0}")]
    NonZeroConstant(C64),

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("parameter {name} = {value} violates {constraint}")]
    Parameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("no root bracketed in (0,1)")]
    NoRootBracketed,

    #[error("no positive radius: image leaves the domain already at r = {0}")]
    NoPositiveRadius(f64),

    #[error("unknown {what} `{name}`; available: {available}")]
    Unknown {
        what: &'static str,
        name: String,
        available: String,
    },

    #[error("closed form of `{name}` has a pole or is undefined at z = {z}")]
    Pole { name: String, z: C64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(name: &'static str, value: f64, constraint: &'static str) -> Self {
        Error::Parameter {
            name,
            value,
            constraint,
        }
    }

    pub(crate) fn unknown<I, S>(what: &'static str, name: &str, available: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let list: Vec<String> = available
            .into_iter()
            .map(|s| s.as_ref().to_string())
            .collect();
        Error::Unknown {
            what,
            name: name.to_string(),
            available: list.join(", "),
        }
    }
}
