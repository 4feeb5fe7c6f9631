//! The external surface: wire format, warnings, lemmatization.

pub mod batch;
pub mod json;
pub mod lemmatize;
pub mod warnings;

pub use json::{parse_spec, parse_spec_with, serialize_spec, SpecError};
pub use warnings::{Issue, Warning, WarningKey};
pub use lemmatize::{Candidate, Lemmatizer};
