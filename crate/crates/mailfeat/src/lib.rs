//! Email feature extraction: parse EML corpora and turn every message into a
//! fixed-width numeric feature vector suitable for machine-learning datasets.
//!
//! The pipeline is: [`eml::parse_eml`] splits a raw message into headers, a
//! MIME tree and the canonical parts (From/To/CC/BCC/Subject/text/HTML body),
//! the `features` modules compute the 140-feature vector over those parts, and
//! [`corpus`] drives whole-folder runs that end in a CSV dataset plus an error
//! log.

pub mod catalog;
pub mod corpus;
pub mod eml;
pub mod extract;
pub mod features;
pub mod lexicon;
pub mod textkit;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
