//! File-driven front end for the partact toolkit: parse a partial-action
//! spec from JSON, run an analysis, render the result as text, JSON or
//! TSV.

use thiserror::Error;

pub mod render;
pub mod run;
pub mod spec;

pub use run::{run, Format, Outcome, Request};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("schema error at {pointer:?}: {message}")]
    Schema { pointer: String, message: String },
    /// The file parses but does not describe a well-formed group or action.
    #[error("{message}")]
    Invalid { message: String },
    #[error(transparent)]
    Core(#[from] partact_core::Error),
}
