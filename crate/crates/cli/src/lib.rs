//! Command-line front end: problem files in, analysis reports out.
//!
//! A problem file names a system of difference equations, a finite group
//! of shift-algebra automorphisms, and a window/pad schedule.  Each
//! subcommand fills the matching section of a [`report::Report`].  Exit
//! codes: 0 for a completed analysis, 1 for unusable input, 2 for a
//! computation that could not be carried out, 3 when a scaling
//! coefficient is not a root of unity (so no invariant sublattice
//! exists).

pub mod problem;
pub mod report;
pub mod run;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// The problem file or command line is unusable.
    #[error("{0}")]
    Input(String),
    /// The file could not be read.
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    /// The computation failed.
    #[error(transparent)]
    Math(#[from] symlat_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => 1,
            CliError::Math(symlat_core::Error::NonTorsionCoefficient) => 3,
            CliError::Math(_) => 2,
        }
    }
}
