//! File formats, reports, and the command-line driver around
//! [`latfree_core`].

pub mod cli;
pub mod error;
pub mod format;
pub mod parallel;
pub mod report;

pub use error::CliError;
pub use latfree_core;
