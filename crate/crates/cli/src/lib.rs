//! Command-line front end: enumeration, verification, export and the full
//! reproduction report.

pub mod commands;
pub mod error;
pub mod io;
pub mod report;

pub use commands::{Format, Output, SceneSpec};
pub use error::CliError;
