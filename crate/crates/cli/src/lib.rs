//! Command-line front end for `affine_rigidity`: JSON documents, atomic
//! file output and the `affrig` subcommands.

pub mod commands;
pub mod docs;
pub mod error;
pub mod io;

pub use commands::{run, Cli};
pub use error::{exit, CliError};
