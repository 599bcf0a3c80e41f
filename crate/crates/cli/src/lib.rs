//! Command-line front end: expression parsing, subcommand dispatch and
//! JSON reporting over the exact-arithmetic core.

pub mod commands;
pub mod parse;
pub mod report;

pub use commands::{run, Cli, Cmd};
pub use parse::{parse_oneform, parse_polynomial, parse_scalar, ParseError};
pub use report::{CliError, Report};
