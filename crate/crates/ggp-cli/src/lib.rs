//! Input parsing and output formatting for the command-line front end.

pub mod parser;
pub mod record;
