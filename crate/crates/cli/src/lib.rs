//! Command-line front end and exchange formats for `arq-core`.
//!
//! Quivers are exported as JSON (schema 1, exact integer coordinates over
//! `d`), Graphviz DOT or plain text. The `suites` module holds the checks run
//! by `arq verify` and by the acceptance test.

pub mod cli;
pub mod doc;
pub mod error;
pub mod suites;

pub use cli::{format_word, parse_word, run};
pub use doc::QuiverDocument;
pub use error::{CliError, CliResult};
