//! Graph files, main-factor descriptors, run reports and the subcommands
//! behind the `grundy` binary.

pub mod commands;
pub mod format;
pub mod report;
pub mod spec;

pub use format::{parse_graph, read_graph_file, write_graph, ParseError};
pub use report::{exit, CliError, RunReport};
pub use spec::MainFactorSpec;
