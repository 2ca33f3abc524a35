//! Command-line front end: `verify`, `classify`, `rep-table`, `evolve`,
//! `spectrum`, each a thin wrapper over the library.

pub mod commands;
pub mod config;
pub mod report;

pub use commands::{
    cmd_classify, cmd_evolve, cmd_rep_table, cmd_spectrum, cmd_verify, run, Cli, Command,
};
pub use config::{GridConfig, PacketConfig, PacketSpace, RunConfig};
