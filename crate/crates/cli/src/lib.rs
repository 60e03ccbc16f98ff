//! File formats and subcommands of the `d2color` tool.

pub mod commands;
pub mod document;
pub mod dot;
pub mod svg;
pub mod trace_file;
