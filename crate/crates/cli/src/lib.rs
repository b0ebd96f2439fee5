//! Front end for `t0kit`: the `.space` format, report rendering, DOT export
//! and the subcommands.

pub mod commands;
pub mod dot;
pub mod dsl;
pub mod error;
pub mod filter;
pub mod report;
