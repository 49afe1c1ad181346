//! Command-line front end and file formats for `d2groups-core`.
//!
//! The binary is a thin wrapper around [`cli::run`]; the commands themselves
//! live in [`commands`] and return JSON documents built in [`report`].

pub mod cli;
pub mod commands;
pub mod input;
pub mod report;

pub use commands::ExitCode;
