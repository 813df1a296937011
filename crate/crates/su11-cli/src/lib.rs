//! Library side of the command-line tool: configuration, input parsing, and
//! the verification suites, shared between the binary and its tests.

pub mod config;
pub mod input;
pub mod suites;
