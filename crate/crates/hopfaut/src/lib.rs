//! File formats, text parsing and the command-line driver for `hopfaut-core`.

pub mod cli;
pub mod format;
pub mod parse;
pub mod verify;
