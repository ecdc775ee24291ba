//! IO companion to `wkwords-core`: report formats and the sweep driver
//! used by the `wkwords` command-line tool.

pub mod render;
pub mod sweep;
