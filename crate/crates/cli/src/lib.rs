//! Library side of the `ordrep` command: input files and reports.

pub mod report;
pub mod spec;
