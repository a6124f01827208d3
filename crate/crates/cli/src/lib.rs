//! Batch verification of catalog cases and presentation files, with JSON reports.

pub mod file;
pub mod report;
pub mod run;
