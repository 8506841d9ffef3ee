//! IO companion for the Teichmüller workbench: text and JSON file formats,
//! machine-readable verification reports, and the check suites driven by the
//! `teich-lab` binary.

pub mod format;
pub mod report;
pub mod suites;
