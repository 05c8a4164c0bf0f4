//! File formats, search drivers, fixture corpus and reports behind the
//! `choice` command-line tool.

pub mod format;
pub mod search;
pub mod fixtures;
pub mod table2;
pub mod report;
