//! Library side of the `hetcat` command: input loading, the commands and
//! the JSON run report.

pub mod commands;
pub mod input;
pub mod report;
