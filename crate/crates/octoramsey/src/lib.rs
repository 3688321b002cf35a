//! Command-line front end, table files and parallel sweeps for
//! [`octoramsey_core`].

pub mod cli;
pub mod sweep;
pub mod table_io;
