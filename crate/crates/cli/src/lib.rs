//! Command-line front end for `sgchain-core`: instance documents, JSON reports
//! and verification suites.

pub mod commands;
pub mod instance;
pub mod report;
pub mod verify;
pub mod zoo;
