//! Files, threads, clocks and the command line around `quartic-core`.

pub mod cli;
pub mod corpus;
pub mod io;
pub mod parallel;
pub mod pattern;
pub mod report;
