//! Analysis pipeline, golden tables, and conjecture suites behind the
//! `zigzag` binary and the acceptance tests.

pub mod analysis;
pub mod tables;
pub mod verify;
