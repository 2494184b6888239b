//! Confronts the published extremal claims with exact computation.
//!
//! Each suite produces a [`VerificationReport`]; a suite fails when any of
//! its cases fails. Expected values come from transcribed data files or from
//! closed forms, never from the code path that produces the computed side.

pub mod data;
pub mod report;
mod suites;

pub use report::{CaseBuilder, CaseRecord, Status, Summary, Value, VerificationReport};
pub use suites::{run_all, run_named, run_suite, Suite, SuiteError, SuiteOptions, DEFAULT_SEED, IDENTITY_LIMIT};
