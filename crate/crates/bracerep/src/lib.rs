//! Exact-arithmetic toolkit for finite skew braces and their linear
//! representations over prime fields.
//!
//! The crate is organized around four layers:
//!
//! * [`linalg`] - dense matrices and canonical subspaces over F_q;
//! * [`brace`] and [`catalog`] - verified skew braces and named families;
//! * [`rep`] - brace representations (a pair of matrix maps tied by a
//!   compatibility relation) and their induced modules over the semidirect
//!   product group Lambda_A;
//! * [`analysis`] - structure theory for those modules: submodules, socle,
//!   composition series, endomorphisms, Clifford-style decompositions and
//!   enumeration of simple modules.
//!
//! Every runnable walkthrough lives in `examples/`; try
//! `cargo run --example verify_brace` first. The `bracerep` binary exposes
//! the same checks as a command line tool with JSON reports.

pub mod algebra;
pub mod analysis;
pub mod brace;
pub mod catalog;
pub mod cli;
pub mod clifford;
pub mod complements;
pub mod fileio;
pub mod linalg;
pub mod rep;
pub mod report;

/// Outcome of an exhaustive check: either the property holds or a concrete
/// witness shows where it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Violated(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }
}
