//! Exact solvers for minimum domination: a general branch-and-bound over
//! arbitrary deleted-vertex/deleted-edge instances, a cyclic frontier dynamic
//! program for structured `P(n,2)` instances, all-optima enumeration, and
//! certificate verification.

mod bnb;
mod dp;
mod enumerate;
mod verify;

pub use bnb::{solve_bnb, solve_bnb_with_limit, BNB_LIVE_LIMIT};
pub use dp::{solve_dp, solve_dp_value};
pub use enumerate::{enumerate_minimum_sets, Enumeration, ENUM_LIVE_LIMIT};
pub use verify::{certificate_json, verify_certificate, VerifyReport};

use crate::analysis::DomSet;
use serde::Serialize;
use std::time::Duration;

/// Which engine produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Engine {
    BnB,
    CyclicDP,
    Constructor,
}

#[derive(Clone, Debug)]
pub struct SolveStats {
    /// Search-tree nodes for the branch-and-bound, stored DP states otherwise.
    pub nodes_or_states: u64,
    pub elapsed: Duration,
}

/// An exact optimum with one verified certificate.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub gamma: usize,
    pub certificate: DomSet,
    pub engine: Engine,
    pub stats: SolveStats,
}
