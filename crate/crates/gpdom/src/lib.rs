//! Exact, certificate-producing domination toolkit for generalized Petersen
//! graphs `P(n,2)` with a faulty (deleted) vertex.
//!
//! The crate provides:
//!
//! - the graph model with vertex/edge deletions and its rotation/reflection
//!   symmetries ([`graph`]),
//! - the block calculus: per-block occupancy profiles, couple numbers, and
//!   the Type I/II/III classification of dominating sets ([`analysis`]),
//! - two independent exact solvers (branch-and-bound and a cyclic frontier
//!   dynamic program), all-optima enumeration, and certificate verification
//!   ([`solver`]),
//! - the constructive set-rewriting machinery: exchanges, Type I
//!   normalization, couple reduction, and canonicalization ([`normalize`]),
//! - explicit optimal dominating sets for the fault-free and faulted
//!   families ([`construct`]),
//! - empirical alteration (`mu`) and bondage searches ([`robustness`]).

pub mod analysis;
pub mod bitset;
pub mod construct;
mod error;
pub mod formula;
pub mod graph;
pub mod normalize;
pub mod robustness;
pub mod solver;

pub use error::Error;
