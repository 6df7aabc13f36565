//! Instance selection for nearest-neighbour classifiers through
//! approval-based multi-winner elections.
//!
//! Every training instance votes for the instances in its local set (the
//! same-class instances strictly closer than its nearest enemy), and a
//! proportional voting rule elects the reduced training set. The crate
//! provides the rules, brute-force checkers for the representation axioms
//! they promise, KNN evaluation, classical baselines and a cross-validation
//! harness.

pub mod axioms;
pub mod baselines;
pub mod classify;
pub mod data;
pub mod election;
pub mod error;
pub mod harness;
pub mod localset;
pub mod pca;
pub mod rational;
pub mod voting;

pub use data::{load_dataset, Dataset, DistanceMatrix, Instance, LoadOptions};
pub use election::Election;
pub use error::{Error, Result};
pub use localset::{build_election, BallotVariant, LocalSetTable};
pub use rational::Rational;
pub use voting::{Committee, RuleId, RuleTrace};
