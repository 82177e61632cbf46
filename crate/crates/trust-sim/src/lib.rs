//! Deterministic simulation of opinion propagation through a network
//! of partially honest agents.
//!
//! A run builds a random directed network whose agents each carry a
//! hidden probability of answering queries truthfully, lets every
//! agent bootstrap trustworthiness opinions about its neighbors from
//! repeated exchanges, and then sends explorers through the network.
//! An explorer asks its connections for their connections and for
//! their opinions about agents it does not know yet, and derives its
//! own opinion of each newly discovered agent twice from the same
//! answers: once through the classical discount-and-fuse pipeline and
//! once through a candidate discount operator with weighted fusion.
//! Each discovered (or undiscoverable) agent yields one record holding
//! the distances of both derived opinions from the ground truth.
//!
//! Every random decision draws from a stream derived by hashing the
//! master seed together with the run, network, bootstrap, and
//! exploration coordinates, so results are reproducible bit for bit
//! regardless of execution order or parallelism.

pub mod bootstrap;
pub mod config;
pub mod error;
pub mod explore;
pub mod network;
pub mod record;
pub mod rng;
pub mod runner;

pub use bootstrap::{bootstrap, KnowledgeBase};
pub use config::SimConfig;
pub use error::SimError;
pub use explore::{explore, sample_simplex};
pub use network::{build_network, AgentSpec};
pub use record::{ExplorationRecord, CSV_HEADER};
pub use runner::run_experiment;
