//! Contention-aware latency prediction and component-level scheduling for
//! multi-stage online services, plus a deterministic discrete-event simulator
//! used to evaluate scheduling policies against redundancy/reissue baselines.
//!
//! The crate is `no_std` + `alloc`: everything here is pure computation over
//! in-memory values. File formats, CLI, and wall-clock timing live in the
//! companion `pcs-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod contention;
pub mod matrix;
pub mod model;
pub mod queueing;
pub mod scheduler;
pub mod sim;
pub mod topology;

mod math;

pub use contention::{ContentionVector, Resource};
pub use matrix::{ClusterState, MigrationRole, NodeState, PerformanceMatrix};
pub use model::{CombinedModel, ModelError, ResourceRegression, TrainingSample};
pub use queueing::{ComponentLoad, Latency, QueueingError};
pub use scheduler::{AllocationPlan, Migration, SchedulerConfig};
pub use topology::{ComponentId, NodeId, ServiceTopology};
