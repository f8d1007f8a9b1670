//! Experiment harness: multi-trial runs over instance sets, durable CSV
//! records, and the analysis metrics (summary statistics, run-time
//! distributions, Borda counts, head-to-head scores).

pub mod instances;
pub mod metrics;
pub mod rows;
pub mod runner;
pub mod spec;

pub use instances::{load_bounds, load_instances, Instance, InstanceData};
pub use metrics::{borda, head_to_head, per_instance_mean_gap, rtd, summarize, RtdCurve, Summary};
pub use rows::{read_rows, read_traces, write_rows, write_traces, TrialRow, TrialTrace};
pub use runner::{run_experiment, TrialOutcome};
pub use spec::{Algorithm, ExperimentSpec, Problem};
