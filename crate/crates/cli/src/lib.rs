//! JSON front end for `neel-core`: job parsing, command dispatch and
//! report rendering behind the `neel` binary.

pub mod args;
pub mod error;
pub mod job;
pub mod output;
pub mod run;

pub use error::CliError;
pub use job::{Command, Job, JobSpec};
pub use output::to_json;
pub use run::{run, run_spec, Outcome};
