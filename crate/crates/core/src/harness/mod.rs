//! Certificates, run configuration and the command-line subcommands.

pub mod certificate;
pub mod commands;
pub mod config;

pub use certificate::{certificate_validate, Certificate, Instance};
pub use commands::{CommandOutput, ExitCode};
pub use config::{order_cap_from_env, RunConfig, MAX_ORDER_VAR};
