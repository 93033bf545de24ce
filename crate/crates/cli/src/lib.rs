//! Command-line front end for `oscbath`: temperature sweeps written as CSV
//! or JSON, J-function probes and zero-point reports.
//!
//! Exit codes: 0 success, 2 invalid configuration, 3 numerical failure,
//! 4 divergent quantity requested.

pub mod config;
mod error;
pub mod report;
pub mod sweep;

pub use config::{parse_config, parse_method_list, ConfigError, SweepConfig, SweepSettings};
pub use error::CliError;
pub use report::{jfun_report, zero_point_report};
pub use sweep::{format_csv, format_json, render, run_sweep, Row, SweepOutput, CSV_HEADER};
