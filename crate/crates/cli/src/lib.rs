//! Presets, configuration, exporters and the audit report behind the
//! `sgcloc` command.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod audit;
pub mod config;
pub mod export;
pub mod preset;
pub mod run;

pub use config::{parse_config, parse_config_with_preset, ConfigError, Output, RunConfig};
pub use preset::{FigurePreset, PRESETS};
pub use run::{run_config, run_preset, write_outputs, RunError, RunOutput};
