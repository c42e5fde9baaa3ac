//! Scan, analyse and write a configured run.

use std::fs::{self, File};
use std::io::{self, BufWriter};
use std::path::{Path, PathBuf};

use sgcloc_core::{
    find_extrema_relative, quadrant_distribution, scan_map, FieldError, LocalizationMap, PeakSet, QuadrantSummary,
};
use thiserror::Error;

use crate::audit::{export_audit, sample_points};
use crate::config::{ConfigError, Output, RunConfig};
use crate::export::{write_csv, write_heatmap, write_peaks};
use crate::preset::FigurePreset;

/// Sub-grid size per axis for the `audit` output of a run.
pub const RUN_AUDIT_SAMPLES: usize = 5;

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Field(FieldError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl RunError {
    /// 2 for a solver failure, 1 for everything the user can fix in the
    /// configuration or command line (including an unwritable output
    /// directory).
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Field(FieldError::Solver { .. }) => 2,
            _ => 1,
        }
    }
}

impl From<FieldError> for RunError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::Solver { .. } => RunError::Field(e),
            other => RunError::Config(ConfigError::Range(other.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub map: LocalizationMap,
    pub peaks: PeakSet,
    pub summary: QuadrantSummary,
}

pub fn run_config(cfg: &RunConfig) -> Result<RunOutput, RunError> {
    cfg.validate()?;
    let map = scan_map(&cfg.base, &cfg.wave, &cfg.grid)?;
    let peaks = find_extrema_relative(&map, cfg.prominence);
    let summary = quadrant_distribution(&map);
    Ok(RunOutput { map, peaks, summary })
}

/// Scans a shipped preset on the default 201 × 201 grid.
pub fn run_preset(name: &str) -> Result<RunOutput, RunError> {
    let p = FigurePreset::find(name)
        .ok_or_else(|| ConfigError::UnknownPreset { line: 0, name: name.to_string() })?;
    run_config(&RunConfig::from_preset(p))
}

fn create(path: &Path) -> Result<BufWriter<File>, RunError> {
    File::create(path).map(BufWriter::new).map_err(|source| RunError::Io { path: path.to_path_buf(), source })
}

/// Writes `<stem>.cfg` (the resolved configuration) and every requested
/// output into `dir`; returns the written paths.
pub fn write_outputs(cfg: &RunConfig, out: &RunOutput, dir: &Path) -> Result<Vec<PathBuf>, RunError> {
    fs::create_dir_all(dir).map_err(|source| RunError::Io { path: dir.to_path_buf(), source })?;
    let stem = cfg.preset.as_deref().unwrap_or("run");
    let io_err = |path: &Path| {
        let path = path.to_path_buf();
        move |source| RunError::Io { path, source }
    };
    let mut written = Vec::new();

    let path = dir.join(format!("{stem}.cfg"));
    fs::write(&path, cfg.echo()).map_err(io_err(&path))?;
    written.push(path);

    for o in &cfg.outputs {
        let path = match o {
            Output::Csv => dir.join(format!("{stem}.csv")),
            Output::Heatmap => dir.join(format!("{stem}.ppm")),
            Output::Peaks => dir.join(format!("{stem}.peaks.txt")),
            Output::Audit => dir.join(format!("{stem}.audit.txt")),
        };
        match o {
            Output::Csv => write_csv(&out.map, create(&path)?),
            Output::Heatmap => write_heatmap(&out.map, create(&path)?),
            Output::Peaks => write_peaks(&out.peaks, &out.summary, create(&path)?),
            Output::Audit => {
                let points = sample_points(stem, &cfg.base, &cfg.wave, &cfg.grid, RUN_AUDIT_SAMPLES);
                fs::write(&path, export_audit(&points))
            }
        }
        .map_err(io_err(&path))?;
        written.push(path);
    }
    Ok(written)
}
