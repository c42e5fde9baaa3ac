use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sgcloc::audit::{export_audit, preset_points};
use sgcloc::config::parse_outputs;
use sgcloc::{parse_config_with_preset, run_config, write_outputs, ConfigError, FigurePreset, RunError, PRESETS};

/// Two-dimensional atom-localization maps from probe absorption.
#[derive(Parser)]
#[command(name = "sgcloc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan a map and write the requested outputs.
    Run {
        /// Figure preset (fig2a-d, fig4a-d, fig6a-d); overrides a preset line in --config.
        #[arg(long)]
        preset: Option<String>,
        /// Configuration file (`key = value` lines).
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Nodes per axis (odd, >= 3).
        #[arg(long)]
        grid: Option<usize>,
        /// Spatial extent: half = [-1/4, 1/4], full = [-1/2, 1/2] wavelengths.
        #[arg(long, value_enum)]
        domain: Option<Domain>,
        /// Comma-separated subset of csv,heatmap,peaks,audit.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Compare the printed first-order formula with the numeric oracle.
    Audit {
        /// Preset name, or `all`.
        #[arg(long)]
        preset: String,
        /// Sub-grid points per axis.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Domain {
    Half,
    Full,
}

impl Domain {
    fn half_width(self) -> f64 {
        match self {
            Domain::Half => 0.25,
            Domain::Full => 0.5,
        }
    }
}

fn config_error(e: ConfigError) -> RunError {
    RunError::Config(e)
}

fn run(
    preset: Option<String>,
    config: Option<PathBuf>,
    out_dir: PathBuf,
    grid: Option<usize>,
    domain: Option<Domain>,
    emit: Option<String>,
) -> Result<(), RunError> {
    let text = match &config {
        Some(path) => std::fs::read_to_string(path).map_err(|source| RunError::Io { path: path.clone(), source })?,
        None => String::new(),
    };
    let mut cfg = parse_config_with_preset(&text, preset.as_deref()).map_err(config_error)?;
    if let Some(n) = grid {
        cfg.grid.nx = n;
        cfg.grid.ny = n;
    }
    if let Some(d) = domain {
        let h = d.half_width();
        (cfg.grid.x_min, cfg.grid.x_max, cfg.grid.y_min, cfg.grid.y_max) = (-h, h, -h, h);
    }
    if let Some(list) = emit {
        cfg.outputs = parse_outputs(&list).map_err(|message| config_error(ConfigError::Parse { line: 0, message }))?;
    }
    cfg.validate()?;

    print!("{}", cfg.echo());
    let out = run_config(&cfg)?;
    for path in write_outputs(&cfg, &out, &out_dir)? {
        eprintln!("wrote {}", path.display());
    }
    eprintln!("{} peaks above {:.3e}", out.peaks.peaks.len(), out.peaks.threshold);
    Ok(())
}

fn audit(preset: &str, samples: usize, out: Option<PathBuf>) -> Result<(), RunError> {
    let selected: Vec<&FigurePreset> = if preset == "all" {
        PRESETS.iter().collect()
    } else {
        vec![FigurePreset::find(preset)
            .ok_or_else(|| config_error(ConfigError::UnknownPreset { line: 0, name: preset.to_string() }))?]
    };
    if samples == 0 {
        return Err(config_error(ConfigError::Range("samples must be >= 1".into())));
    }
    let points: Vec<_> = selected.into_iter().flat_map(|p| preset_points(p, samples)).collect();
    let report = export_audit(&points);
    match out {
        Some(path) => std::fs::write(&path, report).map_err(|source| RunError::Io { path, source }),
        None => {
            print!("{report}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Run { preset, config, out_dir, grid, domain, emit } => run(preset, config, out_dir, grid, domain, emit),
        Command::Audit { preset, samples, out } => audit(&preset, samples, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
