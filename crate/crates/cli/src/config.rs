//! Line-oriented run configuration.
//!
//! ```text
//! # comment
//! preset = fig6c
//! theta  = 0.5883pi     # angles may carry a `pi` suffix
//! nx     = 101
//! outputs = csv, heatmap
//! ```
//!
//! A `preset` line is applied first wherever it appears; every other key
//! then overrides the preset's value. Missing keys keep their defaults.

use std::fmt::Write as _;
use std::str::FromStr;

use sgcloc_core::analysis::DEFAULT_PROMINENCE_FRACTION;
use sgcloc_core::{GridSpec, StandingWaveSpec, SystemParams};
use thiserror::Error;

use crate::preset::{self, FigurePreset};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: unknown preset `{name}` (expected one of {})", preset::names().collect::<Vec<_>>().join(", "))]
    UnknownPreset { line: usize, name: String },
    #[error("out of range: {0}")]
    Range(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Output {
    Csv,
    Heatmap,
    Peaks,
    Audit,
}

impl Output {
    pub fn name(self) -> &'static str {
        match self {
            Output::Csv => "csv",
            Output::Heatmap => "heatmap",
            Output::Peaks => "peaks",
            Output::Audit => "audit",
        }
    }
}

impl FromStr for Output {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Output::Csv),
            "heatmap" => Ok(Output::Heatmap),
            "peaks" => Ok(Output::Peaks),
            "audit" => Ok(Output::Audit),
            other => Err(format!("unknown output `{other}` (expected csv, heatmap, peaks or audit)")),
        }
    }
}

/// Parses a comma-separated output list; an empty string selects nothing.
pub fn parse_outputs(s: &str) -> Result<Vec<Output>, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let o: Output = item.parse()?;
        if !out.contains(&o) {
            out.push(o);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub preset: Option<String>,
    pub base: SystemParams,
    pub wave: StandingWaveSpec,
    pub grid: GridSpec,
    /// Peak threshold as a fraction of the map's max |value|.
    pub prominence: f64,
    pub outputs: Vec<Output>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            preset: None,
            base: SystemParams::default(),
            wave: StandingWaveSpec::default(),
            grid: GridSpec::default(),
            prominence: DEFAULT_PROMINENCE_FRACTION,
            outputs: vec![Output::Csv, Output::Heatmap, Output::Peaks],
        }
    }
}

impl RunConfig {
    pub fn from_preset(p: &FigurePreset) -> Self {
        Self { preset: Some(p.name.to_string()), base: p.params(), wave: p.wave(), ..Default::default() }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.base.validate().map_err(|e| ConfigError::Range(e.to_string()))?;
        if !(self.base.omega_p > 0.0) {
            return Err(ConfigError::Range(format!("omega_p = {} must be > 0", self.base.omega_p)));
        }
        self.wave.validate().map_err(|e| ConfigError::Range(e.to_string()))?;
        self.grid.validate().map_err(|e| ConfigError::Range(e.to_string()))?;
        if !(0.0..=1.0).contains(&self.prominence) {
            return Err(ConfigError::Range(format!("prominence = {} must lie in [0, 1]", self.prominence)));
        }
        Ok(())
    }

    /// The resolved configuration in the input grammar. Reals are written in
    /// shortest round-trip form, so parsing the echo reproduces `self`
    /// exactly (apart from the preset name, which is kept as a comment).
    pub fn echo(&self) -> String {
        let mut s = String::new();
        match &self.preset {
            Some(name) => writeln!(s, "# resolved configuration (preset {name})").unwrap(),
            None => writeln!(s, "# resolved configuration").unwrap(),
        }
        let b = &self.base;
        let w = &self.wave;
        let g = &self.grid;
        for (k, v) in [
            ("gamma1", b.gamma1),
            ("gamma2", b.gamma2),
            ("omega_p", b.omega_p),
            ("delta_p", b.delta_p),
            ("delta_c", b.delta_c),
            ("theta", b.theta),
            ("omega0", w.omega0),
            ("kappa1", w.kappa1),
            ("kappa2", w.kappa2),
            ("delta_phase", w.delta_phase),
            ("eta_phase", w.eta_phase),
            ("x_min", g.x_min),
            ("x_max", g.x_max),
            ("y_min", g.y_min),
            ("y_max", g.y_max),
        ] {
            writeln!(s, "{k} = {v}").unwrap();
        }
        writeln!(s, "nx = {}", g.nx).unwrap();
        writeln!(s, "ny = {}", g.ny).unwrap();
        writeln!(s, "prominence = {}", self.prominence).unwrap();
        let outs: Vec<_> = self.outputs.iter().map(|o| o.name()).collect();
        writeln!(s, "outputs = {}", outs.join(",")).unwrap();
        s
    }
}

/// A real literal, optionally a multiple of π: `1.5`, `-2e-3`, `0.5pi`, `pi`, `-pi`.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let v = match t.strip_suffix("pi") {
        Some(coef) => {
            let coef = coef.trim_end();
            let c = match coef {
                "" | "+" => 1.0,
                "-" => -1.0,
                _ => coef.parse::<f64>().map_err(|_| format!("invalid number `{t}`"))?,
            };
            c * std::f64::consts::PI
        }
        None => t.parse::<f64>().map_err(|_| format!("invalid number `{t}`"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{t}` is not finite"))
    }
}

fn parse_count(s: &str) -> Result<usize, String> {
    s.trim().parse::<usize>().map_err(|_| format!("invalid sample count `{}`", s.trim()))
}

struct Entry<'a> {
    line: usize,
    key: &'a str,
    value: &'a str,
}

fn split_lines(text: &str) -> Result<Vec<Entry<'_>>, ConfigError> {
    let mut entries: Vec<Entry> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body.split_once('=').ok_or_else(|| ConfigError::Parse {
            line,
            message: format!("expected `key = value`, found `{body}`"),
        })?;
        let key = key.trim();
        if key.is_empty() {
            return Err(ConfigError::Parse { line, message: "missing key".into() });
        }
        if let Some(prev) = entries.iter().find(|e| e.key == key) {
            return Err(ConfigError::Parse {
                line,
                message: format!("duplicate key `{key}` (first set on line {})", prev.line),
            });
        }
        entries.push(Entry { line, key, value: value.trim() });
    }
    Ok(entries)
}

fn apply(cfg: &mut RunConfig, e: &Entry) -> Result<(), ConfigError> {
    let real = || parse_real(e.value).map_err(|message| ConfigError::Parse { line: e.line, message });
    let count = || parse_count(e.value).map_err(|message| ConfigError::Parse { line: e.line, message });
    match e.key {
        "gamma1" => cfg.base.gamma1 = real()?,
        "gamma2" => cfg.base.gamma2 = real()?,
        "omega_p" => cfg.base.omega_p = real()?,
        "delta_p" => cfg.base.delta_p = real()?,
        "delta_c" => cfg.base.delta_c = real()?,
        "theta" => cfg.base.theta = real()?,
        "omega0" => cfg.wave.omega0 = real()?,
        "kappa1" => cfg.wave.kappa1 = real()?,
        "kappa2" => cfg.wave.kappa2 = real()?,
        "delta_phase" => cfg.wave.delta_phase = real()?,
        "eta_phase" => cfg.wave.eta_phase = real()?,
        "x_min" => cfg.grid.x_min = real()?,
        "x_max" => cfg.grid.x_max = real()?,
        "y_min" => cfg.grid.y_min = real()?,
        "y_max" => cfg.grid.y_max = real()?,
        "nx" => cfg.grid.nx = count()?,
        "ny" => cfg.grid.ny = count()?,
        "prominence" => cfg.prominence = real()?,
        "outputs" => {
            cfg.outputs = parse_outputs(e.value).map_err(|message| ConfigError::Parse { line: e.line, message })?
        }
        other => return Err(ConfigError::UnknownKey { line: e.line, key: other.to_string() }),
    }
    Ok(())
}

/// Parses and validates a configuration document.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    parse_config_with_preset(text, None)
}

/// As [`parse_config`], with `preset` (when given) replacing any `preset`
/// line of the document.
pub fn parse_config_with_preset(text: &str, preset: Option<&str>) -> Result<RunConfig, ConfigError> {
    let entries = split_lines(text)?;
    let from_doc = entries.iter().find(|e| e.key == "preset").map(|e| (e.line, e.value));
    let chosen = match (preset, from_doc) {
        (Some(name), _) => Some((0, name)),
        (None, doc) => doc,
    };
    let mut cfg = match chosen {
        Some((line, name)) => {
            let p = FigurePreset::find(name)
                .ok_or_else(|| ConfigError::UnknownPreset { line, name: name.to_string() })?;
            RunConfig::from_preset(p)
        }
        None => RunConfig::default(),
    };
    for e in entries.iter().filter(|e| e.key != "preset") {
        apply(&mut cfg, e)?;
    }
    cfg.validate()?;
    Ok(cfg)
}
