//! Position-dependent coupling from two crossed standing waves and the
//! resulting probe-absorption map.

use std::f64::consts::TAU;

use thiserror::Error;

use crate::liouvillian::build_liouvillian;
use crate::par;
use crate::params::{ParamError, SystemParams};
use crate::steady::{steady_state, DynamicsError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FieldError {
    #[error("solver failed at (x, y) = ({x}, {y}): {source}")]
    Solver {
        x: f64,
        y: f64,
        #[source]
        source: DynamicsError,
    },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid standing wave: {0}")]
    InvalidWave(String),
    #[error(transparent)]
    Params(#[from] ParamError),
}

/// Two orthogonal standing waves Ω₀[sin(κ₁x + δ) + sin(κ₂y + η)].
///
/// Wave vectors are in units of 2π/λ and positions in units of λ, so
/// κ = 1 gives the phase 2πx.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandingWaveSpec {
    pub omega0: f64,
    pub kappa1: f64,
    pub kappa2: f64,
    pub delta_phase: f64,
    pub eta_phase: f64,
}

impl Default for StandingWaveSpec {
    fn default() -> Self {
        Self { omega0: 10.0, kappa1: 1.0, kappa2: 1.0, delta_phase: 0.0, eta_phase: 0.0 }
    }
}

impl StandingWaveSpec {
    pub fn validate(&self) -> Result<(), FieldError> {
        if !(self.omega0 >= 0.0) || !self.omega0.is_finite() {
            return Err(FieldError::InvalidWave(format!("omega0 = {} must be >= 0", self.omega0)));
        }
        if !(self.kappa1 > 0.0 && self.kappa2 > 0.0) || !(self.kappa1.is_finite() && self.kappa2.is_finite()) {
            return Err(FieldError::InvalidWave(format!(
                "wave vectors must be positive (kappa1 = {}, kappa2 = {})",
                self.kappa1, self.kappa2
            )));
        }
        if !(self.delta_phase.is_finite() && self.eta_phase.is_finite()) {
            return Err(FieldError::InvalidWave("phases must be finite".into()));
        }
        Ok(())
    }
}

pub fn standing_wave_rabi(x: f64, y: f64, spec: &StandingWaveSpec) -> f64 {
    spec.omega0
        * ((TAU * spec.kappa1 * x + spec.delta_phase).sin()
            + (TAU * spec.kappa2 * y + spec.eta_phase).sin())
}

/// Rectangular sampling grid; positions in units of λ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self::square(0.5, 201)
    }
}

impl GridSpec {
    /// [−half_width, half_width]² with `n` nodes per axis.
    pub fn square(half_width: f64, n: usize) -> Self {
        Self { x_min: -half_width, x_max: half_width, y_min: -half_width, y_max: half_width, nx: n, ny: n }
    }

    pub fn validate(&self) -> Result<(), FieldError> {
        let finite = [self.x_min, self.x_max, self.y_min, self.y_max].iter().all(|v| v.is_finite());
        if !finite || !(self.x_min < self.x_max) || !(self.y_min < self.y_max) {
            return Err(FieldError::InvalidGrid(format!(
                "ranges must be finite and increasing (x: {}..{}, y: {}..{})",
                self.x_min, self.x_max, self.y_min, self.y_max
            )));
        }
        for (axis, n) in [("nx", self.nx), ("ny", self.ny)] {
            if n < 3 || n % 2 == 0 {
                return Err(FieldError::InvalidGrid(format!("{axis} = {n} must be odd and >= 3")));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn node(min: f64, max: f64, n: usize, i: usize) -> f64 {
        if n <= 1 {
            return 0.5 * (min + max);
        }
        // centre ± half-span keeps mirrored nodes exact negatives of each
        // other on a symmetric range
        let centre = 0.5 * (min + max);
        let half = 0.5 * (max - min);
        let last = (n - 1) as f64;
        centre + half * ((2 * i) as f64 - last) / last
    }

    pub fn x(&self, i: usize) -> f64 {
        Self::node(self.x_min, self.x_max, self.nx, i)
    }

    pub fn y(&self, j: usize) -> f64 {
        Self::node(self.y_min, self.y_max, self.ny, j)
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / (self.nx.max(2) - 1) as f64
    }

    pub fn dy(&self) -> f64 {
        (self.y_max - self.y_min) / (self.ny.max(2) - 1) as f64
    }
}

/// Im[χ]/α sampled on a grid, stored y-outer: index `j * nx + i`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalizationMap {
    pub grid: GridSpec,
    pub values: Vec<f64>,
    pub params: SystemParams,
    pub wave: StandingWaveSpec,
}

impl LocalizationMap {
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.grid.nx + i]
    }

    /// Builds a map from an arbitrary field function, mostly for analysis
    /// tests and synthetic inputs.
    pub fn from_fn(grid: GridSpec, f: impl Fn(f64, f64) -> f64) -> Self {
        let mut values = Vec::with_capacity(grid.len());
        for j in 0..grid.ny {
            for i in 0..grid.nx {
                values.push(f(grid.x(i), grid.y(j)));
            }
        }
        Self { grid, values, params: SystemParams::default(), wave: StandingWaveSpec::default() }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Im[ρ₁₃/Ω_p] at (x, y): the probe absorption in units of α.
pub fn susceptibility_at(
    base: &SystemParams,
    wave: &StandingWaveSpec,
    x: f64,
    y: f64,
) -> Result<f64, FieldError> {
    let params = base.with_omega_c(standing_wave_rabi(x, y, wave));
    let sol = steady_state(&build_liouvillian(&params))
        .map_err(|source| FieldError::Solver { x, y, source })?;
    Ok((sol.rho.get(0, 2) / base.omega_p).im)
}

fn check_inputs(base: &SystemParams, wave: &StandingWaveSpec, grid: &GridSpec) -> Result<(), FieldError> {
    base.validate()?;
    if !(base.omega_p > 0.0) {
        return Err(FieldError::Params(ParamError::NegativeProbe(base.omega_p)));
    }
    wave.validate()?;
    grid.validate()
}

fn assemble(
    base: &SystemParams,
    wave: &StandingWaveSpec,
    grid: &GridSpec,
    results: Vec<Result<f64, FieldError>>,
) -> Result<LocalizationMap, FieldError> {
    // the first failure in storage order wins, whatever order nodes ran in
    let values = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(LocalizationMap { grid: *grid, values, params: *base, wave: *wave })
}

/// Evaluates [`susceptibility_at`] on every grid node, in parallel when the
/// `parallel` feature is enabled.
pub fn scan_map(
    base: &SystemParams,
    wave: &StandingWaveSpec,
    grid: &GridSpec,
) -> Result<LocalizationMap, FieldError> {
    check_inputs(base, wave, grid)?;
    let nx = grid.nx;
    let results = par::map_indexed(grid.len(), |k| {
        susceptibility_at(base, wave, grid.x(k % nx), grid.y(k / nx))
    });
    assemble(base, wave, grid, results)
}

/// Single-threaded [`scan_map`].
pub fn scan_map_serial(
    base: &SystemParams,
    wave: &StandingWaveSpec,
    grid: &GridSpec,
) -> Result<LocalizationMap, FieldError> {
    check_inputs(base, wave, grid)?;
    let nx = grid.nx;
    let results = par::map_indexed_serial(grid.len(), |k| {
        susceptibility_at(base, wave, grid.x(k % nx), grid.y(k / nx))
    });
    assemble(base, wave, grid, results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rabi_profile_points() {
        let w = StandingWaveSpec::default();
        assert_eq!(standing_wave_rabi(0.0, 0.0, &w), 0.0);
        assert!((standing_wave_rabi(0.25, 0.25, &w) - 20.0).abs() < 1e-12);
        assert!(standing_wave_rabi(0.25, -0.25, &w).abs() < 1e-12);
    }

    #[test]
    fn grid_nodes_are_mirror_exact() {
        let g = GridSpec::default();
        assert_eq!(g.x(0), -0.5);
        assert_eq!(g.x(200), 0.5);
        assert_eq!(g.x(100), 0.0);
        for i in 0..g.nx {
            assert_eq!(g.x(i), -g.x(g.nx - 1 - i));
        }
        assert!((g.dx() - 0.005).abs() < 1e-15);
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::square(0.5, 4).validate().is_err());
        assert!(GridSpec::square(0.5, 1).validate().is_err());
        let g = GridSpec { x_min: 0.3, x_max: 0.1, ..GridSpec::default() };
        assert!(g.validate().is_err());
        assert!(GridSpec::square(0.25, 3).validate().is_ok());
    }

    #[test]
    fn resonant_probe_where_coupling_vanishes() {
        let base = SystemParams { theta: (0.0f64).acos(), ..Default::default() };
        let v = susceptibility_at(&base, &StandingWaveSpec::default(), 0.0, 0.0).unwrap();
        // two-level value −1/(1 + 2Ωp²)
        assert!((v + 1.0).abs() < 1e-3);
    }

    #[test]
    fn no_coupling_gives_flat_map() {
        let base = SystemParams::default();
        let wave = StandingWaveSpec { omega0: 0.0, ..Default::default() };
        let m = scan_map(&base, &wave, &GridSpec::square(0.5, 3)).unwrap();
        assert_eq!(m.values.len(), 9);
        assert!(m.values.iter().all(|&v| v == m.values[0]));
    }

    #[test]
    fn solver_failure_carries_coordinates() {
        // parallel dipoles with both fields off at the origin node: degenerate
        let base = SystemParams { theta: 0.0, ..Default::default() };
        let err = susceptibility_at(&base.with_omega_p(1e-300), &StandingWaveSpec { omega0: 0.0, ..Default::default() }, 0.1, 0.2);
        match err {
            Err(FieldError::Solver { x, y, .. }) => assert_eq!((x, y), (0.1, 0.2)),
            other => panic!("expected solver error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_zero_probe() {
        let base = SystemParams { omega_p: 0.0, ..Default::default() };
        assert!(scan_map(&base, &StandingWaveSpec::default(), &GridSpec::square(0.5, 3)).is_err());
    }
}
