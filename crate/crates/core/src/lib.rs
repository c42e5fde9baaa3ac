//! Probe absorption of a V-type three-level atom driven by two crossed
//! standing waves, with spontaneously generated coherence (SGC) between the
//! two decay channels.
//!
//! The crate builds the 9×9 Liouvillian of the optical Bloch equations,
//! solves for the stationary state, scans the probe absorption Im[χ] (in
//! units of α = 2N|μ₁₃|²/ε₀ħ) over the (x, y) plane and analyses the
//! resulting localization maps. A Runge–Kutta integrator and an exact
//! linear-response solve provide independent cross-checks.
//!
//! All frequencies are in units of γ; positions are in units of the
//! standing-wave wavelength λ.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod density;
pub mod evolve;
pub mod field;
pub mod liouvillian;
pub mod par;
pub mod params;
pub mod perturbative;
pub mod steady;

pub use analysis::{
    find_extrema, find_extrema_relative, peak_ratio, quadrant_distribution, symmetry_metrics,
    AnalysisError, Peak, PeakKind, PeakSet, Quadrant, QuadrantSummary, SymmetryMetrics,
};
pub use density::DensityMatrix;
pub use evolve::{default_dt, time_evolve, time_evolve_default};
pub use field::{
    scan_map, scan_map_serial, standing_wave_rabi, susceptibility_at, FieldError, GridSpec,
    LocalizationMap, StandingWaveSpec,
};
pub use liouvillian::{build_liouvillian, Superoperator};
pub use params::{ParamError, SystemParams};
pub use perturbative::{
    appendix_coefficients, compare_analytic_numeric, first_order_rho13_analytic,
    first_order_rho13_numeric, linear_response, zero_order_coherences, AnalyticsError,
    PerturbativeComparison,
};
pub use steady::{residual, steady_state, DynamicsError, SteadyStateSolution};
