//! Weak-probe expansion of the steady state.
//!
//! [`printed`] evaluates the published closed-form expressions as typeset;
//! [`linear_response`] computes the same expansion numerically and is the
//! reference the printed formulas are audited against.

pub mod printed;

use nalgebra::Matrix3;
use num_complex::Complex64;
use thiserror::Error;

use crate::density::{flat, DensityMatrix, StateVector};
use crate::liouvillian::{build_unprobed, probe_generator};
use crate::params::SystemParams;
use crate::steady::{steady_state, DynamicsError};

pub use printed::{
    appendix_coefficients, first_order_rho13_analytic, zero_order_coherences,
    AppendixCoefficients, ZeroOrderCoherences,
};

/// Magnitude below which a printed denominator counts as a pole.
pub const DENOMINATOR_FLOOR: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalyticsError {
    #[error("denominator of {expression} vanishes (|d| = {magnitude:e})")]
    DenominatorUnderflow { expression: &'static str, magnitude: f64 },
    #[error("closed-form expressions assume gamma1 = gamma2 = 1 (got {gamma1}, {gamma2})")]
    UnscaledDecay { gamma1: f64, gamma2: f64 },
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
}

/// Zero- and first-order terms of ρ(Ω_p) = ρ⁰ + Ω_p·ρ¹ + O(Ω_p²).
#[derive(Debug, Clone, PartialEq)]
pub struct LinearResponse {
    pub rho0: DensityMatrix,
    /// ∂ρ/∂Ω_p at Ω_p = 0 (traceless).
    pub rho1: Matrix3<Complex64>,
}

impl LinearResponse {
    /// First-order Taylor value of ρ₁₃ at probe strength `omega_p`.
    pub fn rho13_at(&self, omega_p: f64) -> Complex64 {
        self.rho0.get(0, 2) + self.rho1[(0, 2)] * omega_p
    }
}

/// Exact linear-response solve: L₀ρ⁰ = 0 with tr ρ⁰ = 1, then
/// L₀ρ¹ = −L₁ρ⁰ with tr ρ¹ = 0, where L = L₀ + Ω_p·L₁.
///
/// The stored `omega_p` of `params` is never read.
pub fn linear_response(params: &SystemParams) -> Result<LinearResponse, DynamicsError> {
    let l0 = build_unprobed(params);
    let l1 = probe_generator();
    let zero = steady_state(&l0)?;
    let source: StateVector = -(l1.matrix() * zero.rho.to_vector());

    let mut a = *l0.matrix();
    let mut b = source;
    let trace_row = flat(0, 0);
    for col in 0..9 {
        a[(trace_row, col)] = Complex64::new(0.0, 0.0);
    }
    for k in 0..3 {
        a[(trace_row, flat(k, k))] = Complex64::new(1.0, 0.0);
    }
    b[trace_row] = Complex64::new(0.0, 0.0);
    let x = a.lu().solve(&b).ok_or(DynamicsError::SingularSystem)?;
    let rho1 = Matrix3::from_fn(|i, j| x[flat(i, j)]);
    let rho1 = (rho1 + rho1.adjoint()).scale(0.5);
    Ok(LinearResponse { rho0: zero.rho, rho1 })
}

/// r₁ = ∂ρ₁₃/∂Ω_p at Ω_p = 0.
pub fn first_order_rho13_numeric(params: &SystemParams) -> Result<Complex64, DynamicsError> {
    Ok(linear_response(params)?.rho1[(0, 2)])
}

/// Printed first-order ρ₁₃ against its numeric counterpart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbativeComparison {
    pub analytic: Complex64,
    /// ρ⁰₁₃ + Ω_p·r₁ from [`linear_response`].
    pub numeric: Complex64,
    pub abs_error: f64,
    pub rel_error: f64,
}

impl PerturbativeComparison {
    pub fn new(analytic: Complex64, numeric: Complex64) -> Self {
        let abs_error = (analytic - numeric).norm();
        Self {
            analytic,
            numeric,
            abs_error,
            rel_error: abs_error / numeric.norm().max(1e-300),
        }
    }
}

pub fn compare_analytic_numeric(
    params: &SystemParams,
) -> Result<PerturbativeComparison, AnalyticsError> {
    let analytic = first_order_rho13_analytic(params)?;
    let numeric = linear_response(params)?.rho13_at(params.omega_p);
    Ok(PerturbativeComparison::new(analytic, numeric))
}
