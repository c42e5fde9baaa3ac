//! Stationary state of the Liouvillian by direct dense solve.

use nalgebra::SVector;
use num_complex::Complex64;
use thiserror::Error;

use crate::density::{flat, DensityMatrix, StateVector};
use crate::liouvillian::Superoperator;

/// Relative singular-value threshold for counting null directions.
pub const NULLSPACE_RTOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("steady state is not unique (nullspace dimension {nullspace_dim})")]
    DegenerateSteadyState { nullspace_dim: usize },
    #[error("linear system for the steady state is singular")]
    SingularSystem,
    #[error("trace drifted by {drift:e} during integration; reduce the time step")]
    StepTooLarge { drift: f64 },
    #[error("invalid integration argument: {0}")]
    InvalidArgument(&'static str),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SteadyStateSolution {
    pub rho: DensityMatrix,
    /// ‖L(ρ)‖_∞ over the nine entries.
    pub residual: f64,
    pub nullspace_dim: usize,
}

/// ‖L(ρ)‖_∞.
pub fn residual(liouvillian: &Superoperator, rho: &DensityMatrix) -> f64 {
    liouvillian
        .apply_vector(&rho.to_vector())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// Number of singular values of L below `NULLSPACE_RTOL` × the largest one.
pub fn nullspace_dimension(liouvillian: &Superoperator) -> usize {
    let sv = liouvillian.matrix().singular_values();
    let smax = sv.max();
    if smax == 0.0 {
        return 9;
    }
    sv.iter().filter(|&&s| s <= NULLSPACE_RTOL * smax).count()
}

/// Solves L(ρ) = 0 with tr ρ = 1.
///
/// The ρ₁₁ row of L is redundant (it is minus the sum of the other two
/// population rows) and is replaced by the trace constraint before an LU
/// solve.
pub fn steady_state(liouvillian: &Superoperator) -> Result<SteadyStateSolution, DynamicsError> {
    let nullspace_dim = nullspace_dimension(liouvillian);
    if nullspace_dim > 1 {
        return Err(DynamicsError::DegenerateSteadyState { nullspace_dim });
    }

    let mut a = *liouvillian.matrix();
    let trace_row = flat(0, 0);
    for col in 0..9 {
        a[(trace_row, col)] = Complex64::new(0.0, 0.0);
    }
    for k in 0..3 {
        a[(trace_row, flat(k, k))] = Complex64::new(1.0, 0.0);
    }
    let mut b: StateVector = SVector::zeros();
    b[trace_row] = Complex64::new(1.0, 0.0);

    let x = a.lu().solve(&b).ok_or(DynamicsError::SingularSystem)?;
    if x.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(DynamicsError::SingularSystem);
    }
    let rho = DensityMatrix::from_vector(&x).hermitized();
    Ok(SteadyStateSolution {
        residual: residual(liouvillian, &rho),
        rho,
        nullspace_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liouvillian::build_liouvillian;
    use crate::params::SystemParams;

    #[test]
    fn fields_off_relaxes_to_ground() {
        let p = SystemParams { omega_p: 0.0, omega_c: 0.0, ..Default::default() };
        let sol = steady_state(&build_liouvillian(&p)).unwrap();
        assert_eq!(sol.nullspace_dim, 1);
        assert!(sol.rho.max_abs_diff(&DensityMatrix::ground()) < 1e-15);
    }

    #[test]
    fn two_level_probe_limit() {
        // Ω_c = 0, p = 0, Δ_p = 0: ρ13 = −iΩp/(1 + 2Ωp²) from the 1–3 block alone.
        let omega_p = 0.01;
        let p = SystemParams { omega_p, omega_c: 0.0, ..Default::default() };
        let sol = steady_state(&build_liouvillian(&p)).unwrap();
        let expected = -1.0 / (1.0 + 2.0 * omega_p * omega_p);
        assert!((sol.rho.get(0, 2).im / omega_p - expected).abs() < 1e-12);
        // 1/(1 + 2Ωp²) sits 2e-4 away from unity at Ωp = 0.01
        assert!((sol.rho.get(0, 2).im / omega_p + 1.0).abs() < 3e-4);
    }

    #[test]
    fn parallel_dipoles_are_degenerate() {
        // θ = 0 with both fields off: the symmetric excited superposition is
        // not the only stationary state (the antisymmetric one is dark).
        let p = SystemParams { theta: 0.0, omega_p: 0.0, omega_c: 0.0, ..Default::default() };
        match steady_state(&build_liouvillian(&p)) {
            Err(DynamicsError::DegenerateSteadyState { nullspace_dim }) => assert!(nullspace_dim > 1),
            other => panic!("expected degenerate steady state, got {other:?}"),
        }
    }

    #[test]
    fn residual_positive_off_steady_state() {
        let p = SystemParams { omega_c: 10.0, ..Default::default() };
        let l = build_liouvillian(&p);
        assert!(residual(&l, &DensityMatrix::ground()) > 0.0);
        let sol = steady_state(&l).unwrap();
        assert!(sol.residual <= 1e-10);
        assert!(residual(&l, &sol.rho) <= 1e-10);
    }
}
