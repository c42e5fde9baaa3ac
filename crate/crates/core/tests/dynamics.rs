//! Steady state against the RK4 integrator, and the physical invariants of
//! the stationary solution.

use std::f64::consts::PI;

use proptest::prelude::*;
use sgcloc_core::{
    build_liouvillian, residual, standing_wave_rabi, steady_state, time_evolve,
    time_evolve_default, DensityMatrix, StandingWaveSpec, SystemParams,
};

fn figure_base(delta_p: f64, delta_c: f64, theta: f64) -> SystemParams {
    SystemParams { omega_p: 0.01, delta_p, delta_c, theta, ..Default::default() }
}

fn at_node(base: SystemParams, x: f64, y: f64) -> SystemParams {
    base.with_omega_c(standing_wave_rabi(x, y, &StandingWaveSpec::default()))
}

fn rk4_vs_steady(params: &SystemParams) -> f64 {
    let rk = time_evolve_default(params, &DensityMatrix::ground(), 50.0).unwrap();
    let ss = steady_state(&build_liouvillian(params)).unwrap();
    rk.max_abs_diff(&ss.rho)
}

#[test]
fn fig2a_steady_state_matches_long_time_rk4() {
    let p = figure_base(0.0, 0.0, 0.5 * PI).with_omega_c(10.0);
    let diff = rk4_vs_steady(&p);
    assert!(diff <= 1e-6, "max elementwise difference {diff:e}");
}

#[test]
fn fig6c_node_matches_long_time_rk4() {
    let p = at_node(figure_base(30.0, 0.0, PI / 1.8), 0.125, 0.125);
    let diff = rk4_vs_steady(&p);
    assert!(diff <= 1e-6, "max elementwise difference {diff:e}");
}

#[test]
fn fig2b_rk4_state_is_stationary() {
    let p = figure_base(20.0, 0.0, 0.5 * PI).with_omega_c(10.0);
    let rho = time_evolve_default(&p, &DensityMatrix::ground(), 50.0).unwrap();
    let r = residual(&build_liouvillian(&p), &rho);
    assert!(r <= 1e-6, "residual {r:e}");
}

#[test]
fn integration_keeps_trace_and_hermiticity() {
    let p = at_node(figure_base(20.0, 12.0, PI / 1.9), 0.2, -0.05);
    let rho = time_evolve(&p, &DensityMatrix::basis_population(1), 5.0, 1e-4).unwrap();
    assert!(rho.trace_error() <= 1e-10);
    assert!(rho.hermiticity_error() <= 1e-10);
}

fn physical_params() -> impl Strategy<Value = SystemParams> {
    (-40.0f64..40.0, -40.0f64..40.0, 0.0f64..20.0, 0.0f64..0.1, 0.05f64..(PI - 0.05)).prop_map(
        |(delta_p, delta_c, omega_c, omega_p, theta)| SystemParams {
            omega_p,
            omega_c,
            delta_p,
            delta_c,
            theta,
            ..Default::default()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn steady_state_is_a_density_matrix(p in physical_params()) {
        let sol = steady_state(&build_liouvillian(&p)).unwrap();
        prop_assert!(sol.residual <= 1e-10, "residual {:e}", sol.residual);
        prop_assert!(sol.rho.trace_error() <= 1e-12);
        prop_assert!(sol.rho.hermiticity_error() <= 1e-12);
        let min_eig = sol.rho.eigenvalues()[0];
        prop_assert!(min_eig >= -1e-9, "min eigenvalue {:e}", min_eig);
    }

    #[test]
    fn rho13_even_in_coupling_without_sgc(
        omega_c in 0.0f64..20.0,
        delta_p in -40.0f64..40.0,
        delta_c in -40.0f64..40.0,
    ) {
        let base = SystemParams { omega_p: 0.01, delta_p, delta_c, ..Default::default() };
        let plus = steady_state(&build_liouvillian(&base.with_omega_c(omega_c))).unwrap();
        let minus = steady_state(&build_liouvillian(&base.with_omega_c(-omega_c))).unwrap();
        prop_assert!((plus.rho.get(0, 2) - minus.rho.get(0, 2)).norm() <= 1e-12);
    }
}
