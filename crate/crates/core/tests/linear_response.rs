//! The numeric linearization against the full solve, and the printed
//! first-order formula against the numeric one where both must coincide.

use std::f64::consts::PI;

use sgcloc_core::perturbative::linear_response;
use sgcloc_core::{
    build_liouvillian, compare_analytic_numeric, first_order_rho13_numeric, standing_wave_rabi,
    steady_state, zero_order_coherences, StandingWaveSpec, SystemParams,
};

fn remainder(params: &SystemParams, omega_p: f64) -> f64 {
    let lr = linear_response(params).unwrap();
    let full = steady_state(&build_liouvillian(&params.with_omega_p(omega_p))).unwrap().rho.get(0, 2);
    (full - lr.rho13_at(omega_p)).norm() / (omega_p * omega_p)
}

#[test]
fn quadratic_remainder_is_flat_with_sgc() {
    let w = StandingWaveSpec::default();
    for div in [1.99, 1.9, 1.8, 1.7] {
        let p = SystemParams { delta_p: 30.0, theta: PI / div, ..Default::default() }
            .with_omega_c(standing_wave_rabi(0.125, 0.125, &w));
        let r: Vec<f64> = [1e-2, 1e-3, 1e-4].iter().map(|&op| remainder(&p, op)).collect();
        for pair in r.windows(2) {
            let ratio = pair[0] / pair[1];
            assert!((1.0 / 1.5..=1.5).contains(&ratio), "theta = pi/{div}: {r:?}");
        }
    }
}

#[test]
fn linearization_error_shrinks_with_probe() {
    let p = SystemParams { omega_c: 10.0, ..Default::default() };
    let r1 = first_order_rho13_numeric(&p).unwrap();
    let err = |op: f64| {
        let full = steady_state(&build_liouvillian(&p.with_omega_p(op))).unwrap().rho.get(0, 2);
        (full - op * r1).norm()
    };
    // at least quadratic; without SGC the even orders vanish and it is cubic
    assert!(err(1e-2) / err(1e-3) >= 100.0 * 0.9);
}

#[test]
fn two_level_limit_agrees_across_detunings() {
    for dp in [0.0, 3.0, -17.0, 40.0] {
        let p = SystemParams { omega_c: 0.0, delta_p: dp, delta_c: 5.0, ..Default::default() };
        let c = compare_analytic_numeric(&p).unwrap();
        assert!(c.rel_error <= 1e-10, "delta_p = {dp}: {c:?}");
    }
}

#[test]
fn zero_order_formula_versus_unprobed_solve() {
    // recorded, not asserted beyond finiteness: the printed expressions are
    // audited rather than trusted
    let p = SystemParams { delta_p: 20.0, omega_c: 10.0, omega_p: 0.0, theta: PI / 1.8, ..Default::default() };
    let z = zero_order_coherences(&p).unwrap();
    let rho = steady_state(&build_liouvillian(&p)).unwrap().rho;
    for (printed, solved) in [(z.rho12_0, rho.get(0, 1)), (z.rho13_0, rho.get(0, 2)), (z.rho23_0, rho.get(1, 2))] {
        assert!(printed.re.is_finite() && printed.im.is_finite());
        eprintln!("printed {printed:.6e}  solved {solved:.6e}  |diff| {:.3e}", (printed - solved).norm());
    }
}

#[test]
fn fig2c_node_comparison_is_finite() {
    let w = StandingWaveSpec::default();
    let p = SystemParams { delta_p: 30.0, ..Default::default() }.with_omega_c(standing_wave_rabi(0.125, 0.125, &w));
    let c = compare_analytic_numeric(&p).unwrap();
    assert!(c.abs_error.is_finite() && c.rel_error.is_finite());
    eprintln!("fig2c (1/8, 1/8): {c:?}");
}
