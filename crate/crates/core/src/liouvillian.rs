//! Linear generator of the optical Bloch equations for the V-type atom with
//! spontaneously generated coherence, acting on the row-major flattening of ρ.
//!
//! Zero-based state labels: 0 = |1⟩ (ground), 1 = |2⟩, 2 = |3⟩. The five
//! independent equations are
//!
//! ```text
//! ρ̇22 = −2γ₁ρ22 + iΩc(ρ12 − ρ21) − s(ρ23 + ρ32)
//! ρ̇33 = −2γ₂ρ33 + iΩp(ρ13 − ρ31) − s(ρ23 + ρ32)
//! ρ̇12 = −(γ₁ + iΔc)ρ12 − sρ13 + iΩc(ρ22 − ρ11) + iΩpρ32
//! ρ̇13 = −sρ12 − (γ₂ + iΔp)ρ13 + iΩcρ23 + iΩp(ρ33 − ρ11)
//! ρ̇23 = iΩcρ13 − iΩpρ21 − i(Δp − Δc)ρ23 − (γ₁ + γ₂)ρ23 − s(ρ22 + ρ33)
//! ```
//!
//! with s = p√(γ₁γ₂). The lower coherences follow by complex conjugation and
//! ρ̇11 = −(ρ̇22 + ρ̇33).

use nalgebra::{Matrix3, SMatrix};
use num_complex::Complex64;

use crate::density::{flat, DensityMatrix, StateVector};
use crate::params::SystemParams;

pub type SuperMatrix = SMatrix<Complex64, 9, 9>;

/// 9×9 Liouvillian acting on the row-major flattening of ρ.
#[derive(Debug, Clone, PartialEq)]
pub struct Superoperator(SuperMatrix);

/// Raw equation coefficients; no physical validation.
#[derive(Debug, Clone, Copy, Default)]
struct Coefficients {
    gamma1: f64,
    gamma2: f64,
    cross: f64,
    omega_p: f64,
    omega_c: f64,
    delta_p: f64,
    delta_c: f64,
}

impl From<&SystemParams> for Coefficients {
    fn from(p: &SystemParams) -> Self {
        Self {
            gamma1: p.gamma1,
            gamma2: p.gamma2,
            cross: p.cross_damping(),
            omega_p: p.omega_p,
            omega_c: p.omega_c,
            delta_p: p.delta_p,
            delta_c: p.delta_c,
        }
    }
}

const I: Complex64 = Complex64::new(0.0, 1.0);

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn assemble(c: &Coefficients) -> SuperMatrix {
    let mut m = SuperMatrix::zeros();
    let s = re(c.cross);
    {
        let mut add = |row: (usize, usize), col: (usize, usize), v: Complex64| {
            m[(flat(row.0, row.1), flat(col.0, col.1))] += v;
        };

        // ρ̇22
        let r = (1, 1);
        add(r, (1, 1), re(-2.0 * c.gamma1));
        add(r, (0, 1), I * c.omega_c);
        add(r, (1, 0), -I * c.omega_c);
        add(r, (1, 2), -s);
        add(r, (2, 1), -s);

        // ρ̇33, with γ₂ for the |3⟩ decay
        let r = (2, 2);
        add(r, (2, 2), re(-2.0 * c.gamma2));
        add(r, (0, 2), I * c.omega_p);
        add(r, (2, 0), -I * c.omega_p);
        add(r, (1, 2), -s);
        add(r, (2, 1), -s);

        // ρ̇12
        let r = (0, 1);
        add(r, (0, 1), -(re(c.gamma1) + I * c.delta_c));
        add(r, (0, 2), -s);
        add(r, (1, 1), I * c.omega_c);
        add(r, (0, 0), -I * c.omega_c);
        add(r, (2, 1), I * c.omega_p);

        // ρ̇13
        let r = (0, 2);
        add(r, (0, 1), -s);
        add(r, (0, 2), -(re(c.gamma2) + I * c.delta_p));
        add(r, (1, 2), I * c.omega_c);
        add(r, (2, 2), I * c.omega_p);
        add(r, (0, 0), -I * c.omega_p);

        // ρ̇23
        let r = (1, 2);
        add(r, (0, 2), I * c.omega_c);
        add(r, (1, 0), -I * c.omega_p);
        add(r, (1, 2), -I * (c.delta_p - c.delta_c) - re(c.gamma1 + c.gamma2));
        add(r, (1, 1), -s);
        add(r, (2, 2), -s);
    }

    // ρ̇ba = conj(ρ̇ab): coefficient of ρ_kl in row ab becomes the conjugate
    // coefficient of ρ_lk in row ba.
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        for col in 0..9 {
            let coef = m[(flat(a, b), col)];
            if coef != Complex64::new(0.0, 0.0) {
                let (k, l) = (col / 3, col % 3);
                m[(flat(b, a), flat(l, k))] += coef.conj();
            }
        }
    }

    // Trace closure.
    for col in 0..9 {
        m[(flat(0, 0), col)] = -(m[(flat(1, 1), col)] + m[(flat(2, 2), col)]);
    }
    m
}

/// Builds the full Liouvillian for `params`.
pub fn build_liouvillian(params: &SystemParams) -> Superoperator {
    Superoperator(assemble(&Coefficients::from(params)))
}

/// The Liouvillian with the probe switched off (Ω_p = 0), everything else as
/// in `params`.
pub fn build_unprobed(params: &SystemParams) -> Superoperator {
    let c = Coefficients { omega_p: 0.0, ..Coefficients::from(params) };
    Superoperator(assemble(&c))
}

/// ∂L/∂Ω_p: every probe-proportional term of the equations with unit Rabi
/// frequency. Independent of all other parameters.
pub fn probe_generator() -> Superoperator {
    let c = Coefficients { omega_p: 1.0, ..Default::default() };
    Superoperator(assemble(&c))
}

impl Superoperator {
    pub fn from_matrix(m: SuperMatrix) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &SuperMatrix {
        &self.0
    }

    pub fn apply_vector(&self, v: &StateVector) -> StateVector {
        self.0 * v
    }

    /// L(ρ) as a 3×3 matrix.
    pub fn apply(&self, rho: &DensityMatrix) -> Matrix3<Complex64> {
        let out = self.0 * rho.to_vector();
        Matrix3::from_fn(|i, j| out[flat(i, j)])
    }

    /// Largest entry of the sum of the three population rows; zero for a
    /// trace-preserving generator.
    pub fn trace_defect(&self) -> f64 {
        (0..9)
            .map(|col| {
                (self.0[(flat(0, 0), col)] + self.0[(flat(1, 1), col)] + self.0[(flat(2, 2), col)])
                    .norm()
            })
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zero_fields() -> SystemParams {
        SystemParams {
            omega_p: 0.0,
            omega_c: 0.0,
            theta: 0.5 * std::f64::consts::PI,
            ..Default::default()
        }
    }

    #[test]
    fn dark_ground_state_with_fields_off() {
        let l = build_liouvillian(&zero_fields());
        let out = l.apply(&DensityMatrix::ground());
        assert!(out.iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn trace_rows_cancel() {
        let p = SystemParams {
            omega_p: 0.3,
            omega_c: -7.0,
            delta_p: 3.0,
            delta_c: -2.0,
            theta: 1.1,
            gamma2: 0.7,
            ..Default::default()
        };
        assert!(build_liouvillian(&p).trace_defect() <= 1e-12);
    }

    #[test]
    fn probe_split_is_exact() {
        let p = SystemParams {
            omega_p: 0.05,
            omega_c: 9.0,
            delta_p: 20.0,
            delta_c: 8.0,
            theta: 1.3,
            ..Default::default()
        };
        let full = build_liouvillian(&p);
        let split = build_unprobed(&p).matrix() + probe_generator().matrix() * re(p.omega_p);
        assert_eq!(full.matrix(), &split);
    }

    #[test]
    fn excited_population_decays_at_twice_gamma() {
        let p = SystemParams { gamma1: 0.8, ..zero_fields() };
        let out = build_liouvillian(&p).apply(&DensityMatrix::basis_population(1));
        assert!((out[(1, 1)].re + 1.6).abs() < 1e-15);
        assert!((out[(0, 0)].re - 1.6).abs() < 1e-15);
    }
}
