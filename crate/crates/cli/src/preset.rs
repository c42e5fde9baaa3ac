//! The twelve shipped figure presets.
//!
//! Every preset shares κ₁ = κ₂ = 1 (2π/λ), Ω₀ = 10, Ω_p = 0.01, δ = η = 0
//! and γ₁ = γ₂ = 1; they differ in the detunings and the dipole angle.

use std::f64::consts::PI;

use sgcloc_core::{StandingWaveSpec, SystemParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigurePreset {
    pub name: &'static str,
    pub delta_p: f64,
    pub delta_c: f64,
    pub theta: f64,
}

const HALF_PI: f64 = 0.5 * PI;

pub const PRESETS: [FigurePreset; 12] = [
    FigurePreset { name: "fig2a", delta_p: 0.0, delta_c: 0.0, theta: HALF_PI },
    FigurePreset { name: "fig2b", delta_p: 20.0, delta_c: 0.0, theta: HALF_PI },
    FigurePreset { name: "fig2c", delta_p: 30.0, delta_c: 0.0, theta: HALF_PI },
    FigurePreset { name: "fig2d", delta_p: 40.0, delta_c: 0.0, theta: HALF_PI },
    FigurePreset { name: "fig4a", delta_p: 20.0, delta_c: 8.0, theta: HALF_PI },
    FigurePreset { name: "fig4b", delta_p: 20.0, delta_c: 12.0, theta: HALF_PI },
    FigurePreset { name: "fig4c", delta_p: 20.0, delta_c: 15.0, theta: HALF_PI },
    FigurePreset { name: "fig4d", delta_p: 20.0, delta_c: 20.0, theta: HALF_PI },
    FigurePreset { name: "fig6a", delta_p: 30.0, delta_c: 0.0, theta: PI / 1.99 },
    FigurePreset { name: "fig6b", delta_p: 30.0, delta_c: 0.0, theta: PI / 1.9 },
    FigurePreset { name: "fig6c", delta_p: 30.0, delta_c: 0.0, theta: PI / 1.8 },
    FigurePreset { name: "fig6d", delta_p: 30.0, delta_c: 0.0, theta: PI / 1.7 },
];

impl FigurePreset {
    pub fn find(name: &str) -> Option<&'static FigurePreset> {
        PRESETS.iter().find(|p| p.name == name)
    }

    pub fn params(&self) -> SystemParams {
        SystemParams {
            gamma1: 1.0,
            gamma2: 1.0,
            omega_p: 0.01,
            omega_c: 0.0,
            delta_p: self.delta_p,
            delta_c: self.delta_c,
            theta: self.theta,
        }
    }

    pub fn wave(&self) -> StandingWaveSpec {
        StandingWaveSpec { omega0: 10.0, kappa1: 1.0, kappa2: 1.0, delta_phase: 0.0, eta_phase: 0.0 }
    }
}

pub fn names() -> impl Iterator<Item = &'static str> {
    PRESETS.iter().map(|p| p.name)
}
