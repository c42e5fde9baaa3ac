//! Scalar physics inputs of the V-type system, all in units of the decay
//! half-rate γ.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParamError {
    #[error("decay rates must be positive (gamma1 = {gamma1}, gamma2 = {gamma2})")]
    NonPositiveDecay { gamma1: f64, gamma2: f64 },
    #[error("probe Rabi frequency must be non-negative, got {0}")]
    NegativeProbe(f64),
    #[error("parameter `{0}` is not finite")]
    NotFinite(&'static str),
}

/// Physical parameters of a single atom at a fixed position.
///
/// `omega_c` is the local (signed) coupling Rabi frequency. The SGC strength
/// `p = cos(theta)` is always derived from `theta` and never stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Decay half-rate of |2⟩.
    pub gamma1: f64,
    /// Decay half-rate of |3⟩.
    pub gamma2: f64,
    /// Probe Rabi frequency Ω_p.
    pub omega_p: f64,
    /// Coupling Rabi frequency Ω_c at the atom's position.
    pub omega_c: f64,
    /// Probe detuning Δ_p.
    pub delta_p: f64,
    /// Coupling detuning Δ_c.
    pub delta_c: f64,
    /// Angle between the two dipole moments, radians.
    pub theta: f64,
}

impl Default for SystemParams {
    fn default() -> Self {
        Self {
            gamma1: 1.0,
            gamma2: 1.0,
            omega_p: 0.01,
            omega_c: 0.0,
            delta_p: 0.0,
            delta_c: 0.0,
            theta: 0.5 * std::f64::consts::PI,
        }
    }
}

impl SystemParams {
    /// SGC strength p = cos θ.
    pub fn sgc(&self) -> f64 {
        self.theta.cos()
    }

    /// Cross-damping coefficient p·√(γ₁γ₂).
    pub fn cross_damping(&self) -> f64 {
        self.sgc() * (self.gamma1 * self.gamma2).sqrt()
    }

    pub fn with_omega_c(self, omega_c: f64) -> Self {
        Self { omega_c, ..self }
    }

    pub fn with_omega_p(self, omega_p: f64) -> Self {
        Self { omega_p, ..self }
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        let fields = [
            ("gamma1", self.gamma1),
            ("gamma2", self.gamma2),
            ("omega_p", self.omega_p),
            ("omega_c", self.omega_c),
            ("delta_p", self.delta_p),
            ("delta_c", self.delta_c),
            ("theta", self.theta),
        ];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(ParamError::NotFinite(name));
            }
        }
        if self.gamma1 <= 0.0 || self.gamma2 <= 0.0 {
            return Err(ParamError::NonPositiveDecay {
                gamma1: self.gamma1,
                gamma2: self.gamma2,
            });
        }
        if self.omega_p < 0.0 {
            return Err(ParamError::NegativeProbe(self.omega_p));
        }
        Ok(())
    }
}
