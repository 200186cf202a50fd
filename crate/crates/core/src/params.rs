//! Physical parameterization of the Rabi model and the Jaynes-Cummings
//! reference spectrum.
//!
//! All three frequencies share one unit. Nothing in the solvers depends on
//! which unit that is; [`Unit`] only labels output.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("oscillator frequency `omega` must be > 0 (got {0})")]
    NonPositiveOmega(f64),
    #[error("coupling `g` must be >= 0 (got {0})")]
    NegativeCoupling(f64),
    #[error("two-level frequency `Omega` must be >= 0 (got {0})")]
    NegativeResonance(f64),
}

/// Unit convention for all frequencies of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    /// Dimensionless, in units of the oscillator frequency.
    #[default]
    Omega,
    /// Linear frequencies in GHz (the values quoted as ω/2π, Ω/2π).
    Ghz,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::Omega => f.write_str("omega"),
            Unit::Ghz => f.write_str("ghz"),
        }
    }
}

/// The triple (ω, Ω, g) of
/// `H = ω a†a + (Ω/2) σ_z + g σ_x (a† + a)` with ℏ = 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Oscillator frequency ω.
    pub omega: f64,
    /// Two-level splitting Ω.
    #[serde(rename = "Omega")]
    pub omega_r: f64,
    /// Coupling strength g.
    pub g: f64,
}

impl ModelParams {
    /// Builds and validates a parameter triple.
    pub fn new(omega: f64, omega_r: f64, g: f64) -> Result<Self, ParamError> {
        validate_params(ModelParams { omega, omega_r, g })
    }

    /// Maps a signed coupling onto `g >= 0`; the spectrum depends on |g| only.
    pub fn canonical(omega: f64, omega_r: f64, g: f64) -> Result<Self, ParamError> {
        Self::new(omega, omega_r, g.abs())
    }

    /// Same point with the coupling replaced.
    pub fn with_g(self, g: f64) -> Self {
        ModelParams { g, ..self }
    }

    /// Same point with the two-level frequency replaced.
    pub fn with_omega_r(self, omega_r: f64) -> Self {
        ModelParams { omega_r, ..self }
    }

    /// Largest of ω, Ω and 1; the scale for absolute tolerances.
    pub fn scale(&self) -> f64 {
        self.omega.max(self.omega_r).max(1.0)
    }
}

/// Checks the parameter invariants, returning `p` unchanged when they hold.
///
/// Non-finite values are rejected.
pub fn validate_params(p: ModelParams) -> Result<ModelParams, ParamError> {
    if !(p.omega.is_finite() && p.omega > 0.0) {
        return Err(ParamError::NonPositiveOmega(p.omega));
    }
    if !(p.g.is_finite() && p.g >= 0.0) {
        return Err(ParamError::NegativeCoupling(p.g));
    }
    if !(p.omega_r.is_finite() && p.omega_r >= 0.0) {
        return Err(ParamError::NegativeResonance(p.omega_r));
    }
    Ok(p)
}

/// σ_z eigenstate label of the truncated product basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    /// Eigenvalue of σ_z.
    pub fn sign(self) -> f64 {
        match self {
            Spin::Up => 1.0,
            Spin::Down => -1.0,
        }
    }
}

/// A product state |spin, n⟩, stored interleaved: `flat = 2n + (0 | 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    pub spin: Spin,
    pub n: usize,
}

impl BasisIndex {
    pub fn new(spin: Spin, n: usize) -> Self {
        BasisIndex { spin, n }
    }

    pub fn flat(self) -> usize {
        2 * self.n
            + match self.spin {
                Spin::Up => 0,
                Spin::Down => 1,
            }
    }

    pub fn from_flat(flat: usize) -> Self {
        let spin = if flat % 2 == 0 { Spin::Up } else { Spin::Down };
        BasisIndex { spin, n: flat / 2 }
    }
}

/// Dimension of the truncated space with photon numbers `0..=n_max`.
pub fn basis_dim(n_max: usize) -> usize {
    2 * (n_max + 1)
}

/// Jaynes-Cummings spectrum with the same (ω, Ω, g).
#[derive(Debug, Clone, PartialEq)]
pub struct JcReference {
    /// Energy of |↓, 0⟩, which is uncoupled under the rotating-wave form.
    pub ground_energy: f64,
    /// Doublet `n` lives in {|↑,n⟩, |↓,n+1⟩}; each pair is ascending.
    pub doublets: Vec<(f64, f64)>,
}

impl JcReference {
    pub fn doublet(&self, n: usize) -> Option<(f64, f64)> {
        self.doublets.get(n).copied()
    }
}

/// Closed-form diagonalization of the JC blocks.
pub fn jc_energies(p: &ModelParams, n_levels: usize) -> JcReference {
    let detuning = p.omega_r - p.omega;
    let doublets = (0..n_levels)
        .map(|n| {
            let center = (n as f64 + 0.5) * p.omega;
            let half = 0.5 * (detuning * detuning + 4.0 * p.g * p.g * (n as f64 + 1.0)).sqrt();
            (center - half, center + half)
        })
        .collect();
    JcReference {
        ground_energy: -0.5 * p.omega_r,
        doublets,
    }
}
