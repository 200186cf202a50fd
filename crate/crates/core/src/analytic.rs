//! Analytic Rabi spectrum from the Jaynes-Cummings-like mapping.
//!
//! After rotating the spin and displacing the oscillator by
//! `U = exp[λ σ_z (a† − a)]`, keeping only the diagonal dressing G₀(n) and
//! the one-photon term F₁ leaves a model that is block diagonal in
//! `{|n, +x⟩, |n+1, −x⟩}`. Each block is a 2×2 problem:
//!
//! ```text
//! a_n = nω     + ωλ² + 2λg + (Ω/2) e^{-2λ²} L_n(4λ²)        on |n, +x⟩
//! b_n = (n+1)ω + ωλ² + 2λg − (Ω/2) e^{-2λ²} L_{n+1}(4λ²)    on |n+1, −x⟩
//! κ_n = (λω + g)√(n+1) − Ω λ e^{-2λ²} L_n¹(4λ²) / √(n+1)    coupling
//! ```
//!
//! and the ground state |0, −x⟩ is left alone. Lab-frame states undo the
//! displacement per σ_z branch and then the spin rotation `e^{iπσ_y/4}`.
//!
//! Phase convention: |+x⟩ = (|↑⟩ + |↓⟩)/√2 and |−x⟩ = (|↓⟩ − |↑⟩)/√2,
//! which makes σ_z = −(τ₊ + τ₋) and the block coupling +κ_n.

use crate::exact::{displacement_operator, ExactError};
use crate::lambda::{lambda_closed_form, LambdaSolution};
use crate::params::{basis_dim, jc_energies, BasisIndex, ModelParams, Spin};
use crate::special::{laguerre1_n, laguerre_n, laguerre_pair};
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};
use thiserror::Error;

/// Largest amplitude a reconstructed state may keep at the photon cutoff.
pub const STATE_TAIL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticError {
    #[error("the analytic spectrum needs at least one doublet (n_max >= 1)")]
    NoLevels,
    #[error("excited states are numbered from 1 (got {0})")]
    InvalidExcitation(usize),
    #[error("state leaves amplitude {tail:e} at photon cutoff {n_max}")]
    TruncationTooSmall { n_max: usize, tail: f64 },
    #[error(transparent)]
    Displacement(#[from] ExactError),
}

/// Matrix elements of the dressed model for block `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Intermediates {
    pub n: usize,
    /// G₀(n) = e^{-2λ²} L_n(4λ²).
    pub g0: f64,
    /// f₁(n+1, n) = 2λ e^{-2λ²} L_n¹(4λ²) / (n+1).
    pub f1: f64,
    /// f₁ with L_n¹ replaced by its small-λ value n + 1.
    pub f1_leading: f64,
    /// R_r = 2(λω + g), the co-rotating coupling once R_ar vanishes.
    pub rotating: f64,
    /// R_ar = (λω + g) + (Ω/2) f₁.
    pub counter_rotating: f64,
    /// R_ar built from `f1_leading`; zero at the n-independent root.
    pub counter_rotating_leading: f64,
}

pub fn intermediates(p: &ModelParams, lam: &LambdaSolution, n: usize) -> Intermediates {
    let l = lam.lambda;
    let x = 4.0 * l * l;
    let damp = (-2.0 * l * l).exp();
    let shift = l * p.omega + p.g;
    let f1 = 2.0 * l * damp * laguerre1_n(n, x) / (n as f64 + 1.0);
    let f1_leading = 2.0 * l * damp;
    Intermediates {
        n,
        g0: damp * laguerre_n(n, x),
        f1,
        f1_leading,
        rotating: 2.0 * shift,
        counter_rotating: shift + 0.5 * p.omega_r * f1,
        counter_rotating_leading: shift + 0.5 * p.omega_r * f1_leading,
    }
}

/// The 2×2 block in {|n, +x⟩, |n+1, −x⟩}.
#[derive(Debug, Clone, Copy)]
struct Block {
    upper_x: f64,
    lower_x: f64,
    coupling: f64,
}

impl Block {
    fn new(p: &ModelParams, lambda: f64, n: usize) -> Self {
        let x = 4.0 * lambda * lambda;
        let damp = (-2.0 * lambda * lambda).exp();
        let (ln, ln1) = laguerre_pair(n, x);
        let offset = p.omega * lambda * lambda + 2.0 * lambda * p.g;
        let nf = n as f64;
        let root = (nf + 1.0).sqrt();
        Block {
            upper_x: nf * p.omega + offset + 0.5 * p.omega_r * damp * ln,
            lower_x: (nf + 1.0) * p.omega + offset - 0.5 * p.omega_r * damp * ln1,
            coupling: (lambda * p.omega + p.g) * root
                - p.omega_r * lambda * damp * laguerre1_n(n, x) / root,
        }
    }

    /// Δ = diag(|n+1, −x⟩) − diag(|n, +x⟩).
    fn gap(&self) -> f64 {
        self.lower_x - self.upper_x
    }

    fn energies(&self) -> (f64, f64) {
        let center = 0.5 * (self.upper_x + self.lower_x);
        let half = 0.5 * self.gap().hypot(2.0 * self.coupling);
        (center - half, center + half)
    }

    /// θ ∈ [0, π/2) with tan 2θ = 2κ/Δ; zero when both vanish.
    fn angle(&self) -> f64 {
        if self.coupling == 0.0 && self.gap() == 0.0 {
            return 0.0;
        }
        let theta = 0.5 * (2.0 * self.coupling).atan2(self.gap());
        // κ < 0 only happens far outside the operating range; fold back
        if theta < 0.0 {
            theta + FRAC_PI_2
        } else {
            theta
        }
    }
}

/// E_G = ωλ² + 2λg − (Ω/2) e^{-2λ²}.
pub fn ground_energy(p: &ModelParams, lam: &LambdaSolution) -> f64 {
    let l = lam.lambda;
    p.omega * l * l + 2.0 * l * p.g - 0.5 * p.omega_r * (-2.0 * l * l).exp()
}

/// (E₋,ₙ, E₊,ₙ) of block `n`, ascending.
pub fn excited_energies(p: &ModelParams, lam: &LambdaSolution, n: usize) -> (f64, f64) {
    Block::new(p, lam.lambda, n).energies()
}

/// Mixing angle θₙ of block `n`, in [0, π/2).
///
/// Built from the same 2×2 block as [`excited_energies`], so the coupling
/// carries its √(n+1). In this convention the lower dressed state is
/// `cos θ |n,+x⟩ − sin θ |n+1,−x⟩` and the upper one
/// `sin θ |n,+x⟩ + cos θ |n+1,−x⟩`.
pub fn mixing_angle(p: &ModelParams, lam: &LambdaSolution, n: usize) -> f64 {
    Block::new(p, lam.lambda, n).angle()
}

/// One dressed doublet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    pub n: usize,
    pub e_minus: f64,
    pub e_plus: f64,
    pub theta: f64,
}

/// Which analytic state an energy or vector belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateLabel {
    Ground,
    /// Excited state number m ≥ 1: odd m is the lower state of block
    /// (m−1)/2, even m the upper state of block (m−2)/2.
    Excited(usize),
}

impl StateLabel {
    /// Block index and whether the state is the upper member.
    pub fn block(self) -> Option<(usize, bool)> {
        match self {
            StateLabel::Ground => None,
            StateLabel::Excited(m) if m % 2 == 1 => Some(((m - 1) / 2, false)),
            StateLabel::Excited(m) => Some(((m - 2) / 2, true)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSpectrum {
    pub params: ModelParams,
    pub lambda: LambdaSolution,
    pub ground: f64,
    pub levels: Vec<Level>,
    /// E_G together with every doublet member, ascending.
    pub sorted_energies: Vec<f64>,
}

impl AnalyticSpectrum {
    /// Every state with its energy, ordered by energy. Ties keep label order.
    pub fn ranked_states(&self) -> Vec<(StateLabel, f64)> {
        let mut states = vec![(StateLabel::Ground, self.ground)];
        for level in &self.levels {
            states.push((StateLabel::Excited(2 * level.n + 1), level.e_minus));
            states.push((StateLabel::Excited(2 * level.n + 2), level.e_plus));
        }
        states.sort_by(|a, b| a.1.total_cmp(&b.1));
        states
    }
}

/// Spectrum with doublets `0..n_max` and λ from the closed form.
pub fn analytic_spectrum(p: &ModelParams, n_max: usize) -> Result<AnalyticSpectrum, AnalyticError> {
    analytic_spectrum_with(p, &lambda_closed_form(p), n_max)
}

/// Spectrum with doublets `0..n_max` at a given λ.
pub fn analytic_spectrum_with(
    p: &ModelParams,
    lam: &LambdaSolution,
    n_max: usize,
) -> Result<AnalyticSpectrum, AnalyticError> {
    if n_max == 0 {
        return Err(AnalyticError::NoLevels);
    }
    let ground = ground_energy(p, lam);
    let levels: Vec<Level> = (0..n_max)
        .map(|n| {
            let block = Block::new(p, lam.lambda, n);
            let (e_minus, e_plus) = block.energies();
            Level {
                n,
                e_minus,
                e_plus,
                theta: block.angle(),
            }
        })
        .collect();
    let mut sorted_energies = Vec::with_capacity(2 * n_max + 1);
    sorted_energies.push(ground);
    for l in &levels {
        sorted_energies.extend([l.e_minus, l.e_plus]);
    }
    sorted_energies.sort_by(f64::total_cmp);
    Ok(AnalyticSpectrum {
        params: *p,
        lambda: *lam,
        ground,
        levels,
        sorted_energies,
    })
}

/// Energy of excited state `m` under the labeling of [`StateLabel`].
pub fn excited_energy(p: &ModelParams, lam: &LambdaSolution, m: usize) -> Result<f64, AnalyticError> {
    let (n, upper) = excited_block(m)?;
    let (lo, hi) = excited_energies(p, lam, n);
    Ok(if upper { hi } else { lo })
}

fn excited_block(m: usize) -> Result<(usize, bool), AnalyticError> {
    if m == 0 {
        return Err(AnalyticError::InvalidExcitation(m));
    }
    Ok(StateLabel::Excited(m).block().expect("excited label"))
}

/// Lab-frame amplitudes over [`BasisIndex`], unit norm.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub amplitudes: Vec<f64>,
    pub label: StateLabel,
}

impl StateVector {
    pub fn norm(&self) -> f64 {
        crate::matrix::norm2(&self.amplitudes)
    }

    pub fn overlap(&self, other: &[f64]) -> f64 {
        crate::matrix::dot(&self.amplitudes, other)
    }
}

/// Rotated-frame state given by its amplitudes on |n, +x⟩ and |n, −x⟩.
struct DressedFrameState {
    plus_x: Vec<f64>,
    minus_x: Vec<f64>,
}

impl DressedFrameState {
    fn new(n_max: usize) -> Self {
        DressedFrameState {
            plus_x: vec![0.0; n_max + 1],
            minus_x: vec![0.0; n_max + 1],
        }
    }

    /// Undo the displacement on each σ_z branch, then the spin rotation.
    fn to_lab(&self, lambda: f64, n_max: usize, label: StateLabel) -> Result<StateVector, AnalyticError> {
        // |+x⟩ = (|↑⟩ + |↓⟩)/√2, |−x⟩ = (|↓⟩ − |↑⟩)/√2
        let up: Vec<f64> = self
            .plus_x
            .iter()
            .zip(&self.minus_x)
            .map(|(p, m)| FRAC_1_SQRT_2 * (p - m))
            .collect();
        let down: Vec<f64> = self
            .plus_x
            .iter()
            .zip(&self.minus_x)
            .map(|(p, m)| FRAC_1_SQRT_2 * (p + m))
            .collect();
        let displace = |sign: f64| match displacement_operator(lambda, sign, n_max) {
            Err(ExactError::TruncationTooSmall { leakage }) => {
                Err(AnalyticError::TruncationTooSmall { n_max, tail: leakage })
            }
            other => other.map_err(AnalyticError::from),
        };
        let up = displace(1.0)?.matvec(&up);
        let down = displace(-1.0)?.matvec(&down);

        // e^{iπσ_y/4} = (1 + iσ_y)/√2 = [[1, 1], [−1, 1]]/√2
        let mut amplitudes = vec![0.0; basis_dim(n_max)];
        for n in 0..=n_max {
            amplitudes[BasisIndex::new(Spin::Up, n).flat()] = FRAC_1_SQRT_2 * (up[n] + down[n]);
            amplitudes[BasisIndex::new(Spin::Down, n).flat()] = FRAC_1_SQRT_2 * (down[n] - up[n]);
        }

        let tail = amplitudes[basis_dim(n_max) - 2..]
            .iter()
            .fold(0.0f64, |acc, c| acc.max(c.abs()));
        if tail > STATE_TAIL {
            return Err(AnalyticError::TruncationTooSmall { n_max, tail });
        }
        Ok(StateVector { amplitudes, label })
    }
}

/// |φ₀⟩ = e^{iπσ_y/4} e^{−λσ_z(a†−a)} |0, −x⟩ on photon numbers `0..=n_max`.
pub fn ground_state(p: &ModelParams, lam: &LambdaSolution, n_max: usize) -> Result<StateVector, AnalyticError> {
    let _ = p;
    let mut frame = DressedFrameState::new(n_max);
    frame.minus_x[0] = 1.0;
    frame.to_lab(lam.lambda, n_max, StateLabel::Ground)
}

/// Lab-frame excited state `m` on photon numbers `0..=n_max`.
pub fn excited_state(
    p: &ModelParams,
    lam: &LambdaSolution,
    m: usize,
    n_max: usize,
) -> Result<StateVector, AnalyticError> {
    let (n, upper) = excited_block(m)?;
    if n + 1 > n_max {
        return Err(AnalyticError::TruncationTooSmall { n_max, tail: 1.0 });
    }
    let theta = mixing_angle(p, lam, n);
    let (c, s) = (theta.cos(), theta.sin());
    let mut frame = DressedFrameState::new(n_max);
    if upper {
        frame.plus_x[n] = s;
        frame.minus_x[n + 1] = c;
    } else {
        frame.plus_x[n] = c;
        frame.minus_x[n + 1] = -s;
    }
    frame.to_lab(lam.lambda, n_max, StateLabel::Excited(m))
}

/// ⟨a†a⟩₀ = λ².
pub fn mean_photon_ground(lam: &LambdaSolution) -> f64 {
    lam.lambda * lam.lambda
}

/// Closed-form ⟨a†a⟩ of excited state `m`:
///
/// ```text
/// odd m,  μ = (m−1)/2:  μ + λ² + (1 + 2λ tanφ √(m+1)) / (1 + tan²φ)
/// even m, ν = (m−2)/2:  ν + λ² + (tan²φ − 2λ tanφ √(m+1)) / (1 + tan²φ)
/// ```
///
/// with φ the mixing angle of block μ (or ν) taken on the branch
/// φ = θ − π/2. The expression is evaluated through cos φ and sin φ.
pub fn mean_photon_excited(p: &ModelParams, lam: &LambdaSolution, m: usize) -> Result<f64, AnalyticError> {
    photon_formula(p, lam, m, ((m + 1) as f64).sqrt())
}

/// As [`mean_photon_excited`] but with √(n+1) of the block index in place
/// of √(m+1); this is what the dressed states themselves give.
pub fn mean_photon_excited_block_indexed(
    p: &ModelParams,
    lam: &LambdaSolution,
    m: usize,
) -> Result<f64, AnalyticError> {
    let (n, _) = excited_block(m)?;
    photon_formula(p, lam, m, ((n + 1) as f64).sqrt())
}

fn photon_formula(p: &ModelParams, lam: &LambdaSolution, m: usize, root: f64) -> Result<f64, AnalyticError> {
    let (n, upper) = excited_block(m)?;
    let l = lam.lambda;
    let phi = mixing_angle(p, lam, n) - FRAC_PI_2;
    let (s, c) = phi.sin_cos();
    let base = n as f64 + l * l;
    Ok(if upper {
        base + s * s - 2.0 * l * s * c * root
    } else {
        base + c * c + 2.0 * l * s * c * root
    })
}

/// Shift of the E_G → E₋,₀ transition relative to the same transition of
/// the Jaynes-Cummings model, λ from the closed form.
pub fn bloch_siegert_shift(p: &ModelParams) -> f64 {
    bloch_siegert_shift_with(p, &lambda_closed_form(p))
}

pub fn bloch_siegert_shift_with(p: &ModelParams, lam: &LambdaSolution) -> f64 {
    let rabi = excited_energies(p, lam, 0).0 - ground_energy(p, lam);
    let jc = jc_energies(p, 1);
    let jc_transition = jc.doublets[0].0 - jc.ground_energy;
    rabi - jc_transition
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{build_hamiltonian, eigen_decompose, mean_photon};
    use crate::lambda::lambda_root;
    use crate::matrix::DenseSymMatrix;

    fn p(omega: f64, omega_r: f64, g: f64) -> ModelParams {
        ModelParams::new(omega, omega_r, g).unwrap()
    }

    /// Oracle for a block: numeric 2×2 eigenpairs.
    fn eig2(a: f64, b: f64, k: f64) -> ((f64, f64), (f64, f64)) {
        let mut h = DenseSymMatrix::zeros(2);
        h.set(0, 0, a);
        h.set(1, 1, b);
        h.set(0, 1, k);
        let e = crate::eigen::symmetric_eigen(&h, true).unwrap();
        let v = e.eigenvectors.unwrap();
        ((e.eigenvalues[0], e.eigenvalues[1]), (v[0][0], v[0][1]))
    }

    #[test]
    fn ground_energy_values() {
        assert_eq!(ground_energy(&p(1.0, 1.0, 0.0), &LambdaSolution::fixed(0.0)), -0.5);
        let e = ground_energy(&p(1.0, 1.0, 0.1), &LambdaSolution::fixed(-0.0501250));
        assert!((e + 0.505_006_270_924_139_6).abs() < 1e-12);
        // second-order perturbation theory
        assert!((e + 0.505).abs() < 1e-4);
        let e = ground_energy(&p(1.0, 0.0, 0.5), &LambdaSolution::fixed(-0.5));
        assert!((e + 0.25).abs() < 1e-15);
    }

    #[test]
    fn excited_energy_values() {
        let z = LambdaSolution::fixed(0.0);
        assert_eq!(excited_energies(&p(1.0, 1.0, 0.0), &z, 0), (0.5, 0.5));
        assert_eq!(excited_energies(&p(1.0, 0.5, 0.0), &z, 0), (0.25, 0.75));

        let q = p(8.13, 4.25, 0.813);
        let lam = lambda_closed_form(&q);
        let (lo, hi) = excited_energies(&q, &lam, 0);
        assert!((lo - 1.958_370_054_600_684).abs() < 1e-12);
        assert!((hi - 6.064_532_201_673_31).abs() < 1e-12);
        let e_g = ground_energy(&q, &lam);
        assert!((e_g + 2.178_469_349_986_019).abs() < 1e-12);
    }

    #[test]
    fn blocks_match_numeric_diagonalization() {
        let q = p(1.0, 1.3, 0.27);
        let lam = lambda_closed_form(&q);
        for n in 0..12 {
            let b = Block::new(&q, lam.lambda, n);
            let ((lo, hi), (c0, c1)) = eig2(b.upper_x, b.lower_x, b.coupling);
            let (elo, ehi) = excited_energies(&q, &lam, n);
            assert!((lo - elo).abs() < 1e-12 && (hi - ehi).abs() < 1e-12);
            // lower eigenvector ∝ (cos θ, −sin θ)
            let theta = mixing_angle(&q, &lam, n);
            assert!((c0 * theta.cos() - c1 * theta.sin()).abs() > 1.0 - 1e-12);
        }
    }

    #[test]
    fn mixing_angle_cases() {
        let z = LambdaSolution::fixed(0.0);
        for n in 0..5 {
            assert_eq!(mixing_angle(&p(1.0, 0.5, 0.0), &z, n), 0.0);
        }
        assert_eq!(mixing_angle(&p(1.0, 1.0, 0.0), &z, 0), 0.0);

        let q = p(1.0, 1.0, 0.1);
        let theta = mixing_angle(&q, &lambda_root(&q).unwrap(), 0);
        assert!((theta - std::f64::consts::FRAC_PI_4).abs() < 0.05);
        assert!((0.0..FRAC_PI_2).contains(&theta));
    }

    #[test]
    fn intermediates_values() {
        let q = p(1.0, 1.0, 0.3);
        let lam = lambda_root(&q).unwrap();
        let it = intermediates(&q, &lam, 0);
        assert!((it.g0 - (-2.0 * lam.lambda * lam.lambda).exp()).abs() < 1e-15);
        assert_eq!(it.f1, it.f1_leading);
        for n in 0..6 {
            let it = intermediates(&q, &lam, n);
            assert!(it.counter_rotating_leading.abs() <= 1e-12);
            assert!((it.rotating - 2.0 * (lam.lambda + 0.3)).abs() < 1e-15);
        }
    }

    #[test]
    fn decoupled_spectrum_is_exact() {
        let s = analytic_spectrum(&p(1.0, 1.0, 0.0), 4).unwrap();
        assert_eq!(&s.sorted_energies[..5], &[-0.5, 0.5, 0.5, 1.5, 1.5]);
        assert!(matches!(analytic_spectrum(&p(1.0, 1.0, 0.0), 0), Err(AnalyticError::NoLevels)));
    }

    #[test]
    fn zero_splitting_is_displaced_oscillator() {
        for g in [0.1, 0.3, 0.5] {
            let q = p(1.0, 0.0, g);
            let lam = lambda_root(&q).unwrap();
            assert!((lam.lambda + g).abs() < 1e-12);
            assert!((ground_energy(&q, &lam) + g * g).abs() < 1e-10);
            for n in 0..6 {
                let (lo, hi) = excited_energies(&q, &lam, n);
                assert!((lo - (n as f64 - g * g)).abs() < 1e-10);
                assert!((hi - ((n + 1) as f64 - g * g)).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn ground_is_lowest() {
        for omega_r in [0.25, 0.5, 1.0, 1.5, 2.0] {
            for k in 0..=10 {
                let s = analytic_spectrum(&p(1.0, omega_r, 0.05 * k as f64), 6).unwrap();
                assert!(s.levels.iter().all(|l| s.ground < l.e_minus && l.e_minus <= l.e_plus));
            }
        }
    }

    #[test]
    fn state_norms() {
        let q = p(1.0, 1.0, 0.3);
        let lam = lambda_closed_form(&q);
        let g = ground_state(&q, &lam, 40).unwrap();
        assert!((g.norm() - 1.0).abs() < 1e-10);
        let e = excited_state(&q, &lam, 3, 60).unwrap();
        assert!((e.norm() - 1.0).abs() < 1e-10);
        assert_eq!(e.label, StateLabel::Excited(3));
    }

    #[test]
    fn decoupled_states_are_fock_states() {
        let q = p(1.0, 0.5, 0.0);
        let lam = lambda_closed_form(&q);
        let g = ground_state(&q, &lam, 10).unwrap();
        let nonzero: Vec<usize> = (0..g.amplitudes.len()).filter(|&i| g.amplitudes[i].abs() > 1e-15).collect();
        assert_eq!(nonzero, vec![BasisIndex::new(Spin::Down, 0).flat()]);

        let h = build_hamiltonian(&q, 10).unwrap();
        let e1 = excited_state(&q, &lam, 1, 10).unwrap();
        let nonzero: Vec<usize> = (0..e1.amplitudes.len()).filter(|&i| e1.amplitudes[i].abs() > 1e-15).collect();
        assert_eq!(nonzero.len(), 1);
        assert!((h.expectation(&e1.amplitudes) - 0.25).abs() < 1e-14);
    }

    #[test]
    fn states_reject_small_cutoff() {
        let q = p(1.0, 1.0, 0.5);
        let lam = lambda_closed_form(&q);
        assert!(matches!(ground_state(&q, &lam, 3), Err(AnalyticError::TruncationTooSmall { .. })));
        assert!(matches!(excited_state(&q, &lam, 5, 2), Err(AnalyticError::TruncationTooSmall { .. })));
        assert!(matches!(excited_state(&q, &lam, 0, 20), Err(AnalyticError::InvalidExcitation(0))));
    }

    #[test]
    fn photon_numbers() {
        assert_eq!(mean_photon_ground(&LambdaSolution::fixed(0.0)), 0.0);
        let l = LambdaSolution::fixed(-0.0501250);
        assert!((mean_photon_ground(&l) - 0.002_512_515_625).abs() < 1e-15);

        // decoupled, Ω < ω: first excited is |↑,0⟩, second |↓,1⟩
        let q = p(1.0, 0.5, 0.0);
        let z = LambdaSolution::fixed(0.0);
        assert!(mean_photon_excited(&q, &z, 1).unwrap().abs() < 1e-15);
        assert!((mean_photon_excited(&q, &z, 2).unwrap() - 1.0).abs() < 1e-15);
        assert!((mean_photon_excited(&q, &z, 3).unwrap() - 1.0).abs() < 1e-15);
        assert!((mean_photon_excited(&q, &z, 4).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn block_indexed_photons_match_states() {
        // the block-indexed form is the exact ⟨a†a⟩ of the reconstructed state
        let q = p(1.0, 0.8, 0.2);
        let lam = lambda_closed_form(&q);
        for m in 1..=6 {
            let state = excited_state(&q, &lam, m, 60).unwrap();
            let direct = mean_photon(&state.amplitudes);
            let formula = mean_photon_excited_block_indexed(&q, &lam, m).unwrap();
            assert!((direct - formula).abs() < 1e-10, "m={m}: {direct} vs {formula}");
        }
        let g = ground_state(&q, &lam, 60).unwrap();
        assert!((mean_photon(&g.amplitudes) - mean_photon_ground(&lam)).abs() < 1e-12);
    }

    #[test]
    fn photon_numbers_follow_exact_oracle() {
        for (omega_r, m) in [(0.5, 2), (1.8, 1)] {
            let q = p(1.0, omega_r, 0.1);
            let lam = lambda_closed_form(&q);
            let h = build_hamiltonian(&q, 60).unwrap();
            let s = eigen_decompose(&h, true).unwrap();
            let exact = mean_photon(s.vector(m).unwrap());
            let analytic = mean_photon_excited(&q, &lam, m).unwrap();
            assert!((exact - analytic).abs() < 0.05, "Ω={omega_r} m={m}");
        }
        let q = p(1.0, 1.0, 0.1);
        let s = eigen_decompose(&build_hamiltonian(&q, 60).unwrap(), true).unwrap();
        let exact = mean_photon(s.vector(0).unwrap());
        assert!((exact - mean_photon_ground(&lambda_closed_form(&q))).abs() < 2e-3);
    }

    #[test]
    fn bloch_siegert_values() {
        assert_eq!(bloch_siegert_shift(&p(8.13, 4.25, 0.0)), 0.0);
        let shift = bloch_siegert_shift(&p(8.13, 4.25, 0.813));
        assert!((shift - 0.050_305_353_918_899_5).abs() < 1e-12);
    }

    #[test]
    fn bloch_siegert_is_monotone_in_g() {
        let base = p(8.13, 4.25, 0.0);
        let mut last = bloch_siegert_shift(&base);
        for k in 1..=300 {
            let g = 0.3 * 8.13 * k as f64 / 300.0;
            let shift = bloch_siegert_shift(&base.with_g(g));
            assert!(shift > last, "g={g}");
            last = shift;
        }
    }
}
