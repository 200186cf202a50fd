//! Numerically exact Rabi spectrum in a truncated Fock ⊗ spin basis.
//!
//! The basis is interleaved, `|↑,0⟩, |↓,0⟩, |↑,1⟩, |↓,1⟩, …`, so the
//! Hamiltonian is banded; it is nonetheless stored dense.

use crate::eigen::{symmetric_eigen, EigenError};
use crate::matrix::{dot, DenseSymMatrix, SquareMatrix};
use crate::params::{basis_dim, BasisIndex, ModelParams, Spin};
use thiserror::Error;

/// Largest photon cutoff any routine here will build.
pub const MAX_N_MAX: usize = 4096;
/// Starting cutoff of [`exact_spectrum`].
pub const DEFAULT_N_MAX: usize = 60;
/// Bound on the top-row amplitude of displaced states.
pub const DISPLACEMENT_LEAKAGE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExactError {
    #[error("photon cutoff {0} exceeds the limit of {MAX_N_MAX}")]
    DimensionOverflow(usize),
    #[error("photon cutoff must be >= 1")]
    InvalidTruncation,
    #[error("requested {requested} levels but the truncated space has dimension {dim}")]
    InvalidLevels { requested: usize, dim: usize },
    #[error("lowest levels still moved by {defect:e} at cutoff {n_max}")]
    NoConvergence { n_max: usize, defect: f64 },
    #[error("displaced state leaks {leakage:e} into the top Fock level; raise the cutoff")]
    TruncationTooSmall { leakage: f64 },
    #[error("displacement |lambda| = {0} is outside (-1, 1)")]
    DisplacementTooLarge(f64),
    #[error(transparent)]
    Eigen(#[from] EigenError),
}

/// Sorted eigenpairs of a truncated Rabi Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactSpectrum {
    pub eigenvalues: Vec<f64>,
    /// Orthonormal, `eigenvectors[k]` for `eigenvalues[k]`, indexed by
    /// [`BasisIndex::flat`].
    pub eigenvectors: Option<Vec<Vec<f64>>>,
    pub n_max: usize,
    /// Whether a doubling check certified the requested levels.
    /// Always `false` for a bare [`eigen_decompose`].
    pub converged: bool,
    /// max |ΔE_k| between the last two cutoffs, if a doubling check ran.
    pub convergence_defect: Option<f64>,
}

impl ExactSpectrum {
    pub fn vector(&self, k: usize) -> Option<&[f64]> {
        self.eigenvectors.as_ref()?.get(k).map(Vec::as_slice)
    }
}

fn check_cutoff(n_max: usize) -> Result<(), ExactError> {
    if n_max == 0 {
        return Err(ExactError::InvalidTruncation);
    }
    if n_max > MAX_N_MAX {
        return Err(ExactError::DimensionOverflow(n_max));
    }
    Ok(())
}

/// `H = ω a†a + (Ω/2) σ_z + g σ_x (a† + a)` on photon numbers `0..=n_max`.
pub fn build_hamiltonian(p: &ModelParams, n_max: usize) -> Result<DenseSymMatrix, ExactError> {
    check_cutoff(n_max)?;
    let mut h = DenseSymMatrix::zeros(basis_dim(n_max));
    for n in 0..=n_max {
        for spin in [Spin::Up, Spin::Down] {
            let i = BasisIndex::new(spin, n).flat();
            h.set(i, i, n as f64 * p.omega + 0.5 * spin.sign() * p.omega_r);
        }
        if n < n_max {
            let c = p.g * (n as f64 + 1.0).sqrt();
            let up = |k| BasisIndex::new(Spin::Up, k).flat();
            let down = |k| BasisIndex::new(Spin::Down, k).flat();
            h.set(up(n), down(n + 1), c);
            h.set(down(n), up(n + 1), c);
        }
    }
    Ok(h)
}

/// Full decomposition of one matrix, no truncation check.
pub fn eigen_decompose(h: &DenseSymMatrix, want_vectors: bool) -> Result<ExactSpectrum, ExactError> {
    let eig = symmetric_eigen(h, want_vectors)?;
    Ok(ExactSpectrum {
        eigenvalues: eig.eigenvalues,
        eigenvectors: eig.eigenvectors,
        n_max: (h.dim() / 2).saturating_sub(1),
        converged: false,
        convergence_defect: None,
    })
}

/// Settings for [`exact_spectrum_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactOptions {
    pub initial_n_max: usize,
    /// Absolute tolerance on the movement of the requested levels. `None`
    /// means 1e-10·ω.
    pub tol: Option<f64>,
    pub want_vectors: bool,
    /// Cutoff beyond which doubling gives up.
    pub max_n_max: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            initial_n_max: DEFAULT_N_MAX,
            tol: None,
            want_vectors: false,
            max_n_max: MAX_N_MAX,
        }
    }
}

/// Lowest `k_levels` eigenvalues, doubling the cutoff from 60 until they
/// move by less than `tol`.
pub fn exact_spectrum(p: &ModelParams, k_levels: usize, tol: f64) -> Result<ExactSpectrum, ExactError> {
    exact_spectrum_with(
        p,
        k_levels,
        &ExactOptions {
            tol: Some(tol),
            ..Default::default()
        },
    )
}

/// As [`exact_spectrum`] with explicit options. The returned spectrum
/// is the larger of the last two cutoffs.
pub fn exact_spectrum_with(
    p: &ModelParams,
    k_levels: usize,
    opts: &ExactOptions,
) -> Result<ExactSpectrum, ExactError> {
    check_cutoff(opts.initial_n_max)?;
    let max_n_max = opts.max_n_max.min(MAX_N_MAX);
    let dim = basis_dim(opts.initial_n_max);
    if k_levels == 0 || k_levels > dim {
        return Err(ExactError::InvalidLevels {
            requested: k_levels,
            dim,
        });
    }
    let tol = opts.tol.unwrap_or(1e-10 * p.omega);

    let mut n_max = opts.initial_n_max;
    let mut previous = eigen_decompose(&build_hamiltonian(p, n_max)?, false)?;
    loop {
        let next_n = 2 * n_max;
        if next_n > max_n_max {
            let defect = f64::INFINITY;
            return Err(ExactError::NoConvergence { n_max, defect });
        }
        let mut current = eigen_decompose(&build_hamiltonian(p, next_n)?, opts.want_vectors)?;
        let defect = previous.eigenvalues[..k_levels]
            .iter()
            .zip(&current.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if defect < tol {
            current.converged = true;
            current.convergence_defect = Some(defect);
            return Ok(current);
        }
        if 2 * next_n > max_n_max {
            return Err(ExactError::NoConvergence {
                n_max: next_n,
                defect,
            });
        }
        previous = current;
        n_max = next_n;
    }
}

/// ⟨a†a⟩ = Σ n |c_{σ,n}|².
pub fn mean_photon(v: &[f64]) -> f64 {
    v.iter()
        .enumerate()
        .map(|(i, c)| BasisIndex::from_flat(i).n as f64 * c * c)
        .sum()
}

/// ⟨Π⟩ with Π = σ_z (−1)^{a†a}.
pub fn parity_expectation(v: &[f64]) -> f64 {
    v.iter()
        .enumerate()
        .map(|(i, c)| parity_sign(i) * c * c)
        .sum()
}

fn parity_sign(flat: usize) -> f64 {
    let b = BasisIndex::from_flat(flat);
    let photon = if b.n % 2 == 0 { 1.0 } else { -1.0 };
    b.spin.sign() * photon
}

/// Eigenvectors with every cluster of (near-)degenerate levels rotated onto
/// parity eigenstates. Levels closer than `cluster_tol` share a cluster.
pub fn parity_resolved_vectors(spectrum: &ExactSpectrum, cluster_tol: f64) -> Option<Vec<Vec<f64>>> {
    let vectors = spectrum.eigenvectors.as_ref()?;
    let values = &spectrum.eigenvalues;
    let mut out = vectors.clone();
    let mut start = 0;
    while start < values.len() {
        let mut end = start + 1;
        while end < values.len() && values[end] - values[end - 1] < cluster_tol {
            end += 1;
        }
        if end - start > 1 {
            let block = &vectors[start..end];
            let size = block.len();
            let mut pi = DenseSymMatrix::zeros(size);
            for a in 0..size {
                for b in a..size {
                    let val: f64 = block[a]
                        .iter()
                        .zip(&block[b])
                        .enumerate()
                        .map(|(i, (x, y))| parity_sign(i) * x * y)
                        .sum();
                    pi.set(a, b, val);
                }
            }
            let rot = symmetric_eigen(&pi, true)
                .ok()
                .and_then(|e| e.eigenvectors)?;
            for (k, coeffs) in rot.iter().enumerate() {
                let mut v = vec![0.0; block[0].len()];
                for (c, w) in coeffs.iter().zip(block) {
                    v.iter_mut().zip(w).for_each(|(vi, wi)| *vi += c * wi);
                }
                out[start + k] = v;
            }
        }
        start = end;
    }
    Some(out)
}

/// `exp[−λ s (a† − a)]` on Fock states `0..=n_max`, for spin branch
/// `s = ±1`, by scaling and squaring a Taylor series of the antisymmetric
/// generator.
///
/// Fails if the vacuum column leaks more than [`DISPLACEMENT_LEAKAGE`]
/// into the top Fock level.
pub fn displacement_operator(lambda: f64, spin_sign: f64, n_max: usize) -> Result<SquareMatrix, ExactError> {
    check_cutoff(n_max)?;
    if lambda.is_nan() || lambda.abs() >= 1.0 {
        return Err(ExactError::DisplacementTooLarge(lambda));
    }
    let dim = n_max + 1;
    let alpha = -lambda * spin_sign.signum();
    let mut gen = SquareMatrix::zeros(dim);
    for n in 0..n_max {
        let s = (n as f64 + 1.0).sqrt();
        gen[(n + 1, n)] = alpha * s;
        gen[(n, n + 1)] = -alpha * s;
    }

    let norm = gen.norm_inf();
    let mut squarings = 0u32;
    while norm / 2f64.powi(squarings as i32) > 0.5 {
        squarings += 1;
    }
    gen.scale(1.0 / 2f64.powi(squarings as i32));

    let mut result = SquareMatrix::identity(dim);
    let mut term = SquareMatrix::identity(dim);
    for k in 1..=40 {
        term = term.matmul(&gen);
        term.scale(1.0 / k as f64);
        result.add_assign(&term);
        if term.norm_inf() < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        result = result.matmul(&result);
    }

    let leakage = result[(n_max, 0)].abs();
    if leakage > DISPLACEMENT_LEAKAGE {
        return Err(ExactError::TruncationTooSmall { leakage });
    }
    Ok(result)
}

/// Energy of a normalized state: ⟨v|H|v⟩.
pub fn energy_expectation(h: &DenseSymMatrix, v: &[f64]) -> f64 {
    h.expectation(v) / dot(v, v)
}
