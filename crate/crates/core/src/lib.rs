//! Spectrum engine for the quantum Rabi model
//! `H = ω a†a + (Ω/2) σz + g σx (a† + a)`.
//!
//! Two independent solvers are provided: an analytic approximation that
//! maps the model onto a Jaynes-Cummings-like form via a spin-dependent
//! displacement, and an exact diagonalization in a truncated Fock basis.
//! The [`sweep`] module runs both across parameter grids and tabulates
//! the differences.

pub mod analytic;
pub mod eigen;
pub mod error;
pub mod exact;
pub mod lambda;
pub mod matrix;
pub mod params;
pub mod special;
pub mod sweep;

pub use analytic::{
    analytic_spectrum, analytic_spectrum_with, bloch_siegert_shift, bloch_siegert_shift_with, excited_energy,
    excited_state, ground_energy, ground_state, mean_photon_excited, mean_photon_excited_block_indexed,
    mean_photon_ground, mixing_angle, AnalyticError, AnalyticSpectrum, Level, StateLabel, StateVector,
};
pub use eigen::{symmetric_eigen, EigenError, SymmetricEigen};
pub use error::{Error, Result};
pub use exact::{
    build_hamiltonian, exact_spectrum, exact_spectrum_with, mean_photon, parity_expectation, ExactError,
    ExactOptions, ExactSpectrum,
};
pub use lambda::{lambda_closed_form, lambda_root, lambda_root_per_n, LambdaError, LambdaMethod, LambdaSolution};
pub use matrix::{DenseSymMatrix, SquareMatrix};
pub use params::{jc_energies, validate_params, BasisIndex, JcReference, ModelParams, ParamError, Spin, Unit};
pub use special::{laguerre, laguerre_assoc1, SpecialFnError};
pub use sweep::{run_point, run_single, run_sweep, RunConfig, SweepSpec, SweepTable};
