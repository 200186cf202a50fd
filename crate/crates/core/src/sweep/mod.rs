//! Parameter sweeps comparing the analytic and exact solvers.
//!
//! A sweep varies either g or Ω over a uniform grid with the other two
//! parameters fixed. Grid points are solved in parallel and assembled in
//! grid order, so the resulting [`SweepTable`] does not depend on
//! scheduling.

mod presets;
mod table;

pub use presets::{preset, PRESET_NAMES};
pub use table::{Metadata, SweepTable};

use crate::analytic::{
    analytic_spectrum_with, bloch_siegert_shift_with, mean_photon_excited, mean_photon_excited_block_indexed,
    mean_photon_ground, StateLabel,
};
use crate::error::{Error, Result};
use crate::exact::{exact_spectrum_with, mean_photon, parity_resolved_vectors, ExactOptions, DEFAULT_N_MAX};
use crate::lambda::{lambda_closed_form, lambda_root, LambdaSolution};
use crate::params::{jc_energies, validate_params, ModelParams, Unit};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweptParam {
    #[serde(rename = "g")]
    G,
    #[serde(rename = "Omega")]
    OmegaR,
}

impl SweptParam {
    pub fn name(self) -> &'static str {
        match self {
            SweptParam::G => "g",
            SweptParam::OmegaR => "Omega",
        }
    }

    fn apply(self, p: ModelParams, value: f64) -> ModelParams {
        match self {
            SweptParam::G => p.with_g(value),
            SweptParam::OmegaR => p.with_omega_r(value),
        }
    }
}

impl FromStr for SweptParam {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g" => Ok(SweptParam::G),
            "Omega" | "Omega_r" | "omega_r" => Ok(SweptParam::OmegaR),
            _ => Err(Error::InvalidSpec(format!("cannot sweep `{s}` (use g or Omega)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Observable {
    Lambda,
    Energy,
    MeanPhoton,
    Theta,
    BsShift,
}

impl FromStr for Observable {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "energy" => Ok(Observable::Energy),
            "mean_photon" | "mean-photon" => Ok(Observable::MeanPhoton),
            "bs_shift" | "bs-shift" => Ok(Observable::BsShift),
            "theta" => Ok(Observable::Theta),
            "lambda" => Ok(Observable::Lambda),
            _ => Err(Error::InvalidSpec(format!("unknown observable `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Methods {
    Analytic,
    Exact,
    #[default]
    Both,
}

impl Methods {
    pub fn analytic(self) -> bool {
        matches!(self, Methods::Analytic | Methods::Both)
    }
    pub fn exact(self) -> bool {
        matches!(self, Methods::Exact | Methods::Both)
    }
}

impl FromStr for Methods {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "analytic" => Ok(Methods::Analytic),
            "exact" => Ok(Methods::Exact),
            "both" => Ok(Methods::Both),
            _ => Err(Error::InvalidSpec(format!("unknown method set `{s}`"))),
        }
    }
}

/// Which λ feeds the analytic formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaChoice {
    #[default]
    Closed,
    Root,
}

impl LambdaChoice {
    pub fn solve(self, p: &ModelParams) -> Result<LambdaSolution> {
        Ok(match self {
            LambdaChoice::Closed => lambda_closed_form(p),
            LambdaChoice::Root => lambda_root(p)?,
        })
    }
}

impl fmt::Display for LambdaChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LambdaChoice::Closed => "closed",
            LambdaChoice::Root => "root",
        })
    }
}

impl FromStr for LambdaChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(LambdaChoice::Closed),
            "root" => Ok(LambdaChoice::Root),
            _ => Err(Error::InvalidSpec(format!("unknown lambda method `{s}`"))),
        }
    }
}

/// What to compute at every point.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Number of energies (ground included) or photon numbers to report.
    pub levels: usize,
    pub observables: BTreeSet<Observable>,
    pub methods: Methods,
    pub lambda: LambdaChoice,
    /// Starting photon cutoff of the exact solver.
    pub n_max: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            levels: 8,
            observables: [Observable::Energy].into_iter().collect(),
            methods: Methods::Both,
            lambda: LambdaChoice::Closed,
            n_max: DEFAULT_N_MAX,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.observables.is_empty() {
            return Err(Error::InvalidSpec("no observables requested".into()));
        }
        if self.levels == 0 {
            return Err(Error::InvalidSpec("levels must be >= 1".into()));
        }
        if self.n_max == 0 || self.n_max > crate::exact::MAX_N_MAX / 2 {
            return Err(Error::InvalidSpec(format!(
                "n-max must be in 1..={}",
                crate::exact::MAX_N_MAX / 2
            )));
        }
        if 2 * (self.n_max + 1) < self.levels.max(2) {
            return Err(Error::InvalidSpec("n-max too small for the requested levels".into()));
        }
        Ok(())
    }

    fn has(&self, o: Observable) -> bool {
        self.observables.contains(&o)
    }

    /// Column names of a row, in order.
    pub fn columns(&self) -> Vec<String> {
        let mut cols: Vec<String> = ["omega", "Omega", "g"].map(String::from).to_vec();
        let (ana, ex) = (self.methods.analytic(), self.methods.exact());
        if self.has(Observable::Lambda) {
            cols.extend(["lambda".into(), "lambda_residual".into()]);
        }
        if self.has(Observable::Energy) {
            for k in 0..self.levels {
                if ana {
                    cols.push(format!("E{k}_analytic"));
                }
                if ex {
                    cols.push(format!("E{k}_exact"));
                }
                if ana && ex {
                    cols.push(format!("E{k}_abs_err"));
                }
            }
        }
        if self.has(Observable::MeanPhoton) {
            for k in 0..self.levels {
                if ana {
                    cols.push(format!("n{k}_analytic"));
                    cols.push(format!("n{k}_analytic_block"));
                }
                if ex {
                    cols.push(format!("n{k}_exact"));
                }
                if ana && ex {
                    cols.push(format!("n{k}_abs_err"));
                    cols.push(format!("n{k}_abs_err_block"));
                }
            }
        }
        if self.has(Observable::Theta) {
            for n in 0..self.levels {
                cols.push(format!("theta{n}"));
            }
        }
        if self.has(Observable::BsShift) {
            if ana {
                cols.push("bs_analytic".into());
            }
            if ex {
                cols.push("bs_exact".into());
            }
            if ana && ex {
                cols.push("bs_abs_err".into());
            }
        }
        cols
    }
}

/// Uniform grid over one parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub swept: SweptParam,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

impl Grid {
    pub fn values(&self) -> Vec<f64> {
        let span = self.to - self.from;
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| self.from + span * i as f64 / last)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub grid: Grid,
    /// Non-swept parameters; the swept field is overwritten per point.
    pub fixed: ModelParams,
    pub config: RunConfig,
    pub unit: Unit,
    /// Preset name, if the spec came from one.
    pub preset: Option<String>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        self.config.validate()?;
        let g = &self.grid;
        if g.steps < 2 {
            return Err(Error::InvalidSpec("steps must be >= 2".into()));
        }
        if !(g.from.is_finite() && g.to.is_finite() && g.from < g.to) {
            return Err(Error::InvalidSpec(format!("need from < to (got {} .. {})", g.from, g.to)));
        }
        for v in [g.from, g.to] {
            validate_params(g.swept.apply(self.fixed, v))?;
        }
        Ok(())
    }
}

/// All requested quantities at one parameter point, in [`RunConfig::columns`] order.
pub fn run_point(p: &ModelParams, config: &RunConfig) -> Result<Vec<f64>> {
    config.validate()?;
    let p = validate_params(*p)?;
    let (ana, ex) = (config.methods.analytic(), config.methods.exact());
    let levels = config.levels;

    let lam = config.lambda.solve(&p)?;
    let analytic = analytic_spectrum_with(&p, &lam, levels + 1)?;
    let ranked = analytic.ranked_states();

    let exact = if ex {
        let want_vectors = config.has(Observable::MeanPhoton);
        let opts = ExactOptions {
            initial_n_max: config.n_max,
            want_vectors,
            ..Default::default()
        };
        Some(exact_spectrum_with(&p, levels.max(2), &opts)?)
    } else {
        None
    };

    let mut row = vec![p.omega, p.omega_r, p.g];

    if config.has(Observable::Lambda) {
        row.extend([lam.lambda, lam.residual]);
    }

    if config.has(Observable::Energy) {
        for k in 0..levels {
            let a = analytic.sorted_energies[k];
            let e = exact.as_ref().map(|s| s.eigenvalues[k]);
            if ana {
                row.push(a);
            }
            if let Some(e) = e {
                row.push(e);
                if ana {
                    row.push((a - e).abs());
                }
            }
        }
    }

    if config.has(Observable::MeanPhoton) {
        let photons = |label: StateLabel| -> Result<(f64, f64)> {
            Ok(match label {
                StateLabel::Ground => {
                    let n = mean_photon_ground(&lam);
                    (n, n)
                }
                StateLabel::Excited(m) => (
                    mean_photon_excited(&p, &lam, m)?,
                    mean_photon_excited_block_indexed(&p, &lam, m)?,
                ),
            })
        };
        let exact_vectors = match &exact {
            Some(s) => Some(
                parity_resolved_vectors(s, 1e-9 * p.scale())
                    .ok_or_else(|| Error::InvalidSpec("exact eigenvectors missing".into()))?,
            ),
            None => None,
        };
        for k in 0..levels {
            let (verbatim, block) = photons(ranked[k].0)?;
            if ana {
                row.extend([verbatim, block]);
            }
            if let Some(vecs) = &exact_vectors {
                let e = mean_photon(&vecs[k]);
                row.push(e);
                if ana {
                    row.extend([(verbatim - e).abs(), (block - e).abs()]);
                }
            }
        }
    }

    if config.has(Observable::Theta) {
        let mut thetas: Vec<f64> = analytic.levels.iter().map(|l| l.theta).collect();
        thetas.truncate(levels);
        row.extend(thetas);
    }

    if config.has(Observable::BsShift) {
        let a = bloch_siegert_shift_with(&p, &lam);
        if ana {
            row.push(a);
        }
        if let Some(s) = &exact {
            let jc = jc_energies(&p, 1);
            let e = (s.eigenvalues[1] - s.eigenvalues[0]) - (jc.doublets[0].0 - jc.ground_energy);
            row.push(e);
            if ana {
                row.push((a - e).abs());
            }
        }
    }

    debug_assert_eq!(row.len(), config.columns().len());
    Ok(row)
}

/// One row per grid point, in grid order.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable> {
    spec.validate()?;
    let name = spec.grid.swept.name();
    let rows = spec
        .grid
        .values()
        .into_par_iter()
        .map(|value| {
            let p = spec.grid.swept.apply(spec.fixed, value);
            run_point(&p, &spec.config).map_err(|e| Error::AtPoint {
                name,
                value,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut metadata = Metadata::new(spec.unit, &spec.config);
    metadata.preset = spec.preset.clone();
    metadata.swept = Some(name.to_string());
    if let Some(note) = spec.preset.as_deref().and_then(presets::note) {
        metadata.note = Some(note.to_string());
    }
    let table = SweepTable {
        metadata,
        columns: spec.config.columns(),
        rows,
    };
    table.validate()?;
    Ok(table)
}

/// A single-point table.
pub fn run_single(p: &ModelParams, config: &RunConfig, unit: Unit) -> Result<SweepTable> {
    let row = run_point(p, config)?;
    let metadata = Metadata::new(unit, config);
    let table = SweepTable {
        metadata,
        columns: config.columns(),
        rows: vec![row],
    };
    table.validate()?;
    Ok(table)
}
