use super::{Grid, Methods, Observable, RunConfig, SweepSpec, SweptParam};
use crate::params::{ModelParams, Unit};

pub const PRESET_NAMES: [&str; 7] = ["fig1a", "fig1b", "fig1c", "fig2a", "fig2b", "fig3", "fig4"];

const OMEGA_RANGE_NOTE: &str = "Omega range [0.1, 2.0] omega is a chosen default, not read off a figure axis";

pub(super) fn note(name: &str) -> Option<&'static str> {
    match name {
        "fig2a" | "fig2b" | "fig4" => Some(OMEGA_RANGE_NOTE),
        _ => None,
    }
}

fn energies(levels: usize) -> RunConfig {
    RunConfig {
        levels,
        observables: [Observable::Energy].into_iter().collect(),
        methods: Methods::Both,
        ..Default::default()
    }
}

fn spec(name: &str, grid: Grid, fixed: ModelParams, config: RunConfig, unit: Unit) -> SweepSpec {
    SweepSpec {
        grid,
        fixed,
        config,
        unit,
        preset: Some(name.to_string()),
    }
}

/// Built-in sweep reproducing one of the reference figures.
pub fn preset(name: &str) -> Option<SweepSpec> {
    let g_sweep = Grid {
        swept: SweptParam::G,
        from: 0.0,
        to: 0.5,
        steps: 51,
    };
    let omega_sweep = |steps| Grid {
        swept: SweptParam::OmegaR,
        from: 0.1,
        to: 2.0,
        steps,
    };
    let unit_params = |omega_r: f64, g: f64| ModelParams {
        omega: 1.0,
        omega_r,
        g,
    };
    Some(match name {
        "fig1a" => spec(name, g_sweep, unit_params(0.5, 0.0), energies(8), Unit::Omega),
        "fig1b" => spec(name, g_sweep, unit_params(1.0, 0.0), energies(8), Unit::Omega),
        "fig1c" => spec(name, g_sweep, unit_params(1.5, 0.0), energies(8), Unit::Omega),
        "fig2a" => spec(name, omega_sweep(39), unit_params(1.0, 0.1), energies(8), Unit::Omega),
        "fig2b" => spec(name, omega_sweep(39), unit_params(1.0, 0.3), energies(8), Unit::Omega),
        "fig3" => {
            let omega = 8.13;
            let config = RunConfig {
                levels: 2,
                observables: [Observable::BsShift].into_iter().collect(),
                ..Default::default()
            };
            let grid = Grid {
                swept: SweptParam::G,
                from: 0.0,
                to: 0.3 * omega,
                steps: 31,
            };
            let fixed = ModelParams {
                omega,
                omega_r: 4.25,
                g: 0.0,
            };
            spec(name, grid, fixed, config, Unit::Ghz)
        }
        "fig4" => {
            let config = RunConfig {
                levels: 5,
                observables: [Observable::MeanPhoton].into_iter().collect(),
                ..Default::default()
            };
            spec(name, omega_sweep(20), unit_params(1.0, 0.1), config, Unit::Omega)
        }
        _ => return None,
    })
}
