use clap::{Args, Parser, Subcommand, ValueEnum};
use rabi_core::sweep::{preset, Grid, LambdaChoice, Methods, Observable, SweptParam, PRESET_NAMES};
use rabi_core::{run_single, run_sweep, Error, ModelParams, RunConfig, SweepSpec, SweepTable, Unit};
use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "rabi", version, about = "Quantum Rabi model spectra: analytic approximation vs exact diagonalization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a single parameter point.
    Point {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sweep g or Omega over a uniform grid.
    Sweep {
        /// Parameter to sweep: g or Omega.
        #[arg(long, default_value = "g")]
        param: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        /// Number of grid points, endpoints included.
        #[arg(long, default_value_t = 51)]
        steps: usize,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bloch-Siegert shift of the lowest transition at one point.
    BsShift {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long = "lambda-method", value_enum, default_value_t = LambdaArg::Closed)]
        lambda_method: LambdaArg,
        #[arg(long = "n-max", default_value_t = 60)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = UnitArg::Omega)]
        unit: UnitArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a built-in figure sweep.
    Preset {
        /// One of fig1a, fig1b, fig1c, fig2a, fig2b, fig3, fig4.
        name: String,
        #[arg(long = "lambda-method", value_enum)]
        lambda_method: Option<LambdaArg>,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// Oscillator frequency.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    omega: f64,
    /// Two-level splitting.
    #[arg(long = "Omega", default_value_t = 1.0, allow_negative_numbers = true)]
    omega_r: f64,
    /// Coupling strength; the sign is irrelevant to the spectrum.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    g: f64,
}

impl ParamArgs {
    fn params(&self) -> Result<ModelParams, Error> {
        Ok(ModelParams::canonical(self.omega, self.omega_r, self.g)?)
    }
}

#[derive(Args)]
struct RunArgs {
    /// Number of levels (ground included) to report.
    #[arg(long, default_value_t = 8)]
    levels: usize,
    #[arg(long = "n-max", default_value_t = 60)]
    n_max: usize,
    #[arg(long = "lambda-method", value_enum, default_value_t = LambdaArg::Closed)]
    lambda_method: LambdaArg,
    #[arg(long, value_enum, default_value_t = UnitArg::Omega)]
    unit: UnitArg,
    /// Comma-separated: energy, mean_photon, bs_shift, theta, lambda.
    #[arg(long, default_value = "energy")]
    observables: String,
    /// analytic, exact or both.
    #[arg(long, default_value = "both")]
    methods: String,
}

impl RunArgs {
    fn config(&self) -> Result<RunConfig, Error> {
        let observables = self
            .observables
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<BTreeSet<Observable>, _>>()?;
        Ok(RunConfig {
            levels: self.levels,
            observables,
            methods: self.methods.parse::<Methods>()?,
            lambda: self.lambda_method.into(),
            n_max: self.n_max,
        })
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall time in the metadata.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LambdaArg {
    Closed,
    Root,
}

impl From<LambdaArg> for LambdaChoice {
    fn from(a: LambdaArg) -> Self {
        match a {
            LambdaArg::Closed => LambdaChoice::Closed,
            LambdaArg::Root => LambdaChoice::Root,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum UnitArg {
    Omega,
    Ghz,
}

impl From<UnitArg> for Unit {
    fn from(a: UnitArg) -> Self {
        match a {
            UnitArg::Omega => Unit::Omega,
            UnitArg::Ghz => Unit::Ghz,
        }
    }
}

fn execute(command: Command) -> Result<(), Error> {
    let start = Instant::now();
    let (table, output) = match command {
        Command::Point { params, run, output } => {
            let table = run_single(&params.params()?, &run.config()?, run.unit.into())?;
            (table, output)
        }
        Command::Sweep {
            param,
            from,
            to,
            steps,
            params,
            run,
            output,
        } => {
            let spec = SweepSpec {
                grid: Grid {
                    swept: param.parse::<SweptParam>()?,
                    from,
                    to,
                    steps,
                },
                fixed: params.params()?,
                config: run.config()?,
                unit: run.unit.into(),
                preset: None,
            };
            (run_sweep(&spec)?, output)
        }
        Command::BsShift {
            params,
            lambda_method,
            n_max,
            unit,
            output,
        } => {
            let config = RunConfig {
                levels: 2,
                observables: [Observable::BsShift].into_iter().collect(),
                methods: Methods::Both,
                lambda: lambda_method.into(),
                n_max,
            };
            (run_single(&params.params()?, &config, unit.into())?, output)
        }
        Command::Preset {
            name,
            lambda_method,
            n_max,
            output,
        } => {
            let mut spec = preset(&name).ok_or_else(|| {
                Error::InvalidSpec(format!("unknown preset `{name}` (available: {})", PRESET_NAMES.join(", ")))
            })?;
            if let Some(l) = lambda_method {
                spec.config.lambda = l.into();
            }
            if let Some(n) = n_max {
                spec.config.n_max = n;
            }
            (run_sweep(&spec)?, output)
        }
    };
    let mut table = table;
    if output.timing {
        table.metadata.wall_time_s = Some(start.elapsed().as_secs_f64());
    }
    emit(&table, &output)
}

fn emit(table: &SweepTable, output: &OutputArgs) -> Result<(), Error> {
    let bytes = match output.format {
        Format::Csv => table.to_csv_string()?,
        Format::Json => table.to_json_string()?,
    };
    let (path, result) = match &output.out {
        Some(path) => (
            path.clone(),
            File::create(path).and_then(|f| {
                let mut w = BufWriter::new(f);
                w.write_all(bytes.as_bytes())?;
                w.flush()
            }),
        ),
        None => {
            let mut stdout = std::io::stdout().lock();
            (
                PathBuf::from("<stdout>"),
                stdout.write_all(bytes.as_bytes()).and_then(|_| stdout.flush()),
            )
        }
    };
    result.map_err(|source| Error::Io { path, source })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
