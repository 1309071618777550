use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use ppinterp::{Method, SweepOrder};
use ppinterp_bench::{
    run_experiment, write_csv, ExperimentSpec, MeshFamily, TestFunction, DEFAULT_LADDER,
    HIDDEN_EXTREMUM_LADDER,
};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FunctionArg {
    F1,
    F2,
    F7,
    F10,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MeshArg {
    Uniform,
    Lgl,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Pchip,
    Dbi,
    Ppi,
    Linear,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SweepArg {
    Xy,
    Yx,
}

/// Regenerate L2-error convergence tables as CSV.
#[derive(Debug, Parser)]
#[command(name = "ppinterp-bench", version)]
struct Cli {
    #[arg(long, value_enum)]
    function: FunctionArg,
    #[arg(long, value_enum, default_value = "uniform")]
    mesh: MeshArg,
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Target polynomial degree (DBI/PPI); ignored by pchip and linear.
    #[arg(long, default_value_t = 3)]
    degree: usize,
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    /// Comma-separated point counts per axis.
    #[arg(long, value_delimiter = ',')]
    ni: Option<Vec<usize>>,
    /// CSV destination; the table is also printed to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "xy")]
    sweep_order: SweepArg,
    /// Use the even ladder 16..256 so the peak at 0 is never a node.
    #[arg(long)]
    hidden_extremum: bool,
}

impl Cli {
    fn spec(&self) -> ExperimentSpec {
        let function = match self.function {
            FunctionArg::F1 => TestFunction::F1,
            FunctionArg::F2 => TestFunction::F2,
            FunctionArg::F7 => TestFunction::F7,
            FunctionArg::F10 => TestFunction::F10,
        };
        let mesh = match self.mesh {
            MeshArg::Uniform => MeshFamily::Uniform,
            MeshArg::Lgl => MeshFamily::Lgl,
        };
        let (method, degree) = match self.method {
            MethodArg::Pchip => (Method::Pchip, 3),
            MethodArg::Dbi => (Method::Dbi, self.degree),
            MethodArg::Ppi => (Method::Ppi, self.degree),
            MethodArg::Linear => (Method::Linear, 1),
        };
        let sweep = match self.sweep_order {
            SweepArg::Xy => SweepOrder::XThenY,
            SweepArg::Yx => SweepOrder::YThenX,
        };
        let ladder = match (&self.ni, self.hidden_extremum) {
            (Some(ni), _) => ni.clone(),
            (None, true) => HIDDEN_EXTREMUM_LADDER.to_vec(),
            (None, false) => DEFAULT_LADDER.to_vec(),
        };
        ExperimentSpec::new(function, mesh, method, degree)
            .with_epsilon(self.epsilon)
            .with_sweep(sweep)
            .with_ni(ladder)
    }
}

fn run(cli: &Cli) -> Result<(), Box<dyn std::error::Error>> {
    if cli.hidden_extremum {
        if matches!(cli.mesh, MeshArg::Lgl) {
            return Err("--hidden-extremum needs a uniform mesh".into());
        }
        if cli.ni.iter().flatten().any(|n| n % 2 == 1) {
            return Err("--hidden-extremum needs even point counts".into());
        }
    }
    let spec = cli.spec();
    let rows = run_experiment(&spec)?;

    let mut table = Vec::new();
    write_csv(&mut table, &spec, &rows)?;
    if let Some(path) = &cli.out {
        let mut file = BufWriter::new(File::create(path)?);
        file.write_all(&table)?;
        file.flush()?;
    }
    io::stdout().write_all(&table)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
