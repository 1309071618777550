use std::fmt;
use std::io::Write;
use std::str::FromStr;

use ppinterp::{
    interpolate_2d, GridData2D, InterpConfig, Interpolant1D, Mesh1D, Method, SweepOrder,
};
use rayon::prelude::*;

use crate::functions::TestFunction;
use crate::meshes::{lgl_mesh, uniform_mesh};
use crate::norm::{
    evaluation_grid, l2_error_1d, l2_error_2d, QUADRATURE_POINTS_1D, QUADRATURE_POINTS_2D,
};
use crate::BenchError;

/// Resolution ladder of the tables.
pub const DEFAULT_LADDER: [usize; 5] = [17, 33, 65, 129, 257];
/// Even ladder: the peak of the Runge functions falls between two nodes.
pub const HIDDEN_EXTREMUM_LADDER: [usize; 5] = [16, 32, 64, 128, 256];

pub const CSV_HEADER: &str = "function,mesh,method,degree,ni,l2_error,rate";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeshFamily {
    Uniform,
    Lgl,
}

impl MeshFamily {
    pub fn name(self) -> &'static str {
        match self {
            Self::Uniform => "uniform",
            Self::Lgl => "lgl",
        }
    }

    /// Abscissae of an `n`-point mesh on `[lo, hi]`.
    pub fn build(self, lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, BenchError> {
        match self {
            Self::Uniform => uniform_mesh(lo, hi, n),
            Self::Lgl => lgl_mesh(lo, hi, n),
        }
    }
}

impl fmt::Display for MeshFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeshFamily {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Self::Uniform),
            "lgl" => Ok(Self::Lgl),
            _ => Err(BenchError::UnknownMesh(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub function: TestFunction,
    pub mesh: MeshFamily,
    pub method: Method,
    pub degree: usize,
    pub epsilon: f64,
    pub ni: Vec<usize>,
    pub sweep: SweepOrder,
    /// Evaluation points per axis; `None` uses 10⁴ (1D) or 10³ (2D).
    pub quadrature: Option<usize>,
}

impl ExperimentSpec {
    pub fn new(function: TestFunction, mesh: MeshFamily, method: Method, degree: usize) -> Self {
        Self {
            function,
            mesh,
            method,
            degree,
            epsilon: InterpConfig::<f64>::DEFAULT_EPSILON,
            ni: DEFAULT_LADDER.to_vec(),
            sweep: SweepOrder::default(),
            quadrature: None,
        }
    }

    pub fn with_ni(mut self, ni: impl Into<Vec<usize>>) -> Self {
        self.ni = ni.into();
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_sweep(mut self, sweep: SweepOrder) -> Self {
        self.sweep = sweep;
        self
    }

    pub fn with_quadrature(mut self, points: usize) -> Self {
        self.quadrature = Some(points);
        self
    }

    pub fn config(&self) -> InterpConfig<f64> {
        InterpConfig::new(self.method, self.degree)
            .with_epsilon(self.epsilon)
            .with_sweep(self.sweep)
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.ni.is_empty() {
            return Err(BenchError::EmptyLadder);
        }
        self.config().validate()?;
        for &n in &self.ni {
            self.mesh.build(0.0, 1.0, n)?;
        }
        Ok(())
    }

    fn quadrature_points(&self) -> usize {
        self.quadrature.unwrap_or(match self.function.arity() {
            1 => QUADRATURE_POINTS_1D,
            _ => QUADRATURE_POINTS_2D,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub ni: usize,
    /// Largest mesh spacing.
    pub spacing: f64,
    pub l2_error: f64,
    /// Observed order against the previous row.
    pub rate: Option<f64>,
}

/// `log(e₀/e₁) / log(h₀/h₁)`.
pub fn convergence_rate(e0: f64, e1: f64, h0: f64, h1: f64) -> f64 {
    (e0 / e1).ln() / (h0 / h1).ln()
}

fn max_spacing(x: &[f64]) -> f64 {
    x.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max)
}

/// Error of the interpolant built on an `n`-point mesh; returns the mesh
/// spacing too.
pub fn measure(spec: &ExperimentSpec, n: usize) -> Result<(f64, f64), BenchError> {
    let f = spec.function;
    let (lo, hi) = f.domain();
    let axis = spec.mesh.build(lo, hi, n)?;
    let q = evaluation_grid(lo, hi, spec.quadrature_points());
    let config = spec.config();
    let error = match f.arity() {
        1 => {
            let mesh = Mesh1D::from_fn(axis.clone(), |x| f.eval1(x))?;
            let approx = Interpolant1D::new(mesh, config)?.eval_many(&q)?;
            l2_error_1d(&q, &approx, |x| f.eval1(x))
        }
        _ => {
            let grid = GridData2D::from_fn(axis.clone(), axis.clone(), |x, y| f.eval2(x, y))?;
            let approx = interpolate_2d(&grid, &q, &q, &config)?;
            l2_error_2d(&q, &q, &approx, |x, y| f.eval2(x, y))
        }
    };
    Ok((max_spacing(&axis), error))
}

/// Runs every resolution of the ladder (concurrently) and attaches rates
/// between consecutive rows.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<ConvergenceRow>, BenchError> {
    spec.validate()?;
    let measured = spec
        .ni
        .par_iter()
        .map(|&n| measure(spec, n))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows: Vec<ConvergenceRow> = spec
        .ni
        .iter()
        .zip(&measured)
        .map(|(&ni, &(spacing, l2_error))| ConvergenceRow {
            ni,
            spacing,
            l2_error,
            rate: None,
        })
        .collect();
    for k in 1..rows.len() {
        let (a, b) = (rows[k - 1], rows[k]);
        rows[k].rate = Some(convergence_rate(
            a.l2_error, b.l2_error, a.spacing, b.spacing,
        ));
    }
    Ok(rows)
}

/// CSV body (header included) for a finished experiment.
pub fn write_csv(
    out: &mut impl Write,
    spec: &ExperimentSpec,
    rows: &[ConvergenceRow],
) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        let rate = row.rate.map(|r| format!("{r:.2}")).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{:.5e},{}",
            spec.function, spec.mesh, spec.method, spec.degree, row.ni, row.l2_error, rate
        )?;
    }
    Ok(())
}

pub fn csv_string(spec: &ExperimentSpec, rows: &[ConvergenceRow]) -> String {
    let mut buf = Vec::new();
    write_csv(&mut buf, spec, rows).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("CSV is ASCII")
}
