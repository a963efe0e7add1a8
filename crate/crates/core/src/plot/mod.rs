//! Figure drivers: sampled spirals and distortion profiles written as CSV
//! (exact data) and SVG (presentation).

pub mod cli;
pub mod csv;
pub mod svg;

use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::darboux::{self, DistortionProfile, ResidualReport};
use crate::error::Error as NumericError;
use crate::riccati::DeformationParameter;
use crate::spiral::{self, SpiralPoint};

pub use cli::{parse_cli, run_cli};

/// Default `|Δ|` display limit for distortion plots.
pub const DEFAULT_CLIP: f64 = 200.0;

#[derive(Debug, Error)]
pub enum PlotError {
    #[error(transparent)]
    Cli(#[from] clap::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl PlotError {
    /// 0 for `--help`/`--version`, 1 usage, 2 I/O, 3 failed verification.
    pub fn exit_code(&self) -> i32 {
        match self {
            PlotError::Cli(e) if !e.use_stderr() => 0,
            PlotError::Cli(_) | PlotError::Usage(_) | PlotError::Numeric(_) => 1,
            PlotError::Io { .. } => 2,
            PlotError::Verification(_) => 3,
        }
    }
}

pub type PlotResult<T> = std::result::Result<T, PlotError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Svg,
    Csv,
    Both,
}

impl Format {
    fn svg(self) -> bool {
        matches!(self, Format::Svg | Format::Both)
    }

    fn csv(self) -> bool {
        matches!(self, Format::Csv | Format::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JobKind {
    ArgandGrid,
    Distortion,
    Comparison,
    SingleSpiral,
    ResidualReport,
}

/// A fully validated plotting request.
///
/// `output` is a file path for single-spiral and comparison jobs (the
/// extension is replaced per format) and a directory for grid and
/// distortion jobs. Residual-report jobs write CSV only when `output` is set.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotJob {
    pub kind: JobKind,
    pub parameters: Vec<DeformationParameter>,
    pub phases: Vec<f64>,
    pub z_range: (f64, f64),
    pub samples: usize,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub clip: f64,
    /// Panel columns for the Argand grid.
    pub columns: usize,
}

impl PlotJob {
    pub fn validate(&self) -> PlotResult<()> {
        if self.samples < 2 {
            return Err(PlotError::Usage(format!(
                "--samples must be at least 2, got {}",
                self.samples
            )));
        }
        let (lo, hi) = self.z_range;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(PlotError::Usage(format!(
                "z range [{lo}, {hi}] must be finite and increasing"
            )));
        }
        if self.kind != JobKind::ResidualReport
            && self
                .output
                .as_ref()
                .is_none_or(|p| p.as_os_str().is_empty())
        {
            return Err(PlotError::Usage("--out must not be empty".into()));
        }
        if !(self.clip > 0.0) {
            return Err(PlotError::Usage(format!(
                "--clip must be positive, got {}",
                self.clip
            )));
        }
        match self.kind {
            JobKind::ArgandGrid | JobKind::SingleSpiral if self.parameters.is_empty() => {
                Err(PlotError::Usage("no deformation parameters given".into()))
            }
            JobKind::Distortion if self.phases.is_empty() => {
                Err(PlotError::Usage("no phases given".into()))
            }
            JobKind::Distortion if lo <= 0.0 => Err(PlotError::Usage(format!(
                "distortion profiles need --zmin > 0, got {lo}"
            ))),
            _ => Ok(()),
        }
    }

    fn output(&self) -> &Path {
        self.output.as_deref().unwrap_or_else(|| Path::new("."))
    }
}

/// The five phases `0, ±π/4, ±π/2`.
pub fn default_phases() -> Vec<f64> {
    vec![0.0, PI / 4.0, -PI / 4.0, PI / 2.0, -PI / 2.0]
}

/// The `a, b ∈ {−1, 0, 1}` grid, row-major with `b` decreasing down the rows
/// and `a` increasing across the columns.
pub fn default_grid() -> Vec<DeformationParameter> {
    grid(&[-1.0, 0.0, 1.0], &[-1.0, 0.0, 1.0])
}

pub fn grid(a_values: &[f64], b_values: &[f64]) -> Vec<DeformationParameter> {
    let mut out = Vec::with_capacity(a_values.len() * b_values.len());
    for &b in b_values.iter().rev() {
        for &a in a_values {
            out.push(DeformationParameter::new(a, b));
        }
    }
    out
}

fn write_file(path: &Path, contents: &str) -> PlotResult<PathBuf> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|source| PlotError::Io {
            path: parent.to_path_buf(),
            source,
        })?;
    }
    fs::write(path, contents).map_err(|source| PlotError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(path.to_path_buf())
}

/// Compact label for file names: shortest decimal, `-` kept.
fn number_label(x: f64) -> String {
    let rounded = (x * 1e9).round() / 1e9;
    format!("{}", rounded + 0.0)
}

fn parameter_title(p: &DeformationParameter) -> String {
    format!("a = {}, b = {}", number_label(p.a), number_label(p.b))
}

fn phase_label(phi: f64) -> String {
    format!("{}deg", number_label(phi.to_degrees()))
}

pub fn run_single_spiral(job: &PlotJob) -> PlotResult<Vec<PathBuf>> {
    job.validate()?;
    let param = job.parameters[0];
    let (lo, hi) = job.z_range;
    let curve = spiral::sample_spiral(&param, lo, hi, job.samples)?;
    let base = job.output();
    let mut written = Vec::new();
    if job.format.svg() {
        let doc = svg::argand_svg(
            &parameter_title(&param),
            &[svg::Curve {
                points: &curve.points,
                label: parameter_title(&param),
            }],
        );
        written.push(write_file(&base.with_extension("svg"), &doc)?);
    }
    if job.format.csv() {
        written.push(write_file(
            &base.with_extension("csv"),
            &csv::spiral_csv(&curve),
        )?);
    }
    Ok(written)
}

/// One panel per `(a, b)`; every panel is scaled by its own default `R`
/// (so `θ = 0` stays unscaled).
pub fn run_argand_grid(job: &PlotJob) -> PlotResult<Vec<PathBuf>> {
    job.validate()?;
    let (lo, hi) = job.z_range;
    let curves = job
        .parameters
        .iter()
        .map(|p| spiral::sample_spiral(p, lo, hi, job.samples))
        .collect::<Result<Vec<_>, _>>()?;
    let dir = job.output();
    let mut written = Vec::new();
    if job.format.csv() {
        for curve in &curves {
            let p = curve.parameter;
            let name = format!("spiral_a{}_b{}.csv", number_label(p.a), number_label(p.b));
            written.push(write_file(&dir.join(name), &csv::spiral_csv(curve))?);
        }
    }
    if job.format.svg() {
        let panels: Vec<_> = curves
            .iter()
            .map(|c| {
                let title = parameter_title(&c.parameter);
                (
                    title.clone(),
                    svg::Curve {
                        points: &c.points,
                        label: title,
                    },
                )
            })
            .collect();
        written.push(write_file(
            &dir.join("fig1.svg"),
            &svg::argand_grid_svg(&panels, job.columns),
        )?);
    }
    Ok(written)
}

pub fn run_distortion(job: &PlotJob) -> PlotResult<Vec<PathBuf>> {
    job.validate()?;
    let (lo, hi) = job.z_range;
    let profiles = job
        .phases
        .iter()
        .map(|&phi| darboux::sample_distortion(phi, lo, hi, job.samples))
        .collect::<Result<Vec<_>, _>>()?;
    let dir = job.output();
    let mut written = Vec::new();
    if job.format.csv() {
        for profile in &profiles {
            let name = format!("distortion_phi{}.csv", phase_label(profile.phase));
            written.push(write_file(&dir.join(name), &csv::distortion_csv(profile))?);
        }
    }
    if job.format.svg() {
        let panels: Vec<(String, &DistortionProfile)> = profiles
            .iter()
            .map(|p| {
                (
                    format!("phi = {} deg", number_label(p.phase.to_degrees())),
                    p,
                )
            })
            .collect();
        written.push(write_file(
            &dir.join("fig2.svg"),
            &svg::distortion_svg(&panels, job.z_range, job.clip),
        )?);
    }
    Ok(written)
}

/// Partner spiral `(0, 0)`, near-standard `(10, 0)` and the standard spiral
/// `(C, S)` on a shared grid.
pub struct Comparison {
    pub partner: Vec<SpiralPoint>,
    pub deformed: Vec<SpiralPoint>,
    pub standard: Vec<SpiralPoint>,
}

pub fn comparison_curves(job: &PlotJob) -> PlotResult<Comparison> {
    let (lo, hi) = job.z_range;
    let (partner, deformed) = match job.parameters.as_slice() {
        [p, d, ..] => (*p, *d),
        _ => (
            DeformationParameter::new(0.0, 0.0),
            DeformationParameter::new(10.0, 0.0),
        ),
    };
    let grid = spiral::sample_grid(lo, hi, job.samples)?;
    let standard = grid
        .iter()
        .map(|&z| spiral::standard_point(z))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Comparison {
        partner: spiral::sample_spiral(&partner, lo, hi, job.samples)?.points,
        deformed: spiral::sample_spiral(&deformed, lo, hi, job.samples)?.points,
        standard,
    })
}

pub fn run_comparison(job: &PlotJob) -> PlotResult<Vec<PathBuf>> {
    job.validate()?;
    let curves = comparison_curves(job)?;
    let base = job.output();
    let mut written = Vec::new();
    if job.format.svg() {
        let doc = svg::argand_svg(
            "partner (0, 0) and deformed (10, 0) against the standard spiral",
            &[
                svg::Curve {
                    points: &curves.partner,
                    label: "a = 0, b = 0".into(),
                },
                svg::Curve {
                    points: &curves.deformed,
                    label: "a = 10, b = 0".into(),
                },
                svg::Curve {
                    points: &curves.standard,
                    label: "standard (C, S)".into(),
                },
            ],
        );
        written.push(write_file(&base.with_extension("svg"), &doc)?);
    }
    if job.format.csv() {
        let table = csv::comparison_csv(&curves.partner, &curves.deformed, &curves.standard);
        written.push(write_file(&base.with_extension("csv"), &table)?);
    }
    Ok(written)
}

/// Runs the built-in residual suite; a failing report maps to
/// [`PlotError::Verification`] after any requested CSV has been written.
pub fn run_verify(job: &PlotJob) -> PlotResult<(Vec<ResidualReport>, Vec<PathBuf>)> {
    let reports = darboux::standard_reports()?;
    let mut written = Vec::new();
    if let Some(path) = &job.output {
        written.push(write_file(
            &path.with_extension("csv"),
            &csv::residual_csv(&reports),
        )?);
    }
    Ok((reports, written))
}

pub fn run(job: &PlotJob) -> PlotResult<Vec<PathBuf>> {
    match job.kind {
        JobKind::SingleSpiral => run_single_spiral(job),
        JobKind::ArgandGrid => run_argand_grid(job),
        JobKind::Distortion => run_distortion(job),
        JobKind::Comparison => run_comparison(job),
        JobKind::ResidualReport => {
            let (reports, written) = run_verify(job)?;
            match reports.iter().find(|r| !r.pass) {
                Some(r) => Err(PlotError::Verification(format!(
                    "{} residual {:e} exceeds {:e}",
                    r.equation.label(),
                    r.max_residual,
                    r.tolerance
                ))),
                None => Ok(written),
            }
        }
    }
}
