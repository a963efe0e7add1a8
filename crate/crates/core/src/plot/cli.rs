//! `cornu` command line.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::{
    default_grid, default_phases, grid, Format, JobKind, PlotError, PlotJob, PlotResult,
    DEFAULT_CLIP,
};
use crate::riccati::DeformationParameter;

#[derive(Debug, Parser)]
#[command(
    name = "cornu",
    version,
    about = "Riccati-deformed Cornu spirals, Darboux distortions and residual checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Plot one deformed spiral for θ = a + ib
    #[command(allow_negative_numbers = true)]
    Argand(ArgandArgs),
    /// Grid of deformed spirals (default a, b ∈ {−1, 0, 1})
    #[command(allow_negative_numbers = true)]
    Fig1(Fig1Args),
    /// Darboux distortion profiles for several phases
    #[command(allow_negative_numbers = true)]
    Fig2(Fig2Args),
    /// Partner spiral (0, 0) and deformed spiral (10, 0) against the standard spiral
    #[command(allow_negative_numbers = true)]
    Fig3(Common),
    /// Run the ODE residual suite and print one line per equation
    #[command(allow_negative_numbers = true)]
    Verify(Common),
}

#[derive(Debug, Args)]
struct Common {
    /// Output file (argand, fig3, verify) or directory (fig1, fig2)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format; argand and fig3 follow the --out extension when omitted
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Samples per curve (at least 2)
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    zmin: Option<f64>,
    #[arg(long)]
    zmax: Option<f64>,
    /// Display limit for |Δ| in distortion plots
    #[arg(long)]
    clip: Option<f64>,
}

#[derive(Debug, Args)]
struct ArgandArgs {
    /// Real part of θ
    #[arg(long)]
    a: f64,
    /// Imaginary part of θ
    #[arg(long)]
    b: f64,
    /// Amplitude R; defaults to 1/|θ| (1 at θ = 0)
    #[arg(long)]
    scale: Option<f64>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Fig1Args {
    /// Comma-separated values of a
    #[arg(long, value_delimiter = ',')]
    a_values: Option<Vec<f64>>,
    /// Comma-separated values of b
    #[arg(long, value_delimiter = ',')]
    b_values: Option<Vec<f64>>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Fig2Args {
    /// Comma-separated phases φ in radians (default 0, ±π/4, ±π/2)
    #[arg(long, value_delimiter = ',')]
    phases: Option<Vec<f64>>,
    #[command(flatten)]
    common: Common,
}

fn format_from_extension(out: Option<&PathBuf>) -> Option<Format> {
    match out?.extension()?.to_str()? {
        "svg" => Some(Format::Svg),
        "csv" => Some(Format::Csv),
        _ => None,
    }
}

struct Defaults {
    out: &'static str,
    z_range: (f64, f64),
    samples: usize,
}

fn job_from(kind: JobKind, common: Common, defaults: Defaults, infer_format: bool) -> PlotJob {
    let format = common
        .format
        .or_else(|| {
            if infer_format {
                format_from_extension(common.out.as_ref())
            } else {
                None
            }
        })
        .unwrap_or(Format::Both);
    let output = match kind {
        JobKind::ResidualReport => common.out,
        _ => Some(common.out.unwrap_or_else(|| PathBuf::from(defaults.out))),
    };
    PlotJob {
        kind,
        parameters: Vec::new(),
        phases: Vec::new(),
        z_range: (
            common.zmin.unwrap_or(defaults.z_range.0),
            common.zmax.unwrap_or(defaults.z_range.1),
        ),
        samples: common.samples.unwrap_or(defaults.samples),
        output,
        format,
        clip: common.clip.unwrap_or(DEFAULT_CLIP),
        columns: 3,
    }
}

/// Map arguments (without the program name) to a validated job.
pub fn parse_cli<I, T>(argv: I) -> PlotResult<PlotJob>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args =
        std::iter::once(std::ffi::OsString::from("cornu")).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(args)?;
    let spiral_defaults = |out| Defaults {
        out,
        z_range: (-5.0, 5.0),
        samples: 1001,
    };
    let job = match cli.command {
        Command::Argand(args) => {
            let mut param = DeformationParameter::new(args.a, args.b);
            if let Some(scale) = args.scale {
                param = param.with_scale(scale);
            }
            let mut job = job_from(
                JobKind::SingleSpiral,
                args.common,
                spiral_defaults("spiral.svg"),
                true,
            );
            job.parameters = vec![param];
            job
        }
        Command::Fig1(args) => {
            let parameters = match (args.a_values, args.b_values) {
                (None, None) => default_grid(),
                (a, b) => grid(
                    &a.unwrap_or_else(|| vec![-1.0, 0.0, 1.0]),
                    &b.unwrap_or_else(|| vec![-1.0, 0.0, 1.0]),
                ),
            };
            let columns = parameters.len().clamp(1, 3);
            let mut job = job_from(
                JobKind::ArgandGrid,
                args.common,
                spiral_defaults("fig1"),
                false,
            );
            job.parameters = parameters;
            job.columns = columns;
            job
        }
        Command::Fig2(args) => {
            let mut job = job_from(
                JobKind::Distortion,
                args.common,
                Defaults {
                    out: "fig2",
                    z_range: (0.02, 3.0),
                    samples: 3000,
                },
                false,
            );
            job.phases = args.phases.unwrap_or_else(default_phases);
            job
        }
        Command::Fig3(common) => {
            let mut job = job_from(
                JobKind::Comparison,
                common,
                spiral_defaults("fig3.svg"),
                true,
            );
            job.parameters = vec![
                DeformationParameter::new(0.0, 0.0),
                DeformationParameter::new(10.0, 0.0),
            ];
            job
        }
        Command::Verify(common) => {
            job_from(JobKind::ResidualReport, common, spiral_defaults(""), false)
        }
    };
    job.validate()?;
    Ok(job)
}

/// Parse, run and report; returns the process exit status.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let outcome = parse_cli(argv).and_then(|job| {
        if job.kind == JobKind::ResidualReport {
            let (reports, written) = super::run_verify(&job)?;
            for r in &reports {
                println!(
                    "{:<8} {} max residual {:.3e} (tolerance {:.0e}, {} points)",
                    r.equation.label(),
                    if r.pass { "PASS" } else { "FAIL" },
                    r.max_residual,
                    r.tolerance,
                    r.samples.len()
                );
            }
            if let Some(r) = reports.iter().find(|r| !r.pass) {
                return Err(PlotError::Verification(format!(
                    "{} residuals out of tolerance",
                    r.equation.label()
                )));
            }
            Ok(written)
        } else {
            super::run(&job)
        }
    });
    match outcome {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
            0
        }
        Err(PlotError::Cli(e)) => {
            let _ = e.print();
            PlotError::Cli(e).exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argand_job() {
        let job = parse_cli(["argand", "--a", "1", "--b", "-1", "--out", "s.svg"]).unwrap();
        assert_eq!(job.kind, JobKind::SingleSpiral);
        assert_eq!(job.parameters, vec![DeformationParameter::new(1.0, -1.0)]);
        assert_eq!(job.format, Format::Svg);
        assert_eq!(job.output, Some(PathBuf::from("s.svg")));
    }

    #[test]
    fn fig2_clip() {
        let job = parse_cli(["fig2", "--clip", "100"]).unwrap();
        assert_eq!(job.kind, JobKind::Distortion);
        assert_eq!(job.clip, 100.0);
        assert_eq!(job.phases.len(), 5);
    }

    #[test]
    fn too_few_samples_is_a_usage_error() {
        let err = parse_cli(["fig1", "--samples", "1"]).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn usage_errors() {
        for argv in [
            vec!["argand", "--a", "1"],
            vec!["argand", "--a", "x", "--b", "0"],
            vec!["fig3", "--bogus"],
            vec!["fig1", "--zmin", "2", "--zmax", "1"],
            vec!["fig2", "--zmin", "0"],
            vec!["nope"],
        ] {
            let err = parse_cli(argv.clone()).unwrap_err();
            assert_eq!(err.exit_code(), 1, "{argv:?}");
        }
    }

    #[test]
    fn help_lists_subcommands() {
        let err = parse_cli(["--help"]).unwrap_err();
        assert_eq!(err.exit_code(), 0);
        let text = err.to_string();
        for sub in ["argand", "fig1", "fig2", "fig3", "verify"] {
            assert!(text.contains(sub), "{sub} missing from help");
        }
    }

    #[test]
    fn custom_grid() {
        let job = parse_cli(["fig1", "--a-values", "0,10", "--b-values", "0"]).unwrap();
        assert_eq!(job.parameters.len(), 2);
        assert_eq!(job.columns, 2);
    }
}
