use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use hqft::{descriptor, format, report, verify};
use hqft_core::{
    classify, evaluate, iqft, iqft_direct, miyachi_nested, qft_direct, qft_fast, witness_subcritical, AnalyticSignal,
    Grid2D, QField, SpectrumField, UpParams,
};

#[derive(Parser)]
#[command(name = "hqft", version, about = "Two-sided quaternion Fourier transform toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample an analytic signal and write it as a QFLD1 file
    #[command(allow_negative_numbers = true)]
    Generate {
        /// `gaussian q0 q1 q2 q3 a1 a2`, `hermite k l gamma` or `polygauss gamma d c00 c10 c01 ...`
        #[arg(required = true, num_args = 1.., value_name = "DESCRIPTOR")]
        descriptor: Vec<String>,
        #[arg(long, num_args = 4, value_names = ["N1", "N2", "H1", "H2"])]
        grid: Option<Vec<String>>,
        /// Output path; stdout if omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transform a QFLD1 field into a QSPEC1 spectrum (or back with --inverse)
    Transform {
        input: PathBuf,
        /// Literal double sum
        #[arg(long, conflicts_with = "fast")]
        direct: bool,
        /// Separable FFT path (default)
        #[arg(long)]
        fast: bool,
        /// Read a QSPEC1 spectrum and write the QFLD1 field
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a built-in invariant suite
    Verify {
        /// inverse | scaling | gaussian | envelope | oracle | transfer | all
        suite: String,
    },
    /// Evaluate the Miyachi, Hardy and Cowling-Price functionals
    #[command(
        allow_negative_numbers = true,
        group(ArgGroup::new("source").required(true).args(["input", "signal", "witness"]))
    )]
    Miyachi {
        /// QFLD1 field; its spectrum is computed with the fast transform
        input: Option<PathBuf>,
        /// Analytic signal descriptor; its spectrum is evaluated exactly
        #[arg(long, requires = "grid")]
        signal: Option<String>,
        /// Subcritical witness phi_k phi_l e^{-pi gamma |x|^2} for the given alpha, beta
        #[arg(long, num_args = 2, value_names = ["K", "L"], requires = "grid")]
        witness: Option<Vec<u32>>,
        #[arg(long, num_args = 4, value_names = ["N1", "N2", "H1", "H2"])]
        grid: Option<Vec<String>>,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        rho: f64,
        /// Cowling-Price spatial exponent (`inf` allowed)
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        /// Cowling-Price frequency exponent (`inf` allowed)
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        /// Number of nested frequency windows
        #[arg(long, default_value_t = 1)]
        nested: usize,
        /// Write `extent value` pairs of the nested series
        #[arg(long, value_name = "PATH")]
        emit_plot_data: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify (alpha, beta) against pi^2
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
    },
}

enum Failure {
    /// Bad arguments, unreadable input or invalid parameters: exit 2.
    Usage(String),
    /// A verification suite failed: exit 1.
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_grid(tokens: &[String]) -> Result<Grid2D, Failure> {
    let size = |t: &String| t.parse::<usize>().map_err(|_| Failure::Usage(format!("--grid: bad size `{t}`")));
    let spacing = |t: &String| t.parse::<f64>().map_err(|_| Failure::Usage(format!("--grid: bad spacing `{t}`")));
    let grid = Grid2D::new(size(&tokens[0])?, size(&tokens[1])?, spacing(&tokens[2])?, spacing(&tokens[3])?)?;
    Ok(grid)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(Failure::from)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Generate { descriptor: tokens, grid, out } => {
            let signal = descriptor::parse(&tokens)?;
            let grid = grid.ok_or_else(|| Failure::Usage("--grid N1 N2 H1 H2 is required".into()))?;
            let field = signal.sample(&parse_grid(&grid)?)?;
            emit(out.as_deref(), &format::write_samples(&field))
        }
        Command::Transform { input, direct, fast: _, inverse, out } => {
            let text = if inverse {
                let spec: SpectrumField = format::read_file(&input)?;
                let f = if direct { iqft_direct(&spec) } else { iqft(&spec)? };
                format::write_samples(&f)
            } else {
                let f: QField = format::read_file(&input)?;
                let spec = if direct { qft_direct(&f) } else { qft_fast(&f)? };
                format::write_samples(&spec)
            };
            emit(out.as_deref(), &text)
        }
        Command::Verify { suite } => {
            let reports = verify::run(&suite)?;
            let mut text = String::new();
            for r in &reports {
                text.push_str(&r.to_string());
            }
            emit(None, &text)?;
            if reports.iter().all(verify::SuiteReport::passed) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Miyachi { input, signal, witness, grid, alpha, beta, rho, p, q, nested, emit_plot_data, out } => {
            let params = UpParams::new(alpha, beta, rho, p, q)?;
            let (label, field, spectrum) = match (input, signal, witness) {
                (Some(path), _, _) => {
                    let f: QField = format::read_file(&path)?;
                    let spec = qft_fast(&f)?;
                    (path.display().to_string(), f, spec)
                }
                (_, Some(text), _) => exact(descriptor::parse_str(&text)?, &grid)?,
                (_, _, Some(kl)) => exact(witness_subcritical(alpha, beta, kl[0], kl[1])?, &grid)?,
                _ => unreachable!("clap requires one source"),
            };
            let report = evaluate(&field, &spectrum, &params)?;
            let series = miyachi_nested(&spectrum, beta, rho, nested.max(1))?;
            if let Some(path) = emit_plot_data {
                emit(Some(&path), &report::plot_data(&series))?;
            }
            let nested_part = (nested > 1).then_some(&series);
            emit(out.as_deref(), &report::render(&report, nested_part, Some(&label)))
        }
        Command::Classify { alpha, beta } => {
            let regime = classify(alpha, beta)?;
            emit(None, &report::classification(alpha, beta, regime))
        }
    }
}

/// Samples `signal` and its exact spectrum on the `--grid` lattice.
fn exact(signal: AnalyticSignal, grid: &Option<Vec<String>>) -> Result<(String, QField, SpectrumField), Failure> {
    let grid = parse_grid(grid.as_deref().expect("clap enforces --grid"))?;
    let f = signal.sample(&grid)?;
    let spec = signal.sample_spectrum(&grid)?;
    Ok((descriptor::render(&signal), f, spec))
}
