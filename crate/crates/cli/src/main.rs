use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use excited_vdw::oracle::provenance_checks;
use excited_vdw::{
    figure_dataset, parse_config, run_config, Error, Figure, FigureOverrides, OutputFormat, Problem, SweepOverrides,
    SweepResult,
};

const EXIT_CONFIG: u8 = 1;
const EXIT_NONCONVERGENT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "exvdw",
    version,
    about = "Van der Waals and Casimir interactions of excited atoms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Dataset format; defaults to the config's `output` key, then csv.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Number of sweep points.
    #[arg(long, global = true)]
    points: Option<usize>,

    /// Lower end of the sweep.
    #[arg(long, global = true, allow_negative_numbers = true)]
    min: Option<f64>,

    /// Upper end of the sweep.
    #[arg(long, global = true, allow_negative_numbers = true)]
    max: Option<f64>,

    /// Figure to reproduce: 4a, 4b, 5, 6, 7, 7a or 7b.
    #[arg(long, global = true)]
    which: Option<String>,

    /// Partner linewidth over partner frequency for figures.
    #[arg(long = "gamma-ratio", global = true)]
    gamma_ratio: Option<f64>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Near-zone shift and half-width of an atom pair.
    Pair,
    /// Potential of an atom in front of a dilute half-space.
    Surface,
    /// Force between two dilute media.
    Media,
    /// Dilute Lifshitz force by imaginary-axis quadrature and in closed form.
    Lifshitz,
    /// Dataset behind one of the figures.
    Figure,
    /// Recompute the reference constants and report per-check gaps.
    Verify,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

enum Failure {
    Config(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Config(e.to_string())
    }
}

fn problem_of(cmd: Command) -> Option<Problem> {
    match cmd {
        Command::Pair => Some(Problem::Pair),
        Command::Surface => Some(Problem::Surface),
        Command::Media => Some(Problem::Media),
        Command::Lifshitz => Some(Problem::Lifshitz),
        Command::Figure | Command::Verify => None,
    }
}

fn sweep_overrides(cli: &Cli) -> SweepOverrides {
    SweepOverrides {
        points: cli.points,
        min: cli.min,
        max: cli.max,
    }
}

fn dataset(cli: &Cli) -> Result<(SweepResult, OutputFormat), Failure> {
    if let Some(problem) = problem_of(cli.command) {
        if cli.which.is_some() || cli.gamma_ratio.is_some() {
            return Err(Failure::Config(
                "--which and --gamma-ratio apply to `figure` only".into(),
            ));
        }
        let path = cli
            .config
            .as_ref()
            .ok_or_else(|| Failure::Config("--config is required".into()))?;
        let text =
            fs::read_to_string(path).map_err(|e| Failure::Config(format!("cannot read {}: {e}", path.display())))?;
        let cfg = sweep_overrides(cli).apply(&parse_config(&text)?)?;
        if cfg.problem != problem {
            return Err(Failure::Config(format!(
                "config describes a `{}` problem, not `{}`",
                cfg.problem.name(),
                problem.name()
            )));
        }
        let format = cli.format.map(Into::into).unwrap_or(cfg.output);
        return Ok((run_config(&cfg)?, format));
    }
    if cli.config.is_some() {
        return Err(Failure::Config("`figure` takes no --config".into()));
    }
    let which: Figure = cli
        .which
        .as_deref()
        .ok_or_else(|| Failure::Config("--which is required".into()))?
        .parse()?;
    let overrides = FigureOverrides {
        sweep: sweep_overrides(cli),
        gamma_ratio: cli.gamma_ratio,
    };
    let format = cli.format.map(Into::into).unwrap_or_default();
    Ok((figure_dataset(which, &overrides)?, format))
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display())))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Internal(format!("cannot write output: {e}"))),
    }
}

fn verify(cli: &Cli) -> Result<u8, Failure> {
    let checks = provenance_checks();
    let mut text = String::new();
    for c in &checks {
        text.push_str(&format!(
            "{} gap={:.3e} tol={:.1e} value={:.10e} expected={:.10e} {}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.gap,
            c.tol,
            c.value,
            c.expected,
            c.name
        ));
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    text.push_str(&format!("{} checks, {} failed\n", checks.len(), failed));
    emit(cli, &text)?;
    Ok(if failed == 0 { 0 } else { EXIT_INTERNAL })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if cli.command == Command::Verify {
        return verify(cli);
    }
    let (result, format) = dataset(cli)?;
    emit(cli, &result.render(format))?;
    if result.nonconvergent {
        eprintln!("exvdw: some points did not converge; they are flagged in the dataset");
        return Ok(EXIT_NONCONVERGENT);
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match std::panic::catch_unwind(|| run(&cli)) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(Failure::Config(msg))) => {
            eprintln!("exvdw: {msg}");
            ExitCode::from(EXIT_CONFIG)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("exvdw: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
        Err(_) => ExitCode::from(EXIT_INTERNAL),
    }
}
