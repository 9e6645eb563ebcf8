use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use noma_core::export::{
    fig2_csv, fig2_rows, flat_csv, region_csv, region_export, run_validation, to_json, SweepSpec,
    ValidationTolerances,
};
use noma_core::{gain_report_with, rate_shift_study, RegimeThresholds, Scheme, Snr, SnrPair};

const EXIT_USAGE: u8 = 2;
const EXIT_VALIDATION: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "noma",
    version,
    about = "Two-user downlink NOMA vs OMA rate regions and relative gain"
)]
struct Cli {
    /// Output format; defaults to csv for `region`/`fig2` and json otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Noma,
    Oma,
    Both,
}

impl SchemeArg {
    fn schemes(self) -> &'static [Scheme] {
        match self {
            SchemeArg::Noma => &[Scheme::Noma],
            SchemeArg::Oma => &[Scheme::Oma],
            SchemeArg::Both => &[Scheme::Noma, Scheme::Oma],
        }
    }
}

#[derive(Debug, Args)]
struct SnrArgs {
    /// Strong-user SNR, linear.
    #[arg(long, conflicts_with = "snr1_db", required_unless_present = "snr1_db")]
    snr1: Option<f64>,
    /// Strong-user SNR in dB.
    #[arg(long = "snr1-db", allow_negative_numbers = true)]
    snr1_db: Option<f64>,
    /// Weak-user SNR, linear.
    #[arg(long, conflicts_with = "snr2_db", required_unless_present = "snr2_db")]
    snr2: Option<f64>,
    /// Weak-user SNR in dB.
    #[arg(long = "snr2-db", allow_negative_numbers = true)]
    snr2_db: Option<f64>,
}

impl SnrArgs {
    fn pair(&self) -> noma_core::Result<SnrPair> {
        let pick = |lin: Option<f64>, db: Option<f64>| match (lin, db) {
            (Some(v), _) => Snr::new(v),
            (None, Some(d)) => Snr::from_db(d),
            (None, None) => unreachable!("clap enforces one of the two forms"),
        };
        SnrPair::new(
            pick(self.snr1, self.snr1_db)?,
            pick(self.snr2, self.snr2_db)?,
        )
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample the NOMA and/or OMA rate-region boundaries.
    Region {
        #[command(flatten)]
        snr: SnrArgs,
        #[arg(long, value_enum, default_value = "both")]
        scheme: SchemeArg,
        /// Samples per scheme, uniform in the power split / time share.
        #[arg(short = 'n', long = "points", default_value_t = 101)]
        n: usize,
    },
    /// Corner slopes, relative gain, bounds and approximations for one pair.
    Gain {
        #[command(flatten)]
        snr: SnrArgs,
        #[arg(long, default_value_t = 0.1)]
        theta_low: f64,
        #[arg(long, default_value_t = 10.0)]
        theta_high: f64,
    },
    /// Relative gain and bound envelope versus strong-user SNR at a fixed gap.
    Fig2 {
        #[arg(long, default_value_t = -20.0, allow_negative_numbers = true)]
        start_db: f64,
        #[arg(long, default_value_t = 60.0, allow_negative_numbers = true)]
        stop_db: f64,
        #[arg(long, default_value_t = 161)]
        points: usize,
        #[arg(long, default_value_t = 15.0, allow_negative_numbers = true)]
        gap_db: f64,
    },
    /// One-bit rate shift at S1 = 20, S2 = 1.
    Example,
    /// Move `delta` bits from the strong user's corner rate to the weak user.
    Shift {
        #[command(flatten)]
        snr: SnrArgs,
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
    },
    /// Run the numerical oracles; exit code 3 if any check fails.
    Validate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Multiplies every tolerance (test hook).
        #[arg(long, default_value_t = 1.0, hide = true)]
        tolerance_scale: f64,
    },
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<noma_core::Error> for Failure {
    fn from(e: noma_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn render(cli: &Cli) -> Result<(String, bool), Failure> {
    let fmt = |default| cli.format.unwrap_or(default);
    let out = match &cli.command {
        Command::Region { snr, scheme, n } => {
            let pair = snr.pair()?;
            match fmt(Format::Csv) {
                Format::Csv => region_csv(&pair, scheme.schemes(), *n)?,
                Format::Json => to_json(&region_export(&pair, scheme.schemes(), *n)?),
            }
        }
        Command::Gain {
            snr,
            theta_low,
            theta_high,
        } => {
            if !(*theta_low > 0.0 && theta_low <= theta_high) {
                return Err(Failure::Usage(format!(
                    "need 0 < theta-low <= theta-high, got {theta_low} and {theta_high}"
                )));
            }
            let th = RegimeThresholds {
                low: *theta_low,
                high: *theta_high,
            };
            let report = gain_report_with(&snr.pair()?, th);
            match fmt(Format::Json) {
                Format::Csv => flat_csv(&report),
                Format::Json => to_json(&report),
            }
        }
        Command::Fig2 {
            start_db,
            stop_db,
            points,
            gap_db,
        } => {
            let spec = SweepSpec {
                s1_db_start: *start_db,
                s1_db_stop: *stop_db,
                points: *points,
                gap_db: *gap_db,
            };
            let rows = fig2_rows(&spec)?;
            match fmt(Format::Csv) {
                Format::Csv => fig2_csv(&rows),
                Format::Json => to_json(&rows),
            }
        }
        Command::Example => {
            shift_output(&SnrPair::from_linear(20.0, 1.0)?, 1.0, fmt(Format::Json))?
        }
        Command::Shift { snr, delta } => shift_output(&snr.pair()?, *delta, fmt(Format::Json))?,
        Command::Validate {
            seed,
            tolerance_scale,
        } => {
            let tol = ValidationTolerances::default().scaled(*tolerance_scale);
            let summary = run_validation(*seed, tol)?;
            for c in summary.failures() {
                eprintln!(
                    "validation failed: {} deviation {:e} exceeds {:e}",
                    c.name, c.max_deviation, c.tolerance
                );
            }
            let text = match fmt(Format::Json) {
                Format::Json => to_json(&summary),
                Format::Csv => {
                    let mut s = String::from("check,passed,max_deviation,tolerance\n");
                    for c in &summary.checks {
                        s.push_str(&format!(
                            "{},{},{},{}\n",
                            c.name, c.passed, c.max_deviation, c.tolerance
                        ));
                    }
                    s
                }
            };
            return Ok((text, summary.passed));
        }
    };
    Ok((out, true))
}

fn shift_output(pair: &SnrPair, delta: f64, format: Format) -> Result<String, Failure> {
    let report = rate_shift_study(pair, delta)?;
    Ok(match format {
        Format::Csv => flat_csv(&report),
        Format::Json => to_json(&report),
    })
}

fn emit(path: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let result = render(&cli).and_then(|(text, passed)| {
        emit(cli.output.as_ref(), &text).map_err(Failure::Io)?;
        Ok(passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VALIDATION),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
