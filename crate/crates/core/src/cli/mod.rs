//! Command-line front end.
//!
//! Exit codes: 0 success (including negative verdicts), 2 malformed input,
//! 3 precondition violation such as a matrix that is not dimension-bounded.

pub mod parse;
pub mod render;
pub mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dimension::bounded_shape;
use crate::error::{Error, Result};
use report::{Envelope, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "stp-reach",
    version,
    about = "Reachability analysis of dimension-bounded linear systems x(t+1) = A ⋉→ x(t)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Omit the elapsed-time field so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// The system, either as a matrix file or as the pair (m, k) for A ∈ M_{m×km}.
#[derive(Debug, Args)]
pub struct SystemArgs {
    #[arg(long = "m", requires = "k", conflicts_with = "matrix")]
    pub m: Option<u64>,
    #[arg(long = "k", requires = "m")]
    pub k: Option<u64>,
    #[arg(long, value_name = "FILE")]
    pub matrix: Option<PathBuf>,
}

impl SystemArgs {
    fn shape(&self) -> Result<(u64, u64)> {
        match (self.m, self.k, &self.matrix) {
            (Some(m), Some(k), None) => Ok((m, k)),
            (None, None, Some(path)) => bounded_shape(&parse::read_matrix(path)?),
            _ => Err(Error::invalid("give either --m and --k, or --matrix")),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// State-dimension table r(t), closed form, r* and invariant times.
    Dims {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        t_max: Option<usize>,
    },
    /// Prime decomposition of p against k and m.
    Profile {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        p: u64,
    },
    /// Whether r is a reachable state dimension.
    Reachdim {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u64,
    },
    /// Reduced basis of the t-step reachable subspace R_t.
    Basis {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        t: usize,
    },
    /// Rank test for x ∈ R_t, and/or a scan over t ≤ t-max.
    Member {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long, value_name = "FILE")]
        vector: PathBuf,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        t_max: Option<usize>,
    },
    /// Minimal annihilators: of a vector (--vector), of the reachable union
    /// after t* (--p), of a whole space V_r (--r).
    Annihilator {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        #[arg(long, value_name = "FILE")]
        vector: Option<PathBuf>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Full analysis of A from V_p in one document.
    Report {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        #[arg(long)]
        p: usize,
    },
}

/// What the process should print and exit with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn build(command: &Command) -> Result<Report> {
    Ok(match command {
        Command::Dims { system, p, t_max } => {
            let (m, k) = system.shape()?;
            Report::Dims(report::cmd_dims(m, k, *p, *t_max)?)
        }
        Command::Profile { system, p } => {
            let (m, k) = system.shape()?;
            Report::Profile(report::cmd_profile(m, k, *p)?)
        }
        Command::Reachdim { system, p, r } => {
            let (m, k) = system.shape()?;
            Report::Reachdim(report::cmd_reachdim(m, k, *p, *r)?)
        }
        Command::Basis { matrix, p, t } => {
            Report::Basis(report::cmd_basis(&parse::read_matrix(matrix)?, *p, *t)?)
        }
        Command::Member {
            matrix,
            p,
            vector,
            t,
            t_max,
        } => {
            let a = parse::read_matrix(matrix)?;
            let x = parse::read_vector(vector)?;
            Report::Member(report::cmd_member(&a, *p, &x, *t, *t_max)?)
        }
        Command::Annihilator {
            matrix,
            vector,
            p,
            r,
        } => {
            let a = parse::read_matrix(matrix)?;
            let x = vector.as_deref().map(parse::read_vector).transpose()?;
            Report::Annihilator(report::cmd_annihilator(&a, x.as_ref(), *p, *r)?)
        }
        Command::Report { matrix, p } => Report::Report(Box::new(report::cmd_report(
            &parse::read_matrix(matrix)?,
            *p,
        )?)),
    })
}

fn exit_code(e: &Error) -> i32 {
    if e.is_precondition() {
        EXIT_PRECONDITION
    } else {
        EXIT_INPUT
    }
}

pub fn render(envelope: &Envelope, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(envelope)
                .map_err(|e| Error::invalid(format!("json: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => render::csv(&envelope.report),
        Format::Text => {
            let mut s = render::text(&envelope.report);
            if let Some(ms) = envelope.elapsed_ms {
                s.push_str(&format!("elapsed: {ms:.3} ms\n"));
            }
            Ok(s)
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let started = Instant::now();
    let report = match build(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                code: exit_code(&e),
            }
        }
    };
    let code = match &report {
        Report::Report(full) if full.has_precondition_error() => EXIT_PRECONDITION,
        _ => EXIT_OK,
    };
    let envelope = Envelope {
        report,
        elapsed_ms: (!cli.no_timing).then(|| started.elapsed().as_secs_f64() * 1e3),
    };
    match render(&envelope, cli.format) {
        Ok(stdout) => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_INPUT,
        },
    }
}
