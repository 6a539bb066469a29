//! `chernchi`: emit, evaluate and verify Euler-characteristic polynomials of
//! coherent sheaves on projective space.
//!
//! Exit status: 0 on success, 1 when verification finds a mismatch, 2 on
//! usage or input errors.

use std::fmt::Display;
use std::process::ExitCode;
use std::time::Duration;

use chernchi::algebra::{Prefactored, Style};
use chernchi::bench::{bench, BenchConfig};
use chernchi::eulerchi::ChiEngine;
use chernchi::oracle::{verify, VerifyConfig};
use chernchi::stirling::format_table;
use chernchi::symmfun::{power_sum, PowerSumCache};
use chernchi::{ChernVector, ChiRequest, PowerSumMethod, Rank, RatPoly, VarId};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

#[derive(Debug, Parser)]
#[command(name = "chernchi", version, about = "Euler characteristics of sheaves on P^N from Chern classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Debug, Args)]
struct Target {
    /// Sheaf rank: a positive integer, or `n` to keep it symbolic.
    #[arg(long)]
    rank: Rank,
    /// Dimension N of the projective space.
    #[arg(long)]
    dim: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print chi = P(C1, ..., CN).
    EmitChi {
        #[command(flatten)]
        target: Target,
        /// Power-sum expansion route (matrix or recursive).
        #[arg(long, default_value = "recursive")]
        method: PowerSumMethod,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Print fully expanded terms instead of `1/d*(...) + n`.
        #[arg(long)]
        expanded: bool,
    },
    /// Print the twisted form chi(F(T)) = G(C1, ..., CN, T).
    EmitChiTwist {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Print fully expanded terms instead of `1/d*(...)`.
        #[arg(long)]
        expanded: bool,
    },
    /// Evaluate chi (or chi of the twist) at integer Chern classes.
    Eval {
        #[command(flatten)]
        target: Target,
        /// Comma-separated Chern classes c1,...,cN.
        #[arg(long, allow_hyphen_values = true)]
        chern: String,
        /// Twist t; evaluates chi(F(t)).
        #[arg(long, allow_negative_numbers = true)]
        twist: Option<i64>,
    },
    /// Compare the polynomial against split bundles drawn from a seeded RNG.
    Verify {
        #[arg(long)]
        dim: usize,
        /// Number of line-bundle summands (numeric rank).
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Summand degrees are drawn from 0..=MAX_A.
        #[arg(long, default_value_t = 5)]
        max_a: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check twists -R..=R.
        #[arg(long, default_value_t = 4)]
        twist_range: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print unsigned Stirling numbers of the first kind, rows 0..=R.
    Stirling {
        #[arg(long)]
        rows: usize,
        /// Print the signed numbers instead.
        #[arg(long)]
        signed: bool,
    },
    /// Print the power sum B_R in the elementary symmetric polynomials.
    Powersum {
        #[arg(long = "r", value_name = "R", value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long, default_value = "recursive")]
        method: PowerSumMethod,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Time both power-sum routes building P with symbolic rank.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        dim: u32,
        /// Comma-separated methods to run.
        #[arg(long, value_delimiter = ',', default_value = "matrix,recursive")]
        methods: Vec<PowerSumMethod>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
        /// The matrix route is skipped above this dimension.
        #[arg(long, default_value_t = 16)]
        matrix_cutoff: usize,
        /// Per-method time budget in seconds.
        #[arg(long)]
        timeout_secs: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Failure with the exit status it maps to.
struct Failure {
    status: u8,
    message: Option<String>,
}

impl Failure {
    fn usage(message: impl Display) -> Self {
        Failure {
            status: 2,
            message: Some(message.to_string()),
        }
    }

    fn mismatch() -> Self {
        Failure {
            status: 1,
            message: None,
        }
    }
}

fn request(target: &Target) -> Result<ChiRequest, Failure> {
    ChiRequest::new(target.dim, target.rank).map_err(|e| Failure::usage(format!("--dim/--rank: {e}")))
}

fn parse_chern(raw: &str, dim: usize) -> Result<Vec<BigInt>, Failure> {
    let classes = raw
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Failure::usage(format!("--chern: {:?} is not an integer", s.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if classes.len() != dim {
        return Err(Failure::usage(format!(
            "--chern: expected {dim} comma-separated classes for --dim {dim}, got {}",
            classes.len()
        )));
    }
    Ok(classes)
}

fn emit(p: &RatPoly, vars: &[VarId], format: Format, expanded: bool) -> String {
    match format {
        Format::Json => p.to_json(vars),
        Format::Text if expanded => p.to_text(),
        Format::Latex if expanded => p.to_latex(),
        Format::Text => Prefactored::new(p).render(Style::Text),
        Format::Latex => Prefactored::new(p).render(Style::Latex),
    }
}

fn context_vars(req: &ChiRequest, twisted: bool) -> Vec<VarId> {
    let mut vars = req.chern_vars();
    if twisted {
        vars.push(VarId::Twist);
    }
    if req.rank() == Rank::Symbolic {
        vars.push(VarId::Rank);
    }
    vars
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::EmitChi {
            target,
            method,
            format,
            expanded,
        } => {
            let req = request(&target)?;
            let p = ChiEngine::global().chi(req, method);
            println!("{}", emit(&p, &context_vars(&req, false), format, expanded));
        }
        Command::EmitChiTwist {
            target,
            format,
            expanded,
        } => {
            let req = request(&target)?;
            let g = ChiEngine::global().chi_twist(req);
            println!("{}", emit(&g, &context_vars(&req, true), format, expanded));
        }
        Command::Eval { target, chern, twist } => {
            request(&target)?;
            let rank = target
                .rank
                .value()
                .ok_or_else(|| Failure::usage("--rank: evaluation needs a numeric rank"))?;
            let classes = parse_chern(&chern, target.dim)?;
            let cv = ChernVector::new(target.dim, rank, classes).map_err(|e| Failure::usage(format!("--chern: {e}")))?;
            println!("{}", ChiEngine::global().evaluate(&cv, twist));
        }
        Command::Verify {
            dim,
            rank,
            trials,
            max_a,
            seed,
            twist_range,
            format,
        } => {
            if trials == 0 {
                return Err(Failure::usage("--trials: must be at least 1"));
            }
            let report = verify(VerifyConfig {
                dim,
                rank,
                trials,
                max_a,
                seed,
                twist_range: twist_range.into(),
            })
            .map_err(|e| Failure::usage(format!("--dim/--rank: {e}")))?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                _ => println!("{report}"),
            }
            if !report.passed() {
                return Err(Failure::mismatch());
            }
        }
        Command::Stirling { rows, signed } => {
            println!("{}", format_table(rows, signed).trim_end());
        }
        Command::Powersum { r, method, format } => {
            let b: RatPoly = power_sum(r as usize, method, &PowerSumCache::new());
            let vars: Vec<VarId> = (1..=r).map(VarId::Chern).collect();
            println!("{}", emit(&b, &vars, format, true));
        }
        Command::Bench {
            dim,
            methods,
            reps,
            matrix_cutoff,
            timeout_secs,
            format,
        } => {
            let timeout = match timeout_secs {
                Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
                Some(_) => return Err(Failure::usage("--timeout-secs: must be a positive number")),
                None => None,
            };
            let report = bench(&BenchConfig {
                dim: dim as usize,
                methods,
                repetitions: reps as usize,
                matrix_cutoff,
                timeout,
            });
            match format {
                Format::Json => println!("{}", report.to_json()),
                _ => println!("{report}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if let Some(message) = failure.message {
                eprintln!("error: {message}");
            }
            ExitCode::from(failure.status)
        }
    }
}
