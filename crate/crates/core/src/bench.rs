//! Timing comparison of the two power-sum routes when building `P`.
//!
//! Every repetition builds the polynomial from scratch (no shared memo), so
//! the recursive route pays for its own lower power sums each time.

use std::fmt;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::eulerchi::{build_chi_polynomial, ChiRequest, Rank};
use crate::symmfun::PowerSumMethod;
use crate::RatPoly;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub dim: usize,
    pub methods: Vec<PowerSumMethod>,
    pub repetitions: usize,
    /// The matrix route is skipped above this dimension.
    pub matrix_cutoff: usize,
    /// Wall-clock budget per method across all repetitions.
    pub timeout: Option<Duration>,
}

impl BenchConfig {
    pub fn new(dim: usize) -> Self {
        BenchConfig {
            dim,
            methods: PowerSumMethod::ALL.to_vec(),
            repetitions: 3,
            matrix_cutoff: 16,
            timeout: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Completed {
        median_secs: f64,
        samples_secs: Vec<f64>,
        terms: usize,
    },
    Skipped {
        reason: String,
    },
    TimedOut {
        limit_secs: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodTiming {
    pub method: PowerSumMethod,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl MethodTiming {
    pub fn median(&self) -> Option<Duration> {
        match &self.outcome {
            Outcome::Completed { median_secs, .. } => Some(Duration::from_secs_f64(*median_secs)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub dim: usize,
    pub repetitions: usize,
    pub machine: String,
    pub timings: Vec<MethodTiming>,
    /// `Some(true)` only when at least two methods completed and all produced
    /// the same canonical polynomial; `None` when fewer than two completed.
    pub agreement: Option<bool>,
}

impl BenchReport {
    pub fn timing(&self, method: PowerSumMethod) -> Option<&MethodTiming> {
        self.timings.iter().find(|t| t.method == method)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bench N={} repetitions={}", self.dim, self.repetitions)?;
        writeln!(f, "machine: {}", self.machine)?;
        for t in &self.timings {
            match &t.outcome {
                Outcome::Completed {
                    median_secs, terms, ..
                } => writeln!(f, "{:>9}: median {:.6} s, {} terms", t.method, median_secs, terms)?,
                Outcome::Skipped { reason } => writeln!(f, "{:>9}: skipped ({reason})", t.method)?,
                Outcome::TimedOut { limit_secs } => {
                    writeln!(f, "{:>9}: timed out after {limit_secs:.1} s", t.method)?
                }
            }
        }
        match self.agreement {
            Some(true) => write!(f, "agreement: identical polynomials"),
            Some(false) => write!(f, "agreement: MISMATCH"),
            None => write!(f, "agreement: n/a"),
        }
    }
}

/// Short description of the host for timing reports.
pub fn machine_description() -> String {
    let cpu = std::fs::read_to_string("/proc/cpuinfo")
        .ok()
        .and_then(|s| {
            s.lines()
                .find(|l| l.starts_with("model name"))
                .and_then(|l| l.split_once(':'))
                .map(|(_, v)| v.trim().to_string())
        })
        .unwrap_or_else(|| "unknown cpu".into());
    let threads = thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    format!(
        "{} {}, {cpu}, {threads} hardware threads",
        std::env::consts::OS,
        std::env::consts::ARCH
    )
}

fn median(samples: &[Duration]) -> Duration {
    let mut sorted = samples.to_vec();
    sorted.sort();
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2
    }
}

fn run_method(req: ChiRequest, method: PowerSumMethod, reps: usize) -> (Vec<Duration>, RatPoly) {
    let mut samples = Vec::with_capacity(reps);
    let mut last = RatPoly::zero();
    for _ in 0..reps {
        let start = Instant::now();
        let p = build_chi_polynomial(req, method);
        samples.push(start.elapsed());
        last = p;
    }
    (samples, last)
}

/// Runs each method in turn (never concurrently) with symbolic rank.
pub fn bench(config: &BenchConfig) -> BenchReport {
    assert!(config.dim >= 1 && config.repetitions >= 1);
    let req = ChiRequest::new(config.dim, Rank::Symbolic).expect("dim >= 1");
    let mut timings = Vec::new();
    let mut results: Vec<RatPoly> = Vec::new();
    for &method in &config.methods {
        if method == PowerSumMethod::Matrix && config.dim > config.matrix_cutoff {
            timings.push(MethodTiming {
                method,
                outcome: Outcome::Skipped {
                    reason: format!("N={} above matrix cutoff {}", config.dim, config.matrix_cutoff),
                },
            });
            continue;
        }
        let reps = config.repetitions;
        let (tx, rx) = mpsc::channel();
        thread::spawn(move || {
            let _ = tx.send(run_method(req, method, reps));
        });
        let received = match config.timeout {
            Some(limit) => rx.recv_timeout(limit).ok(),
            None => rx.recv().ok(),
        };
        let outcome = match received {
            Some((samples, poly)) => {
                let outcome = Outcome::Completed {
                    median_secs: median(&samples).as_secs_f64(),
                    samples_secs: samples.iter().map(Duration::as_secs_f64).collect(),
                    terms: poly.len(),
                };
                results.push(poly);
                outcome
            }
            // The worker is left to finish on its own; it holds no shared state.
            None => Outcome::TimedOut {
                limit_secs: config.timeout.map(|d| d.as_secs_f64()).unwrap_or(0.0),
            },
        };
        timings.push(MethodTiming { method, outcome });
    }
    let agreement = if results.len() >= 2 {
        Some(results.windows(2).all(|w| w[0] == w[1]))
    } else {
        None
    };
    BenchReport {
        dim: config.dim,
        repetitions: config.repetitions,
        machine: machine_description(),
        timings,
        agreement,
    }
}
