//! Splitting-principle cross-check.
//!
//! A split bundle `O(a_1) + ... + O(a_n)` on `P^N` has only global
//! sections, so `chi = sum_i binom(a_i + N, N)`, and its Chern classes are
//! the elementary symmetric functions of the `a_i`. Evaluating the universal
//! polynomial at those classes must reproduce the binomial sum; the twisted
//! polynomial must reproduce `sum_i R_N(a_i + t) / N!` for every integer `t`.
//!
//! Nothing here goes through the Stirling or power-sum machinery.
//!
//! Sampling: trial `k` draws its `n` twists from one `ChaCha8Rng` seeded
//! with `seed_from_u64(seed)`; each `a_i` is `next_u64() % (max_a + 1)`.

use std::fmt::{self, Display, Write as _};

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::Rational;
use crate::eulerchi::{ChernVector, ChiEngine, ChiError};

/// `O(a_1) + ... + O(a_n)` on `P^dim`, all `a_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitBundle {
    dim: usize,
    twists: Vec<u64>,
}

impl SplitBundle {
    pub fn new(dim: usize, twists: Vec<u64>) -> Result<Self, ChiError> {
        if dim == 0 {
            return Err(ChiError::InvalidDimension);
        }
        if twists.is_empty() {
            return Err(ChiError::InvalidRank("0".into()));
        }
        Ok(SplitBundle { dim, twists })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[u64] {
        &self.twists
    }

    pub fn chern_vector(&self) -> ChernVector {
        let a: Vec<i64> = self.twists.iter().map(|&x| x as i64).collect();
        ChernVector::of_split(self.dim, &a).expect("valid bundle")
    }
}

/// `sum_i binom(a_i + N, N)`.
pub fn split_chi(sb: &SplitBundle) -> BigInt {
    let n = BigInt::from(sb.dim);
    sb.twists
        .iter()
        .map(|&a| binomial(BigInt::from(a) + &n, n.clone()))
        .sum()
}

/// `sum_i (d+1)(d+2)...(d+N) / N!` with `d = a_i + t`.
pub fn split_chi_twist(sb: &SplitBundle, t: i64) -> BigInt {
    let fact: BigInt = (1..=sb.dim).map(BigInt::from).product();
    sb.twists
        .iter()
        .map(|&a| {
            let d = BigInt::from(a) + BigInt::from(t);
            let prod: BigInt = (1..=sb.dim).map(|j| &d + BigInt::from(j)).product();
            let (q, r) = prod.div_rem(&fact);
            assert!(r == BigInt::from(0), "product of N consecutive integers");
            q
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub dim: usize,
    pub rank: usize,
    pub trials: usize,
    pub max_a: u64,
    pub seed: u64,
    /// Twists `-twist_range..=twist_range` are checked for every tuple.
    pub twist_range: i64,
}

fn as_string<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn as_strings<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    /// `None` for the untwisted comparison.
    pub twist: Option<i64>,
    #[serde(serialize_with = "as_string")]
    pub expected: BigInt,
    #[serde(serialize_with = "as_string")]
    pub actual: Rational,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub index: usize,
    pub twists: Vec<u64>,
    #[serde(serialize_with = "as_strings")]
    pub chern: Vec<BigInt>,
    pub checks: Vec<Check>,
}

impl TrialRecord {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub checks: usize,
    pub mismatches: usize,
    pub trials: Vec<TrialRecord>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &TrialRecord> {
        self.trials.iter().filter(|t| !t.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

impl Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "verify N={} n={} trials={} max_a={} seed={} twists={}..={}",
            c.dim, c.rank, c.trials, c.max_a, c.seed, -c.twist_range, c.twist_range
        )?;
        for trial in self.failures() {
            for check in trial.checks.iter().filter(|k| !k.ok) {
                let mut line = format!("MISMATCH trial {} a={:?} c=(", trial.index, trial.twists);
                for (i, ci) in trial.chern.iter().enumerate() {
                    let _ = write!(line, "{}{ci}", if i > 0 { "," } else { "" });
                }
                line.push(')');
                match check.twist {
                    Some(t) => {
                        let _ = write!(line, " t={t}");
                    }
                    None => line.push_str(" untwisted"),
                }
                writeln!(f, "{line}: expected {} got {}", check.expected, check.actual)?;
            }
        }
        write!(
            f,
            "{}: {} checks, {} mismatches",
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks,
            self.mismatches
        )
    }
}

/// Draws `trials` twist tuples of length `rank` from `{0, ..., max_a}`.
pub fn sample_bundles(dim: usize, rank: usize, trials: usize, max_a: u64, seed: u64) -> Vec<SplitBundle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let modulus = max_a + 1;
    (0..trials)
        .map(|_| {
            let twists = (0..rank).map(|_| rng.next_u64() % modulus).collect();
            SplitBundle { dim, twists }
        })
        .collect()
}

fn check_bundle(engine: &ChiEngine, index: usize, sb: &SplitBundle, twist_range: i64) -> TrialRecord {
    let cv = sb.chern_vector();
    let mut checks = Vec::with_capacity(1 + 2 * twist_range.max(0) as usize + 1);
    let expected = split_chi(sb);
    let actual = engine.evaluate(&cv, None);
    checks.push(Check {
        twist: None,
        ok: actual == Rational::from_integer(expected.clone()),
        expected,
        actual,
    });
    for t in -twist_range..=twist_range {
        let expected = split_chi_twist(sb, t);
        let actual = engine.evaluate(&cv, Some(t));
        checks.push(Check {
            twist: Some(t),
            ok: actual == Rational::from_integer(expected.clone()),
            expected,
            actual,
        });
    }
    TrialRecord {
        index,
        twists: sb.twists.clone(),
        chern: cv.classes().to_vec(),
        checks,
    }
}

/// Compares the engine against the oracle on the given bundles. Trials run
/// in parallel; records come back in input order.
pub fn verify_bundles(
    engine: &ChiEngine,
    config: VerifyConfig,
    bundles: &[SplitBundle],
) -> VerifyReport {
    let trials: Vec<TrialRecord> = bundles
        .par_iter()
        .enumerate()
        .map(|(i, sb)| check_bundle(engine, i, sb, config.twist_range))
        .collect();
    let checks = trials.iter().map(|t| t.checks.len()).sum();
    let mismatches = trials
        .iter()
        .flat_map(|t| &t.checks)
        .filter(|c| !c.ok)
        .count();
    VerifyReport {
        config,
        checks,
        mismatches,
        trials,
    }
}

/// Seeded random verification; identical configs give identical reports.
pub fn verify(config: VerifyConfig) -> Result<VerifyReport, ChiError> {
    if config.dim == 0 {
        return Err(ChiError::InvalidDimension);
    }
    if config.rank == 0 {
        return Err(ChiError::InvalidRank("0".into()));
    }
    let bundles = sample_bundles(config.dim, config.rank, config.trials, config.max_a, config.seed);
    Ok(verify_bundles(ChiEngine::global(), config, &bundles))
}

/// The `k`-th forward difference of `f` at `x0`.
pub fn forward_difference(f: impl Fn(i64) -> BigInt, x0: i64, k: usize) -> BigInt {
    let mut acc = BigInt::from(0);
    for j in 0..=k {
        let w = binomial(BigInt::from(k), BigInt::from(j));
        let term = w * f(x0 + j as i64);
        if (k - j) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
