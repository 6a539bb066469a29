//! The universal Euler-characteristic polynomials.
//!
//! For a rank `n` sheaf on `P^N`,
//!
//! ```text
//! P = 1/N! * sum_{k=1}^{N} [N+1, k+1] B_k(C1, ..., Ck) + n
//! ```
//!
//! where `[., .]` is the unsigned Stirling number and `B_k` the power sum in
//! the elementary basis. The twisted polynomial `G(C, T)` is `P` with each
//! `C_i` replaced by the Chern class of the twist,
//! `C_i(T) = sum_{j=0}^{i} binom(n-j, i-j) T^(i-j) C_j` (`C_0 = 1`).
//!
//! The rank may be symbolic, in which case it appears as the variable `n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, Monomial, Rational, VarId};
use crate::stirling::{factorial, stirling_row};
use crate::symmfun::{elementary_values, power_sum_matrix, PowerSumCache, PowerSumMethod};
use crate::{IntPoly, RatPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChiError {
    #[error("dimension must be at least 1")]
    InvalidDimension,
    #[error("rank must be a positive integer or the symbol n, got {0:?}")]
    InvalidRank(String),
    #[error("expected {expected} Chern classes (one per dimension), got {got}")]
    ChernArity { expected: usize, got: usize },
    #[error("a symbolic rank cannot be evaluated; give a numeric rank")]
    SymbolicRank,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Sheaf rank: a positive integer or the formal symbol `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rank {
    Numeric(u64),
    Symbolic,
}

impl Rank {
    pub fn value(self) -> Option<u64> {
        match self {
            Rank::Numeric(n) => Some(n),
            Rank::Symbolic => None,
        }
    }

    /// The rank as a constant polynomial, or the variable `n`.
    pub fn to_poly(self) -> RatPoly {
        match self {
            Rank::Numeric(n) => RatPoly::constant(Rational::from_integer(n.into())),
            Rank::Symbolic => RatPoly::var(VarId::Rank),
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Numeric(n) => write!(f, "{n}"),
            Rank::Symbolic => f.write_str("n"),
        }
    }
}

impl FromStr for Rank {
    type Err = ChiError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "n" {
            return Ok(Rank::Symbolic);
        }
        match s.parse::<u64>() {
            Ok(n) if n >= 1 => Ok(Rank::Numeric(n)),
            _ => Err(ChiError::InvalidRank(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChiRequest {
    dim: usize,
    rank: Rank,
}

impl ChiRequest {
    pub fn new(dim: usize, rank: Rank) -> Result<Self, ChiError> {
        if dim == 0 {
            return Err(ChiError::InvalidDimension);
        }
        if rank == Rank::Numeric(0) {
            return Err(ChiError::InvalidRank("0".into()));
        }
        Ok(ChiRequest { dim, rank })
    }

    pub fn numeric(dim: usize, rank: u64) -> Result<Self, ChiError> {
        Self::new(dim, Rank::Numeric(rank))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// `C1, ..., CN`.
    pub fn chern_vars(&self) -> Vec<VarId> {
        (1..=self.dim as u32).map(VarId::Chern).collect()
    }
}

/// Chern classes `(c1, ..., cN)` of a rank `n` sheaf on `P^N`. Entries are
/// unrestricted; classes above the rank may be nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernVector {
    dim: usize,
    rank: u64,
    classes: Vec<BigInt>,
}

impl ChernVector {
    pub fn new(dim: usize, rank: u64, classes: Vec<BigInt>) -> Result<Self, ChiError> {
        if dim == 0 {
            return Err(ChiError::InvalidDimension);
        }
        if rank == 0 {
            return Err(ChiError::InvalidRank("0".into()));
        }
        if classes.len() != dim {
            return Err(ChiError::ChernArity {
                expected: dim,
                got: classes.len(),
            });
        }
        Ok(ChernVector { dim, rank, classes })
    }

    /// Chern classes of the split bundle `O(a_1) + ... + O(a_n)`.
    pub fn of_split(dim: usize, twists: &[i64]) -> Result<Self, ChiError> {
        Self::new(dim, twists.len() as u64, elementary_values(twists, dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn classes(&self) -> &[BigInt] {
        &self.classes
    }

    fn point(&self) -> BTreeMap<VarId, Rational> {
        self.classes
            .iter()
            .enumerate()
            .map(|(i, c)| (VarId::Chern(i as u32 + 1), Rational::from_integer(c.clone())))
            .collect()
    }
}

/// `binom(top, k)` as a polynomial in whatever `top` contains.
fn binomial_poly(top: &RatPoly, k: usize) -> RatPoly {
    let mut acc = RatPoly::one();
    for m in 0..k {
        let shifted = top - &RatPoly::constant(Rational::from_integer(BigInt::from(m)));
        acc = &acc * &shifted;
    }
    acc.scale(&Rational::new(BigInt::one(), BigInt::from(factorial(k))))
}

/// Generalized integer binomial `m (m-1) ... (m-k+1) / k!`, any sign of `m`.
fn binomial_int(m: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    for j in 0..k {
        num *= m - BigInt::from(j);
    }
    let (q, r) = num.div_rem(&BigInt::from(factorial(k)));
    debug_assert!(r.is_zero());
    q
}

/// `C_i(T)`: the `i`-th Chern class of the twist by `O(T)`, for a rank
/// `rank` sheaf with classes `C_1, C_2, ...`.
pub fn twisted_chern_polynomial(i: usize, rank: Rank) -> RatPoly {
    assert!(i >= 1, "Chern class index starts at 1");
    let n = rank.to_poly();
    let mut out = RatPoly::zero();
    for j in 0..=i {
        let top = &n - &RatPoly::constant(Rational::from_integer(BigInt::from(j)));
        let coeff = binomial_poly(&top, i - j);
        let mut mono = Monomial::var_pow(VarId::Twist, (i - j) as u32);
        if j > 0 {
            mono = mono.mul(&Monomial::var(VarId::Chern(j as u32)));
        }
        out += coeff.mul_monomial(&mono, &Rational::one());
    }
    out
}

/// The substitution `C_i -> C_i(T)` for `i = 1..=dim`.
pub fn twist_bindings(dim: usize, rank: Rank) -> BTreeMap<VarId, RatPoly> {
    (1..=dim)
        .map(|i| (VarId::Chern(i as u32), twisted_chern_polynomial(i, rank)))
        .collect()
}

/// Numeric Chern classes of `F(t)` from those of `F`.
pub fn twist_chern_vector(cv: &ChernVector, t: i64) -> ChernVector {
    let n = BigInt::from(cv.rank);
    let t = BigInt::from(t);
    let classes = (1..=cv.dim)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let cj = if j == 0 { BigInt::one() } else { cv.classes[j - 1].clone() };
                    binomial_int(&(&n - BigInt::from(j)), i - j) * num_traits::pow(t.clone(), i - j) * cj
                })
                .sum()
        })
        .collect();
    ChernVector {
        dim: cv.dim,
        rank: cv.rank,
        classes,
    }
}

/// `N! (P - n)` assembled from the given power sums.
fn stirling_combination(dim: usize, power_sum: impl Fn(usize) -> IntPoly) -> IntPoly {
    let row = stirling_row(dim + 1);
    let mut s = IntPoly::zero();
    for k in 1..=dim {
        s += power_sum(k).scale(&BigInt::from(row[k + 1].clone()));
    }
    s
}

/// `P` computed from scratch with a private power-sum memo; nothing is
/// shared with other calls.
pub fn build_chi_polynomial(req: ChiRequest, method: PowerSumMethod) -> RatPoly {
    let cache = PowerSumCache::new();
    assemble_chi(req, method, &cache)
}

fn assemble_chi(req: ChiRequest, method: PowerSumMethod, cache: &PowerSumCache<BigInt>) -> RatPoly {
    let scaled = match method {
        PowerSumMethod::Matrix => stirling_combination(req.dim, power_sum_matrix::<BigInt>),
        PowerSumMethod::Recursive => stirling_combination(req.dim, |k| (*cache.get(k)).clone()),
    };
    let inv = Rational::new(BigInt::one(), BigInt::from(factorial(req.dim)));
    scaled.to_rational().scale(&inv) + req.rank.to_poly()
}

/// Per-process memo of power sums and of `P`, `G` per request. Concurrent
/// fills may compute a value twice but always store the same one.
#[derive(Debug, Default)]
pub struct ChiEngine {
    power_sums: PowerSumCache<BigInt>,
    chi: Mutex<HashMap<(ChiRequest, PowerSumMethod), Arc<RatPoly>>>,
    twisted: Mutex<HashMap<ChiRequest, Arc<RatPoly>>>,
}

impl ChiEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static ChiEngine {
        static ENGINE: OnceLock<ChiEngine> = OnceLock::new();
        ENGINE.get_or_init(ChiEngine::new)
    }

    pub fn chi(&self, req: ChiRequest, method: PowerSumMethod) -> Arc<RatPoly> {
        if let Some(p) = self.chi.lock().expect("chi cache poisoned").get(&(req, method)) {
            return Arc::clone(p);
        }
        let p = Arc::new(assemble_chi(req, method, &self.power_sums));
        let mut map = self.chi.lock().expect("chi cache poisoned");
        Arc::clone(map.entry((req, method)).or_insert(p))
    }

    pub fn chi_twist(&self, req: ChiRequest) -> Arc<RatPoly> {
        if let Some(g) = self.twisted.lock().expect("twist cache poisoned").get(&req) {
            return Arc::clone(g);
        }
        let p = self.chi(req, PowerSumMethod::Recursive);
        let g = Arc::new(p.substitute(&twist_bindings(req.dim, req.rank)));
        let mut map = self.twisted.lock().expect("twist cache poisoned");
        Arc::clone(map.entry(req).or_insert(g))
    }

    pub fn evaluate(&self, cv: &ChernVector, t: Option<i64>) -> Rational {
        let req = ChiRequest {
            dim: cv.dim,
            rank: Rank::Numeric(cv.rank),
        };
        let mut point = cv.point();
        let poly = match t {
            None => self.chi(req, PowerSumMethod::Recursive),
            Some(t) => {
                point.insert(VarId::Twist, Rational::from_integer(t.into()));
                self.chi_twist(req)
            }
        };
        poly.eval(&point).expect("every Chern variable is bound")
    }
}

/// `P(C1, ..., CN)` for the request.
pub fn chi_polynomial(req: ChiRequest, method: PowerSumMethod) -> RatPoly {
    (*ChiEngine::global().chi(req, method)).clone()
}

/// `G(C1, ..., CN, T) = P(C1(T), ..., CN(T))`.
pub fn chi_twist_polynomial(req: ChiRequest) -> RatPoly {
    (*ChiEngine::global().chi_twist(req)).clone()
}

/// `chi(F)` or, with a twist, `chi(F(t))`, from the Chern classes of `F`.
pub fn evaluate_chi(cv: &ChernVector, t: Option<i64>) -> Rational {
    ChiEngine::global().evaluate(cv, t)
}
