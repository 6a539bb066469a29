//! Power sums `B_r = sum x_i^r` rewritten in the elementary symmetric
//! polynomials `C_j`.
//!
//! Two independent routes are provided. [`power_sum_matrix`] expands the
//! determinant of the `r x r` Newton matrix
//!
//! ```text
//! | 1C1    1      0   ...  0  |
//! | 2C2    C1     1   ...  0  |
//! | ...                       |
//! | rCr  C(r-1)  ...  C2   C1 |
//! ```
//!
//! by cofactors; [`power_sum_recursive`] uses
//! `B_r = sum_{l=1}^{r-1} (-1)^(l-1) C_l B_(r-l) + (-1)^(r-1) r C_r`
//! with memoized lower power sums.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Zero};

use crate::algebra::{Coeff, Monomial, Polynomial, VarId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PowerSumMethod {
    Matrix,
    Recursive,
}

impl PowerSumMethod {
    pub const ALL: [PowerSumMethod; 2] = [PowerSumMethod::Matrix, PowerSumMethod::Recursive];

    pub fn name(self) -> &'static str {
        match self {
            PowerSumMethod::Matrix => "matrix",
            PowerSumMethod::Recursive => "recursive",
        }
    }
}

impl fmt::Display for PowerSumMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for PowerSumMethod {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for PowerSumMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "matrix" => Ok(PowerSumMethod::Matrix),
            "recursive" => Ok(PowerSumMethod::Recursive),
            other => Err(format!("unknown method {other:?} (expected matrix or recursive)")),
        }
    }
}

fn coeff<R: FromPrimitive>(k: i64) -> R {
    R::from_i64(k).expect("small integer fits the coefficient ring")
}

fn chern<R: Coeff>(k: usize, scale: R) -> Polynomial<R> {
    Polynomial::term(Monomial::var(VarId::chern(k as u32)), scale)
}

/// The Newton matrix `M_r` with polynomial entries.
#[derive(Debug, Clone)]
pub struct NewtonMatrix<R> {
    size: usize,
    entries: Vec<Vec<Polynomial<R>>>,
}

impl<R: Coeff + FromPrimitive> NewtonMatrix<R> {
    pub fn new(size: usize) -> Self {
        assert!(size >= 1, "Newton matrix needs size >= 1");
        let entries = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        if j == 0 {
                            chern(i + 1, coeff((i + 1) as i64))
                        } else if j == i + 1 {
                            Polynomial::one()
                        } else if j <= i {
                            chern(i - j + 1, R::one())
                        } else {
                            Polynomial::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        NewtonMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial<R> {
        &self.entries[row][col]
    }

    /// Determinant by recursive cofactor expansion down the first remaining
    /// column, skipping zero entries. Division free.
    pub fn determinant(&self) -> Polynomial<R> {
        let mut rows: Vec<usize> = (0..self.size).collect();
        self.minor(&mut rows, 0)
    }

    fn minor(&self, rows: &mut Vec<usize>, col: usize) -> Polynomial<R> {
        if rows.len() == 1 {
            return self.entries[rows[0]][col].clone();
        }
        let mut det = Polynomial::zero();
        for pos in 0..rows.len() {
            let row = rows[pos];
            let entry = &self.entries[row][col];
            if entry.is_zero() {
                continue;
            }
            rows.remove(pos);
            let sub = self.minor(rows, col + 1);
            rows.insert(pos, row);
            if sub.is_zero() {
                continue;
            }
            let term = entry * &sub;
            if pos % 2 == 0 {
                det += term;
            } else {
                det -= &term;
            }
        }
        det
    }
}

/// `B_r` as the determinant of the Newton matrix.
pub fn power_sum_matrix<R: Coeff + FromPrimitive>(r: usize) -> Polynomial<R> {
    NewtonMatrix::new(r).determinant()
}

/// Memo of `B_1, B_2, ...` for the recursive route. Filling is monotone and
/// idempotent, so a shared cache can serve concurrent callers.
#[derive(Debug, Default)]
pub struct PowerSumCache<R> {
    sums: RwLock<Vec<Arc<Polynomial<R>>>>,
}

impl<R: Coeff + FromPrimitive> PowerSumCache<R> {
    pub fn new() -> Self {
        PowerSumCache {
            sums: RwLock::new(Vec::new()),
        }
    }

    /// Number of power sums computed so far.
    pub fn len(&self) -> usize {
        self.sums.read().expect("power-sum cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `B_r` for `r >= 1`, computing any missing lower sums first.
    pub fn get(&self, r: usize) -> Arc<Polynomial<R>> {
        assert!(r >= 1, "power sums are indexed from 1");
        if let Some(b) = self.sums.read().expect("power-sum cache poisoned").get(r - 1) {
            return Arc::clone(b);
        }
        let mut sums = self.sums.write().expect("power-sum cache poisoned");
        while sums.len() < r {
            let k = sums.len() + 1;
            let next = recursion_step(k, &sums);
            sums.push(Arc::new(next));
        }
        Arc::clone(&sums[r - 1])
    }
}

/// One step of the recursion; `lower[j]` holds `B_(j+1)` for `j < k-1`.
fn recursion_step<R: Coeff + FromPrimitive>(k: usize, lower: &[Arc<Polynomial<R>>]) -> Polynomial<R> {
    let sign = |e: usize| -> i64 { if e % 2 == 0 { 1 } else { -1 } };
    let mut b = chern(k, coeff(sign(k - 1) * k as i64));
    for l in 1..k {
        let m = Monomial::var(VarId::chern(l as u32));
        b += lower[k - l - 1].mul_monomial(&m, &coeff(sign(l - 1)));
    }
    b
}

/// `B_r` through the memoized recursion.
pub fn power_sum_recursive<R: Coeff + FromPrimitive>(r: usize, cache: &PowerSumCache<R>) -> Polynomial<R> {
    (*cache.get(r)).clone()
}

pub fn power_sum<R: Coeff + FromPrimitive>(
    r: usize,
    method: PowerSumMethod,
    cache: &PowerSumCache<R>,
) -> Polynomial<R> {
    match method {
        PowerSumMethod::Matrix => power_sum_matrix(r),
        PowerSumMethod::Recursive => power_sum_recursive(r, cache),
    }
}

/// `(e_1, ..., e_n)` of the multiset `a`, with `e_k = 0` for `k > a.len()`.
pub fn elementary_values(a: &[i64], n: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); n + 1];
    e[0] = BigInt::from(1);
    for &x in a {
        let x = BigInt::from(x);
        for k in (1..=n).rev() {
            let add = &x * &e[k - 1];
            e[k] += add;
        }
    }
    e.remove(0);
    e
}

/// `sum a_i^r`; `r = 0` gives the length of `a`.
pub fn power_sum_values(a: &[i64], r: u32) -> BigInt {
    a.iter().map(|&x| num_traits::pow(BigInt::from(x), r as usize)).sum()
}
