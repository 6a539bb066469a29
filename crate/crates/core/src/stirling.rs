//! Stirling numbers of the first kind and the rising-factorial polynomial.
//!
//! The unsigned number `[N, m]` counts permutations of `N` elements with
//! exactly `m` cycles and satisfies
//! `[N, m] = [N-1, m-1] + (N-1) [N-1, m]`. The expansion
//! `(x+1)(x+2)...(x+N) = sum_k [N+1, k+1] x^k` gives the number of degree
//! `a` hypersurfaces in `P^N` as `R_N(a) / N!`.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::algebra::{Coeff, Monomial, Polynomial, Rational, VarId};

/// Memoized triangle of unsigned Stirling numbers; row `N` holds
/// `[N, 0], ..., [N, N]`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl Default for StirlingTable {
    fn default() -> Self {
        Self::new()
    }
}

impl StirlingTable {
    pub fn new() -> Self {
        StirlingTable {
            rows: vec![vec![BigUint::one()]],
        }
    }

    /// Table holding rows `0..=max_row`.
    pub fn with_rows(max_row: usize) -> Self {
        let mut t = Self::new();
        t.extend_to(max_row);
        t
    }

    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn extend_to(&mut self, max_row: usize) {
        while self.rows.len() <= max_row {
            let n = self.rows.len();
            let prev = &self.rows[n - 1];
            let k = BigUint::from(n - 1);
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::zero());
            for m in 1..=n {
                let diag = &prev[m - 1];
                let mut v = diag.clone();
                if let Some(above) = prev.get(m) {
                    v += &k * above;
                }
                row.push(v);
            }
            self.rows.push(row);
        }
    }

    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// `[n, m]`, or `None` when `n` is past the last computed row.
    pub fn get(&self, n: usize, m: usize) -> Option<BigUint> {
        let row = self.rows.get(n)?;
        Some(row.get(m).cloned().unwrap_or_default())
    }
}

fn global() -> &'static RwLock<StirlingTable> {
    static TABLE: OnceLock<RwLock<StirlingTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(StirlingTable::with_rows(32)))
}

/// Row `n` of the shared table, growing it if needed.
pub fn stirling_row(n: usize) -> Vec<BigUint> {
    if let Some(row) = global().read().expect("stirling table poisoned").row(n) {
        return row.to_vec();
    }
    let mut table = global().write().expect("stirling table poisoned");
    table.extend_to(n);
    table.row(n).expect("just extended").to_vec()
}

/// Unsigned Stirling number of the first kind; zero outside `0 <= m <= n`.
pub fn unsigned_stirling1(n: usize, m: usize) -> BigUint {
    if m > n {
        return BigUint::zero();
    }
    if let Some(v) = global().read().expect("stirling table poisoned").get(n, m) {
        return v;
    }
    let mut table = global().write().expect("stirling table poisoned");
    table.extend_to(n);
    table.get(n, m).expect("just extended")
}

/// Signed Stirling number `s(n, m) = (-1)^(n-m) [n, m]`.
pub fn signed_stirling1(n: usize, m: usize) -> BigInt {
    let v = BigInt::from(unsigned_stirling1(n, m));
    if (n + m) % 2 == 0 {
        v
    } else {
        -v
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `R_N(X) = (X+1)(X+2)...(X+N)`, assembled from row `N+1` of the table.
pub fn rising_factorial_poly<R: Coeff + From<BigInt>>(n: usize) -> Polynomial<R> {
    let row = stirling_row(n + 1);
    Polynomial::from_terms((0..=n).map(|k| {
        (
            Monomial::var_pow(VarId::Aux, k as u32),
            R::from(BigInt::from(row[k + 1].clone())),
        )
    }))
}

/// `(X)_N = X(X-1)...(X-N+1) = sum_k s(N, k) X^k`.
pub fn falling_factorial_poly<R: Coeff + From<BigInt>>(n: usize) -> Polynomial<R> {
    Polynomial::from_terms(
        (0..=n).map(|k| (Monomial::var_pow(VarId::Aux, k as u32), R::from(signed_stirling1(n, k)))),
    )
}

/// `R_N(a) / N!`: the number of degree-`a` hypersurfaces in `P^N` for
/// `a >= 0`, and the Hilbert polynomial of `O(a)` for every integer `a`.
pub fn h0_line_bundle(n: usize, a: &BigInt) -> Rational {
    let row = stirling_row(n + 1);
    let mut value = BigInt::zero();
    let mut power = BigInt::one();
    for coeff in &row[1..] {
        value += BigInt::from(coeff.clone()) * &power;
        power *= a;
    }
    Rational::new(value, BigInt::from(factorial(n)))
}

/// Fixed-width lower-triangular table of rows `0..=max_row`, one row per
/// line with a `N\m` header.
pub fn format_table(max_row: usize, signed: bool) -> String {
    let cells: Vec<Vec<String>> = (0..=max_row)
        .map(|n| {
            (0..=n)
                .map(|m| {
                    if signed {
                        signed_stirling1(n, m).to_string()
                    } else {
                        unsigned_stirling1(n, m).to_string()
                    }
                })
                .collect()
        })
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .chain([max_row.to_string().len()])
        .max()
        .unwrap_or(1);
    let label = max_row.to_string().len().max(3);
    let mut out = String::new();
    out.push_str(&format!("{:>label$} |", "N\\m"));
    for m in 0..=max_row {
        out.push_str(&format!(" {m:>width$}"));
    }
    out.push('\n');
    out.push_str(&"-".repeat(label + 1));
    out.push('+');
    out.push_str(&"-".repeat((width + 1) * (max_row + 1)));
    out.push('\n');
    for (n, row) in cells.iter().enumerate() {
        out.push_str(&format!("{n:>label$} |"));
        for cell in row {
            out.push_str(&format!(" {cell:>width$}"));
        }
        out.push('\n');
    }
    out
}
