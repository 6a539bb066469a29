use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{common_denominator, Rational};
use super::{AlgebraError, Monomial, VarId};

/// Coefficient ring of a [`Polynomial`].
///
/// Any commutative ring element with the `num-traits` identities qualifies;
/// the crate itself uses [`Rational`] and [`BigInt`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Send
        + Sync
{
}

/// Sparse multivariate polynomial in canonical form: a map from monomial to
/// nonzero coefficient, keyed in graded-lex order. Structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Polynomial<R> {
    terms: BTreeMap<Monomial, R>,
}

impl<R: Coeff> Default for Polynomial<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Coeff> Polynomial<R> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v), R::one())
    }

    pub fn term(m: Monomial, c: R) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, R)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place, pruning the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the largest monomial to the smallest (canonical print order).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    pub fn constant_term(&self) -> R {
        self.coeff(&Monomial::one())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn weighted_degree(&self, weight: impl Fn(VarId) -> u32) -> Option<u32> {
        self.terms.keys().map(|m| m.weighted_degree(&weight)).max()
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &R) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone() * c.clone())),
        )
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Groups terms by the power of `v`: `self = sum_k out[k] * v^k`, with no
    /// `v` left in any `out[k]`.
    pub fn collect_by(&self, v: VarId) -> BTreeMap<u32, Polynomial<R>> {
        let mut out: BTreeMap<u32, Polynomial<R>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Coefficient of `v^exp` as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, v: VarId, exp: u32) -> Polynomial<R> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e == exp {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Simultaneous substitution of the bound variables; unbound variables
    /// pass through unchanged.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, Polynomial<R>>) -> Self {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut powers: HashMap<(VarId, u32), Polynomial<R>> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Self::one();
            for &(v, e) in m.powers() {
                match bindings.get(&v) {
                    Some(q) => {
                        let qe = powers.entry((v, e)).or_insert_with(|| q.pow(e));
                        acc = &acc * &*qe;
                    }
                    None => kept.push((v, e)),
                }
            }
            let factor = Monomial::from_pairs(kept);
            for (k, a) in acc.terms {
                out.add_term(k.mul(&factor), a * c.clone());
            }
        }
        out
    }

    /// Exact evaluation; every variable of `self` must be bound.
    pub fn eval(&self, point: &BTreeMap<VarId, R>) -> Result<R, AlgebraError> {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for &(v, e) in m.powers() {
                let x = point.get(&v).ok_or(AlgebraError::UnboundVariable(v))?;
                value = value * num_traits::pow(x.clone(), e as usize);
            }
            acc = acc + value;
        }
        Ok(acc)
    }
}

impl Polynomial<Rational> {
    /// Least common multiple of all coefficient denominators.
    pub fn common_denominator(&self) -> BigInt {
        common_denominator(self.terms.values())
    }

    /// The same polynomial over the integers, if every coefficient is integral.
    pub fn to_integer(&self) -> Option<Polynomial<BigInt>> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            out.add_term(m.clone(), c.to_integer());
        }
        Some(out)
    }
}

impl Polynomial<BigInt> {
    pub fn to_rational(&self) -> Polynomial<Rational> {
        self.map_coeffs(|c| Rational::from_integer(c.clone()))
    }
}

impl<'a, R: Coeff> Add<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;

    fn add(self, rhs: &'a Polynomial<R>) -> Polynomial<R> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<R: Coeff> Add for Polynomial<R> {
    type Output = Polynomial<R>;

    fn add(mut self, rhs: Polynomial<R>) -> Polynomial<R> {
        if self.len() < rhs.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<R: Coeff> AddAssign<&Polynomial<R>> for Polynomial<R> {
    fn add_assign(&mut self, rhs: &Polynomial<R>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<R: Coeff> AddAssign for Polynomial<R> {
    fn add_assign(&mut self, rhs: Polynomial<R>) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<R: Coeff> Neg for Polynomial<R> {
    type Output = Polynomial<R>;

    fn neg(self) -> Polynomial<R> {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<R: Coeff> Neg for &Polynomial<R> {
    type Output = Polynomial<R>;

    fn neg(self) -> Polynomial<R> {
        -self.clone()
    }
}

impl<'a, R: Coeff> Sub<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;

    fn sub(self, rhs: &'a Polynomial<R>) -> Polynomial<R> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<R: Coeff> Sub for Polynomial<R> {
    type Output = Polynomial<R>;

    fn sub(mut self, rhs: Polynomial<R>) -> Polynomial<R> {
        self -= &rhs;
        self
    }
}

impl<R: Coeff> SubAssign<&Polynomial<R>> for Polynomial<R> {
    fn sub_assign(&mut self, rhs: &Polynomial<R>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a, R: Coeff> Mul<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;

    fn mul(self, rhs: &'a Polynomial<R>) -> Polynomial<R> {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Coeff> Mul for Polynomial<R> {
    type Output = Polynomial<R>;

    fn mul(self, rhs: Polynomial<R>) -> Polynomial<R> {
        &self * &rhs
    }
}

impl<R: Coeff> MulAssign<&Polynomial<R>> for Polynomial<R> {
    fn mul_assign(&mut self, rhs: &Polynomial<R>) {
        *self = &*self * rhs;
    }
}

impl<R: Coeff> Sum for Polynomial<R> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<R: Coeff> Product for Polynomial<R> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl<R: Coeff> From<VarId> for Polynomial<R> {
    fn from(v: VarId) -> Self {
        Polynomial::var(v)
    }
}
