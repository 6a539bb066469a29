use std::cmp::Ordering;
use std::fmt;

use super::VarId;

/// A power product of variables, stored sparsely as `(variable, exponent)`
/// pairs sorted by variable with every exponent positive.
///
/// Ordering is graded lexicographic: total degree first, then the exponent
/// vectors compared in variable order, so `C1^2 > C1*C2 > C2^2 > C1 > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { powers: Vec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Monomial {
            powers: vec![(v, 1)],
        }
    }

    pub fn var_pow(v: VarId, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial {
                powers: vec![(v, exp)],
            }
        }
    }

    /// Builds a monomial from arbitrary pairs; repeated variables are merged
    /// and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut powers: Vec<(VarId, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        powers.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { powers: merged }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|&(_, e)| e).sum()
    }

    /// Degree with per-variable weights, e.g. weight `k` for `C_k`.
    pub fn weighted_degree(&self, weight: impl Fn(VarId) -> u32) -> u32 {
        self.powers.iter().map(|&(v, e)| weight(v) * e).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.powers
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.powers[i].1)
            .unwrap_or(0)
    }

    pub fn powers(&self) -> &[(VarId, u32)] {
        &self.powers
    }

    pub fn contains(&self, v: VarId) -> bool {
        self.exponent(v) > 0
    }

    /// The monomial with `v` removed, together with the exponent `v` had.
    pub fn split_off(&self, v: VarId) -> (u32, Monomial) {
        let mut rest = self.clone();
        let exp = match rest.powers.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => rest.powers.remove(i).1,
            Err(_) => 0,
        };
        (exp, rest)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { powers: out }
    }

    /// Lexicographic comparison of exponent vectors in variable order.
    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.powers, &other.powers);
        for (x, y) in a.iter().zip(b.iter()) {
            match x.0.cmp(&y.0) {
                // `self` has a positive exponent where `other` has none.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match x.1.cmp(&y.1) {
                    Ordering::Equal => {}
                    ord => return ord,
                },
            }
        }
        a.len().cmp(&b.len())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(i: u32) -> VarId {
        VarId::Chern(i)
    }

    #[test]
    fn grlex_order() {
        let c1sq = Monomial::var_pow(c(1), 2);
        let c1c2 = Monomial::from_pairs([(c(1), 1), (c(2), 1)]);
        let c2sq = Monomial::var_pow(c(2), 2);
        let c1 = Monomial::var(c(1));
        let c3 = Monomial::var(c(3));
        let t = Monomial::var(VarId::Twist);
        assert!(c1sq > c1c2);
        assert!(c1c2 > c2sq);
        assert!(c2sq > c1);
        assert!(c1 > c3);
        assert!(c3 > t);
        assert!(t > Monomial::one());
    }

    #[test]
    fn from_pairs_merges_and_drops_zero() {
        let m = Monomial::from_pairs([(c(2), 1), (c(1), 0), (c(2), 2), (VarId::Twist, 1)]);
        assert_eq!(m.powers(), &[(c(2), 3), (VarId::Twist, 1)]);
        assert_eq!(m.degree(), 4);
        assert_eq!(m.to_string(), "C2^3*T");
    }

    #[test]
    fn mul_and_split() {
        let a = Monomial::from_pairs([(c(1), 2), (VarId::Twist, 1)]);
        let b = Monomial::from_pairs([(c(1), 1), (c(3), 1)]);
        let p = a.mul(&b);
        assert_eq!(p.powers(), &[(c(1), 3), (c(3), 1), (VarId::Twist, 1)]);
        let (e, rest) = p.split_off(VarId::Twist);
        assert_eq!(e, 1);
        assert_eq!(rest.powers(), &[(c(1), 3), (c(3), 1)]);
        assert_eq!(p.weighted_degree(|v| v.chern_index().unwrap_or(1)), 3 + 3 + 1);
    }
}
