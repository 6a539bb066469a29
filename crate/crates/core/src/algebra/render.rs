//! Text, LaTeX and JSON forms of polynomials.
//!
//! All renderers walk terms in canonical (descending graded-lex) order, so
//! output is stable across runs and platforms.

use std::collections::BTreeSet;
use std::fmt::{self, Display, Write as _};
use std::str::FromStr;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{AlgebraError, Coeff, Monomial, Polynomial, Rational, VarId};

/// Coefficients that know how to print themselves in both text forms.
pub trait RenderCoeff: Coeff + Signed + Display {
    fn latex(&self) -> String {
        self.to_string()
    }
}

impl RenderCoeff for BigInt {}
impl RenderCoeff for i64 {}

impl RenderCoeff for Rational {
    fn latex(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

fn monomial_latex(m: &Monomial) -> String {
    m.powers()
        .iter()
        .map(|&(v, e)| {
            if e == 1 {
                v.latex()
            } else {
                format!("{}^{{{e}}}", v.latex())
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_terms<R: RenderCoeff>(out: &mut String, p: &Polynomial<R>, style: Style) {
    if p.is_zero() {
        out.push('0');
        return;
    }
    for (k, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        let unit = mag.is_one();
        match style {
            Style::Text => {
                if m.is_one() {
                    let _ = write!(out, "{mag}");
                } else if unit {
                    let _ = write!(out, "{m}");
                } else {
                    let _ = write!(out, "{mag}*{m}");
                }
            }
            Style::Latex => {
                if m.is_one() {
                    out.push_str(&mag.latex());
                } else if unit {
                    out.push_str(&monomial_latex(m));
                } else {
                    let _ = write!(out, "{}\\,{}", mag.latex(), monomial_latex(m));
                }
            }
        }
    }
}

impl<R: RenderCoeff> Polynomial<R> {
    /// Plain expanded text, e.g. `C1^2 - 2*C2`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        write_terms(&mut s, self, Style::Text);
        s
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        write_terms(&mut s, self, Style::Latex);
        s
    }

    pub fn render(&self, style: Style) -> String {
        match style {
            Style::Text => self.to_text(),
            Style::Latex => self.to_latex(),
        }
    }
}

impl<R: RenderCoeff> Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A rational polynomial split as `bracket / denominator + outside`, where
/// `outside` holds the terms free of Chern, twist and auxiliary variables
/// (the rank constant) and `bracket` has integer coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Prefactored {
    pub denominator: BigInt,
    pub bracket: Polynomial<BigInt>,
    pub outside: Polynomial<Rational>,
}

impl Prefactored {
    pub fn new(p: &Polynomial<Rational>) -> Self {
        let is_outside =
            |m: &Monomial| m.powers().iter().all(|&(v, _)| v == VarId::Rank);
        let mut inner = Polynomial::zero();
        let mut outside = Polynomial::zero();
        for (m, c) in p.terms() {
            if is_outside(m) {
                outside.add_term(m.clone(), c.clone());
            } else {
                inner.add_term(m.clone(), c.clone());
            }
        }
        let denominator = inner.common_denominator();
        let bracket = inner
            .scale(&Rational::from_integer(denominator.clone()))
            .to_integer()
            .expect("scaled by the common denominator");
        Prefactored {
            denominator,
            bracket,
            outside,
        }
    }

    pub fn render(&self, style: Style) -> String {
        let mut s = String::new();
        let has_bracket = !self.bracket.is_zero();
        if has_bracket {
            let body = self.bracket.render(style);
            match (self.denominator.is_one(), style) {
                (true, _) => s.push_str(&body),
                (false, Style::Text) => {
                    let _ = write!(s, "1/{}*({body})", self.denominator);
                }
                (false, Style::Latex) => {
                    let _ = write!(s, "\\frac{{1}}{{{}}}\\left[{body}\\right]", self.denominator);
                }
            }
        }
        if !self.outside.is_zero() || !has_bracket {
            let tail = self.outside.render(style);
            if !has_bracket {
                s.push_str(&tail);
            } else if let Some(rest) = tail.strip_prefix('-') {
                let _ = write!(s, " - {rest}");
            } else {
                let _ = write!(s, " + {tail}");
            }
        }
        s
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: IndexMap<String, u32>,
}

impl<R: Coeff + Display + FromStr> Polynomial<R> {
    /// JSON form. `vars` lists declared variables in addition to the ones
    /// occurring; the emitted list is sorted in variable order.
    pub fn to_json_value(&self, vars: &[VarId]) -> serde_json::Value {
        let mut all: BTreeSet<VarId> = self.variables();
        all.extend(vars.iter().copied());
        let doc = PolyJson {
            vars: all.iter().map(|v| v.name()).collect(),
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    exps: m.powers().iter().map(|&(v, e)| (v.name(), e)).collect(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }

    pub fn to_json(&self, vars: &[VarId]) -> String {
        self.to_json_value(vars).to_string()
    }

    /// Parses the JSON form. Repeated monomials are summed and zero terms
    /// dropped, so the result is canonical.
    pub fn from_json(s: &str) -> Result<Self, AlgebraError> {
        let doc: PolyJson =
            serde_json::from_str(s).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        let declared: BTreeSet<VarId> = doc
            .vars
            .iter()
            .map(|name| name.parse())
            .collect::<Result<_, _>>()?;
        let mut p = Polynomial::zero();
        for term in doc.terms {
            let coeff: R = term
                .coeff
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("invalid coefficient {:?}", term.coeff)))?;
            let mut pairs = Vec::with_capacity(term.exps.len());
            for (name, e) in term.exps {
                let v: VarId = name.parse()?;
                if !declared.contains(&v) {
                    return Err(AlgebraError::Parse(format!(
                        "variable {name} is not listed in \"vars\""
                    )));
                }
                pairs.push((v, e));
            }
            p.add_term(Monomial::from_pairs(pairs), coeff);
        }
        Ok(p)
    }
}
