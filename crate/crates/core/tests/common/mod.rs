//! Test-only helpers: a tiny reader for hand-transcribed integer
//! polynomials such as `C1^4 + 10*C1^3 - 4*C1^2*C2 + 50`.

#![allow(dead_code)]

use chernchi::{Integer, IntPoly, Monomial, VarId};

pub fn parse_int_poly(src: &str) -> IntPoly {
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut current = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(std::mem::take(&mut current));
        }
        current.push(ch);
    }
    terms.push(current);
    let mut p = IntPoly::zero();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, term.strip_prefix('+').unwrap_or(&term)),
        };
        let mut coeff = Integer::from(sign);
        let mut pairs = Vec::new();
        for factor in body.split('*') {
            if factor.chars().all(|c| c.is_ascii_digit()) {
                coeff *= factor.parse::<Integer>().unwrap();
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().unwrap()),
                None => (factor, 1),
            };
            let v: VarId = name.parse().unwrap_or_else(|_| panic!("bad factor {factor:?}"));
            pairs.push((v, exp));
        }
        p.add_term(Monomial::from_pairs(pairs), coeff);
    }
    p
}

#[test]
fn reader_smoke() {
    let p = parse_int_poly("C1^2 - 2*C2 + 3*T*C1 - 7");
    assert_eq!(p.len(), 4);
    assert_eq!(p.constant_term(), Integer::from(-7));
    assert_eq!(p.to_text(), "C1^2 + 3*C1*T - 2*C2 - 7");
}
