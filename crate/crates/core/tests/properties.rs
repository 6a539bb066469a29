use std::collections::BTreeMap;
use std::sync::Arc;
use std::thread;

use chernchi::eulerchi::{
    build_chi_polynomial, chi_polynomial, chi_twist_polynomial, evaluate_chi, twist_bindings,
    twist_chern_vector, ChiEngine,
};
use chernchi::oracle::{forward_difference, split_chi, split_chi_twist, SplitBundle};
use chernchi::stirling::{factorial, unsigned_stirling1};
use chernchi::symmfun::{elementary_values, power_sum_matrix, power_sum_values, PowerSumCache};
use chernchi::{ChernVector, ChiRequest, IntPoly, Monomial, PowerSumMethod, Rank, RatPoly, Rational, VarId};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn arb_poly() -> impl Strategy<Value = RatPoly> {
    let term = (
        -9i64..10,
        1i64..4,
        proptest::collection::vec((1u32..4, 0u32..3), 0..3),
        0u32..2,
    );
    proptest::collection::vec(term, 0..6).prop_map(|terms| {
        RatPoly::from_terms(terms.into_iter().map(|(p, q, cs, t)| {
            let mut pairs: Vec<_> = cs.into_iter().map(|(i, e)| (VarId::Chern(i), e)).collect();
            pairs.push((VarId::Twist, t));
            (Monomial::from_pairs(pairs), Rational::new(p.into(), q.into()))
        }))
    })
}

fn arb_point() -> impl Strategy<Value = BTreeMap<VarId, Rational>> {
    proptest::collection::vec(-5i64..6, 4).prop_map(|v| {
        [VarId::Chern(1), VarId::Chern(2), VarId::Chern(3), VarId::Twist]
            .into_iter()
            .zip(v)
            .map(|(var, x)| (var, Rational::from_integer(x.into())))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RatPoly::one(), a.clone());
    }

    #[test]
    fn eval_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), pt in arb_point()) {
        let ea = a.eval(&pt).unwrap();
        let eb = b.eval(&pt).unwrap();
        prop_assert_eq!((&a + &b).eval(&pt).unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).eval(&pt).unwrap(), &ea * &eb);
    }

    #[test]
    fn eval_after_substitute(p in arb_poly(), q1 in arb_poly(), q2 in arb_poly(), pt in arb_point()) {
        let sigma: BTreeMap<_, _> = [(VarId::Chern(1), q1.clone()), (VarId::Chern(2), q2.clone())].into();
        let mut inner = pt.clone();
        inner.insert(VarId::Chern(1), q1.eval(&pt).unwrap());
        inner.insert(VarId::Chern(2), q2.eval(&pt).unwrap());
        prop_assert_eq!(p.substitute(&sigma).eval(&pt).unwrap(), p.eval(&inner).unwrap());
    }

    #[test]
    fn power_sums_are_faithful(a in proptest::collection::vec(-6i64..7, 1..6), r in 1usize..7) {
        let cache = PowerSumCache::<BigInt>::new();
        let b = cache.get(r);
        let e = elementary_values(&a, r);
        let pt: BTreeMap<_, _> = (1..=r).map(|i| (VarId::Chern(i as u32), e[i - 1].clone())).collect();
        prop_assert_eq!(b.eval(&pt).unwrap(), power_sum_values(&a, r as u32));
    }

    #[test]
    fn chi_matches_split_oracle(
        dim in 1usize..6,
        twists in proptest::collection::vec(0u64..6, 1..6),
        t in -4i64..5,
    ) {
        let sb = SplitBundle::new(dim, twists).unwrap();
        let cv = sb.chern_vector();
        prop_assert_eq!(evaluate_chi(&cv, None), Rational::from_integer(split_chi(&sb)));
        prop_assert_eq!(evaluate_chi(&cv, Some(t)), Rational::from_integer(split_chi_twist(&sb, t)));
    }

    #[test]
    fn twisting_composes(
        dim in 1usize..5,
        classes in proptest::collection::vec(-4i64..5, 4),
        rank in 1u64..5,
        s in -3i64..4,
        t in -3i64..4,
    ) {
        let cv = ChernVector::new(dim, rank, classes[..dim].iter().map(|&c| c.into()).collect()).unwrap();
        let once = twist_chern_vector(&twist_chern_vector(&cv, s), t);
        prop_assert_eq!(&once, &twist_chern_vector(&cv, s + t));
        prop_assert_eq!(evaluate_chi(&cv, Some(s + t)), evaluate_chi(&twist_chern_vector(&cv, s), Some(t)));
    }
}

#[test]
fn power_sums_are_homogeneous() {
    let cache = PowerSumCache::<BigInt>::new();
    for r in 1..=9 {
        let b = cache.get(r);
        for (m, _) in b.terms() {
            assert_eq!(m.weighted_degree(|v| v.chern_index().unwrap_or(0)), r as u32, "B_{r} term {m}");
        }
        // Coefficient of C1^r is 1 and of Cr is (-1)^(r-1) r.
        assert_eq!(b.coeff(&Monomial::var_pow(VarId::Chern(1), r as u32)), BigInt::from(1));
        let sign = if r % 2 == 1 { 1 } else { -1 };
        assert_eq!(b.coeff(&Monomial::var(VarId::Chern(r as u32))), BigInt::from(sign * r as i64));
    }
}

#[test]
fn matrix_and_recursion_agree_up_to_twelve() {
    let cache = PowerSumCache::<BigInt>::new();
    for r in 1..=12 {
        let m: IntPoly = power_sum_matrix(r);
        assert_eq!(m, *cache.get(r), "B_{r}");
    }
}

#[test]
fn chi_leading_terms() {
    // P - n has C1^N / N! as its top power of C1, and the C1 coefficient is
    // [N+1, 2] / N! = H_N.
    for dim in 1..=8 {
        let req = ChiRequest::new(dim, Rank::Symbolic).unwrap();
        let p = chi_polynomial(req, PowerSumMethod::Recursive);
        let nf = Rational::from_integer(BigInt::from(factorial(dim)));
        let top = p.coeff(&Monomial::var_pow(VarId::Chern(1), dim as u32));
        assert_eq!(top * &nf, Rational::from_integer(1.into()));
        let lin = p.coeff(&Monomial::var(VarId::Chern(1)));
        let s: BigUint = unsigned_stirling1(dim + 1, 2);
        assert_eq!(lin * &nf, Rational::from_integer(BigInt::from(s)));
        assert_eq!(p.coeff(&Monomial::var(VarId::Rank)), Rational::from_integer(1.into()));
    }
}

#[test]
fn twisted_polynomial_is_substitution_of_chi() {
    for dim in 1..=5 {
        for rank in [Rank::Numeric(1), Rank::Numeric(dim as u64 + 1), Rank::Symbolic] {
            let req = ChiRequest::new(dim, rank).unwrap();
            let p = chi_polynomial(req, PowerSumMethod::Recursive);
            let g = chi_twist_polynomial(req);
            assert_eq!(g, p.substitute(&twist_bindings(dim, rank)));
            let at_zero: BTreeMap<_, _> = [(VarId::Twist, RatPoly::zero())].into();
            assert_eq!(g.substitute(&at_zero), p);
        }
    }
}

#[test]
fn twist_is_degree_n_in_t_with_constant_top_difference() {
    for (dim, a) in [(2usize, vec![0u64, 3]), (3, vec![1, 1, 4]), (4, vec![2, 0, 0, 5, 1])] {
        let sb = SplitBundle::new(dim, a.clone()).unwrap();
        let rank = BigInt::from(a.len());
        for x0 in [-3, 0, 2] {
            assert_eq!(forward_difference(|t| split_chi_twist(&sb, t), x0, dim), rank);
            assert_eq!(forward_difference(|t| split_chi_twist(&sb, t), x0, dim + 1), BigInt::from(0));
        }
    }
}

#[test]
fn concurrent_engine_queries_match_fresh_builds() {
    let engine = Arc::new(ChiEngine::new());
    let handles: Vec<_> = (0..8)
        .map(|i| {
            let engine = Arc::clone(&engine);
            thread::spawn(move || {
                let dim = 3 + i % 4;
                let method = PowerSumMethod::ALL[i % 2];
                let req = ChiRequest::new(dim, Rank::Symbolic).unwrap();
                (req, method, engine.chi(req, method))
            })
        })
        .collect();
    for h in handles {
        let (req, method, p) = h.join().unwrap();
        assert_eq!(*p, build_chi_polynomial(req, method));
    }
}
