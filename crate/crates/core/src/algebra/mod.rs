//! Exact arithmetic substrate: arbitrary-precision rationals, sparse
//! multivariate polynomials over indexed variable families, rational
//! functions with factored denominators, and q-series helpers.
//!
//! Everything here is immutable after construction and all operations are
//! pure, so values can be shared freely across threads.

mod display;
mod error;
mod monomial;
pub mod parse;
pub mod poly;
pub mod qseries;
mod ratfun;
mod subst;
mod variable;

pub use error::AlgebraError;
pub use monomial::Monomial;
pub use poly::{rat, Poly};
pub use ratfun::{LimitPoint, RatFun};
pub use subst::Substitution;
pub use variable::{VarFamily, Variable};

#[cfg(test)]
mod proptests {
    use super::parse::poly as p;
    use super::*;
    use num::{BigInt, BigRational};
    use proptest::prelude::*;

    fn arb_variable() -> impl Strategy<Value = Variable> {
        prop_oneof![
            (1u32..4).prop_map(Variable::t),
            (1u32..3).prop_map(Variable::q),
            Just(Variable::tau()),
        ]
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        prop::collection::vec((arb_variable(), 1u32..3), 0..3).prop_map(|pairs| {
            let mut m = Monomial::one();
            for (v, e) in pairs {
                m = m.mul(&Monomial::var_pow(v, e));
            }
            m
        })
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((arb_monomial(), -4i64..5), 0..5).prop_map(|terms| {
            let mut out = Poly::zero();
            for (m, c) in terms {
                out.add_term(m, BigRational::from(BigInt::from(c)));
            }
            out
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn mul_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn add_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn exact_div_inverts_mul(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            let q = prod.exact_div(&b).unwrap().expect("product divides");
            prop_assert_eq!(q, a);
        }
    }

    proptest! {
        #[test]
        fn ratfun_equality_is_stable_under_factor_inflation(
            a in arb_poly(), f in arb_poly(), g in arb_poly()
        ) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            // Three representations of the same function compare equal
            // pairwise (symmetry and transitivity of cross-multiplication).
            let plain = RatFun::from_poly(a.clone());
            let by_f = RatFun::from_num_den(&a * &f, [f.clone()]).unwrap();
            let by_fg = RatFun::from_num_den(&(&a * &f) * &g, [f, g]).unwrap();
            prop_assert_eq!(plain.clone(), by_f.clone());
            prop_assert_eq!(by_f, by_fg.clone());
            prop_assert_eq!(by_fg, plain);
        }
    }

    #[test]
    fn limit_of_q_integers() {
        for n in 1..=20u32 {
            let num = Poly::one_minus(Monomial::var_pow(Variable::tau(), n));
            let g = RatFun::from_num_den(num, [p("1 - tau")]).unwrap();
            assert_eq!(g.limit_tau(LimitPoint::One).unwrap(), RatFun::int(n as i64));
        }
    }

    #[test]
    fn limit_commutes_with_addition() {
        // L(f+g) = L(f) + L(g) whenever both sides are defined.
        let cases = [
            ("(1 - tau^4)/(1 - tau)", "(1 - tau^2)/(1 - tau^4)"),
            ("(1 - tau^2)/(1 - tau^3)", "(1 + tau)/(1 + tau^2)"),
            ("tau/(1 + tau)", "(1 - tau^5)/(1 - tau)"),
        ];
        for point in [LimitPoint::Zero, LimitPoint::One] {
            for (fs, gs) in &cases {
                let f = parse::ratfun(fs);
                let g = parse::ratfun(gs);
                let lhs = (&f + &g).limit_tau(point).unwrap();
                let rhs = &f.limit_tau(point).unwrap() + &g.limit_tau(point).unwrap();
                assert_eq!(lhs, rhs, "point {point:?}, f={fs}, g={gs}");
            }
        }
    }
}
