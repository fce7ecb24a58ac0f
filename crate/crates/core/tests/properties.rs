//! Property tests for the exact-arithmetic layer.

use proptest::prelude::*;
use qmoments::{MPoly, TruncSeries, Var};

fn arb_monomial() -> impl Strategy<Value = MPoly> {
    (
        -4i64..=4,
        prop::collection::vec((0usize..Var::COUNT, 0u16..3), 0..3),
    )
        .prop_map(|(coeff, vars)| {
            let pairs: Vec<(Var, u16)> = vars.into_iter().map(|(i, e)| (Var::ALL[i], e)).collect();
            MPoly::mono(coeff, &pairs)
        })
}

fn arb_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(arb_monomial(), 0..5).prop_map(|monos| {
        let mut acc = MPoly::zero();
        for m in monos {
            acc += &m;
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_commutes(p in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.add(&r), r.add(&p));
    }

    #[test]
    fn multiplication_commutes(p in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.mul(&r), r.mul(&p));
    }

    #[test]
    fn multiplication_associates(p in arb_poly(), r in arb_poly(), s in arb_poly()) {
        prop_assert_eq!(p.mul(&r).mul(&s), p.mul(&r.mul(&s)));
    }

    #[test]
    fn multiplication_distributes(p in arb_poly(), r in arb_poly(), s in arb_poly()) {
        prop_assert_eq!(p.mul(&r.add(&s)), p.mul(&r).add(&p.mul(&s)));
    }

    #[test]
    fn exact_division_inverts_multiplication(p in arb_poly(), r in arb_poly()) {
        prop_assume!(!r.is_zero());
        prop_assert_eq!(p.mul(&r).exact_div(&r).unwrap(), p);
    }

    #[test]
    fn subtraction_cancels(p in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.add(&r).sub(&r), p);
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn rendering_roundtrips(p in arb_poly()) {
        let parsed: MPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn json_roundtrips(p in arb_poly()) {
        let json = serde_json::to_string(&p).unwrap();
        let back: MPoly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn series_inverse_multiplies_to_one(tail in prop::collection::vec(arb_poly(), 1..5)) {
        // series with unit constant term and no t in the coefficients
        let coeffs: Vec<MPoly> = std::iter::once(MPoly::one())
            .chain(tail.into_iter().map(|p| p.substitute(Var::T, &MPoly::one())))
            .collect();
        let order = coeffs.len() - 1;
        let s = TruncSeries::from_coeffs(coeffs);
        let inv = s.invert().unwrap();
        prop_assert_eq!(s.mul(&inv), TruncSeries::one(order));
    }
}
