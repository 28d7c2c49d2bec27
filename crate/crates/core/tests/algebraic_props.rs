mod common;

use std::cmp::Ordering;

use common::*;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use parab_kit::algebraic::*;
use parab_kit::cyclotomic::{cyclotomic_poly, trace_polynomial};
use parab_kit::polyring::{IntegerPoly, RationalInterval};
use proptest::prelude::*;

fn sqrt2() -> RealAlgebraic {
    RealAlgebraic::new(ip(&[-2, 0, 1]), RationalInterval::closed(q(1, 1), q(2, 1)).unwrap()).unwrap()
}

fn golden_conjugates() -> Vec<RealAlgebraic> {
    RealAlgebraic::new(ip(&[-1, 1, 1]), RationalInterval::closed(q(0, 1), q(1, 1)).unwrap())
        .unwrap()
        .real_conjugates()
}

proptest! {
    #[test]
    fn sign_at_rational_points(c in prop::collection::vec(-12i64..=12, 1..6), n in -50i64..50, d in 1i64..30) {
        let p = ip(&c);
        let x = q(n, d);
        let alpha = from_rational(&x);
        prop_assert_eq!(sign_at(&p, &alpha).unwrap(), p.to_rational().eval(&x).cmp(&BigRational::zero()));
    }

    #[test]
    fn affine_round_trip(sn in -9i64..=9, sd in 1i64..5, tn in -9i64..=9, td in 1i64..5) {
        prop_assume!(sn != 0);
        let (s, t) = (q(sn, sd), q(tn, td));
        for alpha in golden_conjugates().into_iter().chain([sqrt2()]) {
            let beta = affine_transform(&alpha, &s, &t).unwrap();
            let back = affine_transform(&beta, &s.recip(), &(-&t / &s)).unwrap();
            prop_assert_eq!(back.minpoly(), alpha.minpoly());
            prop_assert!(back.same_number(&alpha));
            let expect = s.to_f64().unwrap() * alpha.to_f64() + t.to_f64().unwrap();
            prop_assert!((beta.to_f64() - expect).abs() < 1e-9);
        }
    }

    #[test]
    fn sign_at_irrational_matches_float(c in prop::collection::vec(-12i64..=12, 1..6)) {
        let p = ip(&c);
        for alpha in golden_conjugates().into_iter().chain([sqrt2()]) {
            let v: f64 = to_f64s(&p).iter().rev().fold(0.0, |acc, a| acc * alpha.to_f64() + a);
            let exact = sign_at(&p, &alpha).unwrap();
            if v.abs() > 1e-9 {
                prop_assert_eq!(exact, v.partial_cmp(&0.0).unwrap());
            }
        }
    }
}

#[test]
fn sign_detects_exact_zero() {
    // (x² − 2)(x + 3) vanishes at √2
    let p = ip(&[-6, -2, 3, 1]);
    assert_eq!(sign_at(&p, &sqrt2()).unwrap(), Ordering::Equal);
    // 10^12 (x² − 2) − 1 is just below zero at √2
    let tiny = IntegerPoly::new(vec![
        (-2i64 * 1_000_000_000_000 - 1).into(),
        0.into(),
        1_000_000_000_000i64.into(),
    ]);
    assert_eq!(sign_at(&tiny, &sqrt2()).unwrap(), Ordering::Less);
}

#[test]
fn cyclotomic_total_reality() {
    assert!(is_totally_real(&cyclotomic_poly(1)).unwrap());
    assert!(is_totally_real(&cyclotomic_poly(2)).unwrap());
    for n in 3..=60 {
        assert!(!is_totally_real(&cyclotomic_poly(n)).unwrap(), "n = {n}");
    }
    for n in 1..=50 {
        assert!(is_totally_real(&trace_polynomial(n)).unwrap(), "n = {n}");
    }
}

#[test]
fn conjugate_location_is_monotone_in_interval() {
    let p = ip(&[41, 52, 16]);
    let nested = [
        RationalInterval::closed(q(-2, 1), q(-5, 4)).unwrap(),
        RationalInterval::closed_open(q(-2, 1), q(-5, 4)).unwrap(),
        RationalInterval::closed(q(-191, 100), q(-134, 100)).unwrap(),
        RationalInterval::closed(q(-19, 10), q(-135, 100)).unwrap(),
    ];
    let results: Vec<bool> = nested.iter().map(|iv| all_conjugates_in(&p, iv).unwrap()).collect();
    assert_eq!(results, [true, true, true, false]);
    for w in results.windows(2) {
        assert!(w[0] || !w[1]);
    }
}

#[test]
fn parse_round_trip() {
    for s in ["-7/4", "16x^2+52x+41@(-3/2,-5/4]", "x^2-2@[1,2]"] {
        let a: RealAlgebraic = s.parse().unwrap();
        let b: RealAlgebraic = a.to_string().parse().unwrap();
        assert!(a.same_number(&b));
    }
    assert!("x^2-2@[-2,2]".parse::<RealAlgebraic>().is_err());
    assert!("x^2-4x+4@[1,3]".parse::<RealAlgebraic>().is_err());
}
