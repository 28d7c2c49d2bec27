mod common;

use common::*;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use parab_kit::cyclotomic::*;
use parab_kit::polyring::{sturm_count, IntegerPoly, RationalInterval};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn divisor_product_is_x_n_minus_1() {
    for n in 1..=100u64 {
        let mut prod = IntegerPoly::one();
        for d in divisors(n) {
            prod = &prod * &cyclotomic_poly(d);
        }
        let mut target = vec![0i64; n as usize + 1];
        target[0] = -1;
        target[n as usize] = 1;
        assert_eq!(prod, ip(&target), "n = {n}");
    }
}

#[test]
fn degrees_match_totient() {
    for n in 3..=100u64 {
        let phi = euler_phi(n) as usize;
        assert_eq!(cyclotomic_poly(n).degree(), Some(phi));
        assert_eq!(trace_polynomial(n).degree(), Some(phi / 2));
    }
}

#[test]
fn trace_polynomial_pulls_back_to_cyclotomic() {
    // x^m T_n(x + 1/x) = Σ t_k (x² + 1)^k x^(m−k)
    let x2p1 = ip(&[1, 0, 1]);
    for n in 3..=50u64 {
        let t = trace_polynomial(n);
        let m = t.degree().unwrap();
        let mut acc = IntegerPoly::zero();
        for k in 0..=m {
            let term = x2p1.pow(k).shift(m - k).scale(&t.coeff(k));
            acc = &acc + &term;
        }
        assert_eq!(acc, cyclotomic_poly(n), "n = {n}");
    }
}

#[test]
fn trace_roots_are_twice_cosines() {
    for n in 3..=30u64 {
        let t = to_f64s(&trace_polynomial(n));
        for k in (1..n).filter(|k| num_integer::gcd(*k, n) == 1) {
            let b = 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos();
            let v = horner(&t, Complex64::new(b, 0.0)).norm();
            assert!(v < 1e-6 * 4f64.powi(t.len() as i32), "n = {n}, k = {k}: {v}");
        }
    }
}

#[test]
fn trace_roots_in_closed_interval() {
    let two = BigRational::from_integer(2.into());
    let iv = RationalInterval::closed(-two.clone(), two).unwrap();
    for n in 1..=100u64 {
        let t = trace_polynomial(n);
        assert_eq!(sturm_count(&t.to_rational(), &iv).unwrap(), t.degree().unwrap(), "n = {n}");
    }
}

#[test]
fn kronecker_on_random_products() {
    let mut r = rng(21);
    let x_minus_2 = ip(&[-2, 1]);
    for _ in 0..40 {
        let k = r.gen_range(1..=3);
        let mut orders: Vec<u64> = (0..k).map(|_| r.gen_range(1..=30)).collect();
        let p = orders.iter().fold(IntegerPoly::one(), |acc, &n| &acc * &cyclotomic_poly(n));
        orders.sort();
        match is_cyclotomic_product(&p).unwrap() {
            CyclotomicDecision::Product(found) => {
                let mut found = found;
                found.sort();
                assert_eq!(found, orders);
            }
            CyclotomicDecision::NotCyclotomic => panic!("{orders:?} rejected"),
        }
        assert!(!is_cyclotomic_product(&(&p * &x_minus_2)).unwrap().is_product());
    }
}

#[test]
fn kronecker_examples() {
    assert!(!is_cyclotomic_product(&ip(&[-1, -1, 1])).unwrap().is_product());
    assert!(is_cyclotomic_product(&ip(&[1, 1, 1, 1, 1])).unwrap().is_product());
    // Lehmer's polynomial: Salem root, not cyclotomic
    let lehmer = ip(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
    assert!(!is_cyclotomic_product(&lehmer).unwrap().is_product());
}

#[test]
fn moebius_and_totient_sums() {
    for n in 1..=200u64 {
        let ds = divisors(n);
        assert_eq!(ds.iter().map(|&d| euler_phi(d)).sum::<u64>(), n);
        let mu: i64 = ds.iter().map(|&d| moebius(d) as i64).sum();
        assert_eq!(mu, i64::from(n == 1));
    }
}

#[test]
fn inverse_totient_is_complete() {
    for d in 1..=12u64 {
        let set = inverse_totient_upto(d);
        for n in 1..=2000u64 {
            assert_eq!(set.contains(n), euler_phi(n) <= d, "d = {d}, n = {n}");
        }
    }
}

#[test]
fn order_sets_from_both_arguments() {
    assert_eq!(admissible_orders(&q(0, 1), false).unwrap().as_slice(), &[2, 3, 4]);
    assert_eq!(admissible_orders(&q(1, 2), true).unwrap().as_slice(), &[2, 3, 4, 5]);
    assert_eq!(admissible_orders(&q(0, 1), true).unwrap().as_slice(), &[2, 3]);
    assert_eq!(admissible_orders(&q(1, 2), false).unwrap().as_slice(), &[2, 3, 4, 5, 6]);
    assert!(admissible_orders(&q(3, 2), false).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn admissible_orders_monotone(a in -8i64..=8, b in -8i64..=8, strict in any::<bool>()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let small = admissible_orders_with_cap(&q(lo, 8), strict, 40).unwrap();
        let large = admissible_orders_with_cap(&q(hi, 8), strict, 40).unwrap();
        prop_assert!(small.is_subset_of(&large), "{:?} vs {:?}", small, large);
    }

    #[test]
    fn cyclotomic_values_at_one(n in 2u64..200) {
        // Φ_n(1) is p for prime powers p^k and 1 otherwise
        let v = cyclotomic_poly(n).eval(&BigInt::from(1));
        let f = {
            let mut m = n;
            let mut p = 2;
            while m % p != 0 { p += 1; }
            while m % p == 0 { m /= p; }
            (m == 1).then_some(p)
        };
        prop_assert_eq!(v, BigInt::from(f.unwrap_or(1)));
    }
}
