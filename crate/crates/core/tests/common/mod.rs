//! Shared test oracles: a floating-point root finder and a seeded random
//! family of small integer polynomials.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use parab_kit::polyring::{IntegerPoly, RationalPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn ip(c: &[i64]) -> IntegerPoly {
    IntegerPoly::from_i64(c)
}

pub fn to_f64s(p: &IntegerPoly) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap()).collect()
}

pub fn rat_to_f64s(p: &RationalPoly) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap()).collect()
}

pub fn horner(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// All complex roots by Durand–Kerner iteration, followed by a few Newton
/// polishing steps. Coefficients low-to-high; the leading one is nonzero.
pub fn roots(coeffs: &[f64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let lead = coeffs[d];
    let c: Vec<f64> = coeffs.iter().map(|a| a / lead).collect();
    let radius = 1.0 + c[..d].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32) * radius.min(2.0)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = horner(&c, z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    let dc: Vec<f64> = c.iter().enumerate().skip(1).map(|(k, a)| a * k as f64).collect();
    for r in z.iter_mut() {
        for _ in 0..3 {
            let dv = horner(&dc, *r);
            if dv.norm() > 1e-12 {
                *r -= horner(&c, *r) / dv;
            }
        }
    }
    z
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Degree in `1..=max_deg`, coefficients in `[-bound, bound]`, nonzero lead.
pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64) -> IntegerPoly {
    let d = rng.gen_range(1..=max_deg);
    let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
    while c[d] == 0 {
        c[d] = rng.gen_range(-bound..=bound);
    }
    ip(&c)
}

pub fn random_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-num..=num)), BigInt::from(rng.gen_range(1..=den)))
}
