//! Iteration of `f_c(z) = z² + c`: iterates, periodic-point polynomials,
//! discriminants, multipliers, and real-parameter classification.

mod discriminant;
mod numeric;

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebraic::{affine_transform, sign_at, RealAlgebraic};
use crate::cyclotomic::{divisors, moebius};
use crate::error::{Error, Result};
use crate::polyring::{IntegerPoly, IteratedMapPoly, RationalPoly};

pub use discriminant::{
    discriminant_pn, discriminant_pn_interpolated, discriminant_pn_with_cap,
    interpolation_degree_bound, parity_certificate, parity_certificate_with_cap,
    substitute_quarter, ParityCertificate,
};
pub use numeric::{
    find_attracting_cycle_numeric, NumericCycle, CYCLE_ITERATION_BUDGET, DEFAULT_PRECISION,
    NUMERIC_PERIOD_CAP,
};

/// Largest `n` for which `f_c^n` is expanded symbolically.
pub const ITERATE_CAP: u32 = 6;
/// Default largest `n` for [`discriminant_pn`].
pub const DISCRIMINANT_CAP: u32 = 5;
/// `n = 6` is reachable through [`discriminant_pn_with_cap`] but slow.
pub const DISCRIMINANT_HARD_CAP: u32 = 6;
/// Default number of steps for [`escapes`].
pub const ESCAPE_BUDGET: usize = 1000;

const ESCAPE_DIGITS: u32 = 60;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `f_c^n(z)` as a polynomial in `z` over ℤ[c].
pub fn iterate_map(n: u32) -> Result<IteratedMapPoly> {
    if n == 0 || n > ITERATE_CAP {
        return Err(Error::CapExceeded { n, cap: ITERATE_CAP });
    }
    let c = IteratedMapPoly::constant(IntegerPoly::x());
    let mut g = IteratedMapPoly::x();
    for _ in 0..n {
        g = &(&g * &g) + &c;
    }
    Ok(g)
}

/// `f_c^n(z) − z`.
pub fn period_poly(n: u32) -> Result<IteratedMapPoly> {
    Ok(&iterate_map(n)? - &IteratedMapPoly::x())
}

/// `f_c^n(z) − z` at a rational parameter, computed directly over ℚ.
pub fn period_poly_at(n: u32, c: &BigRational) -> Result<RationalPoly> {
    if n == 0 || n > ITERATE_CAP {
        return Err(Error::CapExceeded { n, cap: ITERATE_CAP });
    }
    let cp = RationalPoly::constant(c.clone());
    let mut g = RationalPoly::x();
    for _ in 0..n {
        g = &(&g * &g) + &cp;
    }
    Ok(&g - &RationalPoly::x())
}

/// `∏_{d|n} (f_c^d(z) − z)^{μ(n/d)}` at a rational parameter.
pub fn dynatomic_poly(n: u32, c: &BigRational) -> Result<RationalPoly> {
    if n == 0 || n > ITERATE_CAP {
        return Err(Error::CapExceeded { n, cap: ITERATE_CAP });
    }
    let mut num = RationalPoly::one();
    let mut den = RationalPoly::one();
    for d in divisors(n as u64) {
        match moebius(n as u64 / d) {
            1 => num = &num * &period_poly_at(d as u32, c)?,
            -1 => den = &den * &period_poly_at(d as u32, c)?,
            _ => {}
        }
    }
    num.div_exact(&den)
}

/// Multiplier `∏ 2zᵢ = 2^n (−1)^n g(0)/lc(g)` of the cycle formed by the
/// roots of `g`.
pub fn cycle_multiplier(g: &IntegerPoly, n: u32) -> Result<BigRational> {
    if g.degree() != Some(n as usize) {
        return Err(Error::DegreeMismatch { degree: g.degree().unwrap_or(0), period: n });
    }
    let mut num = g.coeff(0) << (n as usize);
    if n % 2 == 1 {
        num = -num;
    }
    Ok(BigRational::new(num, g.lc().unwrap().clone()))
}

/// An exactly verified cycle of `f_c` at a rational parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleCertificate {
    pub period: u32,
    pub cycle_poly: IntegerPoly,
    pub parameter: BigRational,
    pub multiplier: BigRational,
}

pub fn verify_cycle(
    c: &BigRational,
    g: &IntegerPoly,
    n: u32,
    expected: &BigRational,
) -> Result<CycleCertificate> {
    let g = g.primitive_part();
    let multiplier = cycle_multiplier(&g, n)?;
    let (_, r) = period_poly_at(n, c)?.div_rem(&g.to_rational())?;
    if !r.is_zero() {
        return Err(Error::NotAFactor);
    }
    if &multiplier != expected {
        return Err(Error::MultiplierMismatch {
            expected: expected.to_string(),
            actual: multiplier.to_string(),
        });
    }
    Ok(CycleCertificate { period: n, cycle_poly: g, parameter: c.clone(), multiplier })
}

/// Preperiod and period of a finite critical orbit, counted from the
/// critical value `c` (so `c = −2`, orbit `−2 ↦ 2 ↦ 2`, has preperiod 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalOrbit {
    pub preperiod: u32,
    pub period: u32,
}

/// `Some` exactly when the orbit of 0 under `f_c` is finite.
///
/// For `c = p/q` with `q > 1` the k-th iterate has denominator `q^(2^(k−1))`,
/// so the orbit never repeats.
pub fn is_pcf_rational(c: &BigRational) -> Option<CriticalOrbit> {
    if !c.is_integer() {
        return None;
    }
    let c = c.to_integer();
    let bound = c.abs().max(BigInt::from(2));
    let mut seen: HashMap<BigInt, u32> = HashMap::new();
    let mut z = c.clone();
    let mut k = 0u32;
    loop {
        if let Some(&first) = seen.get(&z) {
            return Some(CriticalOrbit { preperiod: first, period: k - first });
        }
        if z.abs() > bound {
            return None;
        }
        seen.insert(z.clone(), k);
        z = &z * &z + &c;
        k += 1;
    }
}

/// Whether the critical orbit of `f_c` tends to infinity.
///
/// Inside `[−2, ¼]` the interval `[−β, β]`, `β` the larger fixed point, is
/// forward invariant and contains 0, so the answer is `false` without
/// iterating. Elsewhere an iterate with `|z| > max(2, |c|)` is searched for
/// within `budget` steps.
pub fn escapes_with_budget(c: &BigRational, budget: usize) -> Result<bool> {
    if *c >= q(-2, 1) && *c <= q(1, 4) {
        return Ok(false);
    }
    match numeric::escape_step(c, budget, ESCAPE_DIGITS) {
        Some(_) => Ok(true),
        None => Err(Error::Unresolved(budget as u32)),
    }
}

pub fn escapes(c: &BigRational) -> Result<bool> {
    escapes_with_budget(c, ESCAPE_BUDGET)
}

/// Qualitative behaviour of the critical orbit for real rational `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RealBehavior {
    EscapesToInfinity,
    AttractingFixedPoint,
    AttractingTwoCycle,
    /// Cycle of the given period whose multiplier is a primitive root of
    /// unity of the given order.
    ParabolicLandmark { period: u32, multiplier_order: u32 },
    PostcriticallyFinite { preperiod: u32, period: u32 },
    CoreBoundedUnresolved,
}

/// Known parabolic parameters with a rational value.
pub fn parabolic_landmarks() -> Vec<(BigRational, u32, u32)> {
    vec![(q(1, 4), 1, 1), (q(-3, 4), 1, 2), (q(-5, 4), 2, 2), (q(-7, 4), 3, 1)]
}

/// Decided by exact comparisons. Checks run in the order escape, PCF,
/// parabolic landmark, attracting fixed point, attracting 2-cycle.
pub fn real_behavior(c: &BigRational) -> RealBehavior {
    if *c < q(-2, 1) || *c > q(1, 4) {
        return RealBehavior::EscapesToInfinity;
    }
    if let Some(o) = is_pcf_rational(c) {
        return RealBehavior::PostcriticallyFinite { preperiod: o.preperiod, period: o.period };
    }
    for (l, period, multiplier_order) in parabolic_landmarks() {
        if *c == l {
            return RealBehavior::ParabolicLandmark { period, multiplier_order };
        }
    }
    // fixed point multiplier 1 − √(1 − 4c): modulus < 1 iff 0 < 1 − 4c < 4
    let disc = BigRational::one() - c * q(4, 1);
    if disc.is_positive() && disc < q(4, 1) {
        return RealBehavior::AttractingFixedPoint;
    }
    // 2-cycle roots of z² + z + c + 1, multiplier 4(c + 1)
    let lambda2 = (c + BigRational::one()) * q(4, 1);
    if lambda2.abs() < BigRational::one() {
        return RealBehavior::AttractingTwoCycle;
    }
    RealBehavior::CoreBoundedUnresolved
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParabolicVerdict {
    Parabolic(u32),
    NotUpToBound(u32),
}

/// Least `n ≤ nmax` with `P_n(4c) = 0`.
pub fn is_parabolic_up_to(c: &RealAlgebraic, nmax: u32) -> Result<ParabolicVerdict> {
    if nmax > DISCRIMINANT_HARD_CAP {
        return Err(Error::CapExceeded { n: nmax, cap: DISCRIMINANT_HARD_CAP });
    }
    let b = affine_transform(c, &q(4, 1), &BigRational::zero())?;
    for n in 1..=nmax {
        let p = discriminant_pn_with_cap(n, nmax.max(DISCRIMINANT_CAP))?;
        if sign_at(&p, &b)? == Ordering::Equal {
            return Ok(ParabolicVerdict::Parabolic(n));
        }
    }
    Ok(ParabolicVerdict::NotUpToBound(nmax))
}
