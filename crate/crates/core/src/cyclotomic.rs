//! Cyclotomic and trace polynomials, and the Kronecker-style decision of
//! whether an integer polynomial is a product of cyclotomic factors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{sturm_count, IntegerPoly, RationalInterval};

/// Largest order probed by [`admissible_orders`] when no earlier stopping
/// point exists (e.g. `t = 1`).
pub const DEFAULT_ORDER_CAP: u64 = 64;

/// Sorted, duplicate-free set of orders.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OrderSet {
    orders: Vec<u64>,
}

impl OrderSet {
    pub fn new(mut orders: Vec<u64>) -> Self {
        orders.sort_unstable();
        orders.dedup();
        OrderSet { orders }
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.orders
    }

    pub fn contains(&self, n: u64) -> bool {
        self.orders.binary_search(&n).is_ok()
    }

    pub fn is_subset_of(&self, other: &OrderSet) -> bool {
        self.orders.iter().all(|&n| other.contains(n))
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }
}

impl<'a> IntoIterator for &'a OrderSet {
    type Item = &'a u64;
    type IntoIter = std::slice::Iter<'a, u64>;
    fn into_iter(self) -> Self::IntoIter {
        self.orders.iter()
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(*d)).collect();
    let mirrored: Vec<u64> = out.iter().rev().map(|d| n / d).filter(|&d| d * d != n).collect();
    out.extend(mirrored);
    out
}

/// Euler's totient.
///
/// # Panics
/// If `n == 0`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Möbius function.
///
/// # Panics
/// If `n == 0`.
pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn x_pow_minus_one(d: u64) -> IntegerPoly {
    let mut c = vec![BigInt::zero(); d as usize + 1];
    c[0] = -BigInt::one();
    c[d as usize] = BigInt::one();
    IntegerPoly::new(c)
}

/// `Φ_n = ∏_{d | n} (x^d − 1)^{μ(n/d)}`.
pub fn cyclotomic_poly(n: u64) -> IntegerPoly {
    assert!(n >= 1, "cyclotomic_poly is defined for n >= 1");
    let mut num = IntegerPoly::one();
    let mut den = IntegerPoly::one();
    for d in divisors(n) {
        match moebius(n / d) {
            1 => num = &num * &x_pow_minus_one(d),
            -1 => den = &den * &x_pow_minus_one(d),
            _ => {}
        }
    }
    num.div_exact(&den).expect("cyclotomic product is a polynomial")
}

/// `x^k + x^{-k}` as a polynomial in `b = x + 1/x`, for `k = 0..=m`.
fn chebyshev_table(m: usize) -> Vec<IntegerPoly> {
    let mut table = vec![IntegerPoly::from_i64(&[2]), IntegerPoly::x()];
    while table.len() <= m {
        let k = table.len();
        let next = &(&IntegerPoly::x() * &table[k - 1]) - &table[k - 2];
        table.push(next);
    }
    table.truncate(m + 1);
    table
}

/// Minimal polynomial of `2cos(2πk/n)` over primitive `k`: the image of
/// `Φ_n` under `b = x + 1/x`, with `T_1 = b − 2`, `T_2 = b + 2`.
pub fn trace_polynomial(n: u64) -> IntegerPoly {
    assert!(n >= 1, "trace_polynomial is defined for n >= 1");
    match n {
        1 => return IntegerPoly::from_i64(&[-2, 1]),
        2 => return IntegerPoly::from_i64(&[2, 1]),
        _ => {}
    }
    let phi = cyclotomic_poly(n);
    let m = phi.degree().unwrap() / 2;
    let table = chebyshev_table(m);
    // x^{-m} Φ_n(x) = a_m + Σ_{k≥1} a_{m+k} (x^k + x^{-k}) by palindromy.
    let mut out = IntegerPoly::constant(phi.coeff(m));
    for (k, cheb) in table.iter().enumerate().skip(1) {
        out = &out + &cheb.scale(&phi.coeff(m + k));
    }
    out
}

/// All `n` with `φ(n) ≤ d`. Uses `φ(n) ≥ √(n/2)`, so `n ≤ 2d²`.
pub fn inverse_totient_upto(d: u64) -> OrderSet {
    assert!(d >= 1, "inverse_totient_upto needs d >= 1");
    OrderSet::new((1..=2 * d * d).filter(|&n| euler_phi(n) <= d).collect())
}

/// Result of the trial-division Kronecker test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclotomicDecision {
    /// Product of the listed `Φ_n` (with multiplicity, ascending).
    Product(Vec<u64>),
    NotCyclotomic,
}

impl CyclotomicDecision {
    pub fn is_product(&self) -> bool {
        matches!(self, CyclotomicDecision::Product(_))
    }
}

/// Decide whether a monic integer polynomial is a product of cyclotomic
/// polynomials by repeated exact division by every `Φ_n` with `φ(n) ≤ deg p`.
pub fn is_cyclotomic_product(p: &IntegerPoly) -> Result<CyclotomicDecision> {
    let deg = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    if !p.lc().unwrap().is_one() {
        return Err(Error::NotMonic);
    }
    let candidates: Vec<(u64, IntegerPoly)> = inverse_totient_upto(deg as u64)
        .as_slice()
        .iter()
        .map(|&n| (n, cyclotomic_poly(n)))
        .collect();
    let mut rest = p.clone();
    let mut orders = Vec::new();
    for (n, phi) in &candidates {
        while rest.degree().unwrap() >= phi.degree().unwrap() {
            match rest.div_exact(phi) {
                Ok(q) => {
                    orders.push(*n);
                    rest = q;
                }
                Err(_) => break,
            }
        }
    }
    if rest.is_one() {
        Ok(CyclotomicDecision::Product(orders))
    } else {
        Ok(CyclotomicDecision::NotCyclotomic)
    }
}

/// Orders `n` for which every root of `T_n` is `< 2t` (strict) or `≤ 2t`.
///
/// Stops at the first `n ≥ 3` whose largest root `2cos(2π/n)` exceeds `2t`;
/// since that root increases with `n`, no later order qualifies. Otherwise
/// the scan ends at `cap`.
pub fn admissible_orders_with_cap(t: &BigRational, strict: bool, cap: u64) -> Result<OrderSet> {
    if *t > BigRational::one() {
        return Err(Error::InvalidThreshold(crate::polyring::format_rational(t)));
    }
    let two = BigRational::from_integer(2.into());
    let bound = t * &two;
    let forbidden = if strict {
        RationalInterval::closed(bound.clone(), two.clone())?
    } else if bound == two {
        // (2, 2] is empty: nothing is forbidden.
        RationalInterval::point(BigRational::from_integer(3.into()))
    } else {
        RationalInterval::open_closed(bound.clone(), two.clone())?
    };
    let beyond = if bound >= two {
        None
    } else {
        Some(RationalInterval::open_closed(bound, two)?)
    };

    let mut orders = Vec::new();
    for n in 1..=cap {
        let tn = trace_polynomial(n).to_rational();
        if sturm_count(&tn, &forbidden)? == 0 {
            orders.push(n);
        }
        if n >= 3 {
            if let Some(beyond) = &beyond {
                if sturm_count(&tn, beyond)? > 0 {
                    break;
                }
            }
        }
    }
    Ok(OrderSet::new(orders))
}

pub fn admissible_orders(t: &BigRational, strict: bool) -> Result<OrderSet> {
    admissible_orders_with_cap(t, strict, DEFAULT_ORDER_CAP)
}
