//! Resultants and discriminants.
//!
//! Two independent routes are provided. [`resultant`] runs the subresultant
//! PRS and only needs exact division in the coefficient ring, so it works
//! over ℤ, ℚ and ℤ[c] alike. [`resultant_field`] runs the plain Euclidean
//! recurrence over a field. The bivariate discriminant can additionally be
//! reconstructed by evaluation at integer parameters followed by exact
//! interpolation, which only touches the field route.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, IntegerPoly, IteratedMapPoly, Poly, RationalPoly, Ring};
use crate::error::{Error, Result};

fn odd(n: usize) -> bool {
    n % 2 == 1
}

/// Resultant with the convention `res(p, q) = lc(p)^deg q · ∏ q(αᵢ)`.
pub fn resultant<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Result<R> {
    let (dp, dq) = match (p.degree(), q.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial),
    };
    if dq == 0 {
        return Ok(q.coeff(0).pow_usize(dp));
    }
    if dp == 0 {
        return Ok(p.coeff(0).pow_usize(dq));
    }

    let mut negate = false;
    let (mut a, mut b) = if dp < dq {
        negate = odd(dp) && odd(dq);
        (q.clone(), p.clone())
    } else {
        (p.clone(), q.clone())
    };
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if odd(da) && odd(db) {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(R::zero());
        }
        a = b;
        let divisor = g.mul_ref(&h.pow_usize(delta));
        b = r.div_scalar_exact(&divisor)?;
        g = a.lc().unwrap().clone();
        if delta > 0 {
            h = g
                .pow_usize(delta)
                .div_exact(&h.pow_usize(delta - 1))
                .ok_or(Error::NotDivisible)?;
        }
        if b.degree() == Some(0) {
            let da = a.degree().unwrap();
            let res = b
                .coeff(0)
                .pow_usize(da)
                .div_exact(&h.pow_usize(da - 1))
                .ok_or(Error::NotDivisible)?;
            return Ok(if negate { -res } else { res });
        }
    }
}

/// Resultant over a field via the Euclidean remainder sequence.
pub fn resultant_field<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Result<F> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut acc = F::one();
    let (mut a, mut b) = (p.clone(), q.clone());
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if db == 0 {
            return Ok(acc.mul_ref(&b.coeff(0).pow_usize(da)));
        }
        let (_, r) = a.div_rem(&b)?;
        let Some(dr) = r.degree() else {
            return Ok(F::zero());
        };
        if odd(da) && odd(db) {
            acc = -acc;
        }
        acc = acc.mul_ref(&b.lc().unwrap().pow_usize(da - dr));
        a = b;
        b = r;
    }
}

fn disc_from_res<R: Ring>(p: &Poly<R>, res: R) -> Result<R> {
    let d = p.degree().unwrap();
    let signed = if (d * (d - 1) / 2) % 2 == 1 { -res } else { res };
    signed.div_exact(p.lc().unwrap()).ok_or(Error::NotDivisible)
}

fn check_nonconstant<R: Ring>(p: &Poly<R>) -> Result<()> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(()),
    }
}

/// `disc(p) = (−1)^(d(d−1)/2) res(p, p′) / lc(p)` through the subresultant PRS.
pub fn discriminant<R: Ring>(p: &Poly<R>) -> Result<R> {
    check_nonconstant(p)?;
    let res = resultant(p, &p.derivative())?;
    disc_from_res(p, res)
}

/// Discriminant through the Euclidean resultant.
pub fn discriminant_field<F: Field>(p: &Poly<F>) -> Result<F> {
    check_nonconstant(p)?;
    let res = resultant_field(p, &p.derivative())?;
    disc_from_res(p, res)
}

/// Resultant in `z` of two polynomials over ℤ[c]; the result is a polynomial in `c`.
pub fn resultant_in_z(p: &IteratedMapPoly, q: &IteratedMapPoly) -> Result<IntegerPoly> {
    resultant(p, q)
}

/// Discriminant in `z` over ℤ[c] by subresultant PRS.
pub fn discriminant_in_z(p: &IteratedMapPoly) -> Result<IntegerPoly> {
    discriminant(p)
}

/// Sample points `0, 1, −1, 2, −2, …`
fn sample_points(count: usize) -> impl Iterator<Item = BigInt> {
    (0..count).map(|i| {
        let k = (i as i64 + 1) / 2;
        BigInt::from(if i % 2 == 1 { k } else { -k })
    })
}

/// Discriminant in `z` over ℤ[c] rebuilt from `degree_bound + 1` exact
/// rational discriminants at integer values of `c`, then Newton interpolation.
pub fn discriminant_in_z_interpolated(
    p: &IteratedMapPoly,
    degree_bound: usize,
) -> Result<IntegerPoly> {
    check_nonconstant(p)?;
    let nodes: Vec<BigRational> = sample_points(degree_bound + 1)
        .map(BigRational::from_integer)
        .collect();
    let values = nodes
        .iter()
        .map(|c| discriminant_field(&p.at_rational(c)))
        .collect::<Result<Vec<_>>>()?;
    let interp = newton_interpolate(&nodes, values);
    interp.to_integer().ok_or(Error::IntegralityViolation {
        power: interp
            .coeffs()
            .iter()
            .position(|c| !c.is_integer())
            .unwrap_or(0),
    })
}

fn newton_interpolate(nodes: &[BigRational], mut table: Vec<BigRational>) -> RationalPoly {
    let n = nodes.len();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&nodes[i] - &nodes[i - level]);
        }
    }
    let mut out = RationalPoly::zero();
    for i in (0..n).rev() {
        let lin = RationalPoly::new(vec![-nodes[i].clone(), BigRational::one()]);
        out = &(&out * &lin) + &RationalPoly::constant(table[i].clone());
    }
    if out.coeffs().iter().all(Zero::is_zero) {
        RationalPoly::zero()
    } else {
        out
    }
}
