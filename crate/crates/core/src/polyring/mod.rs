//! Dense univariate polynomials over exact coefficient rings.
//!
//! [`Poly`] stores coefficients low-to-high: `coeffs[i]` is the coefficient
//! of `x^i`. The vector is empty for the zero polynomial and otherwise its
//! last entry is nonzero. The same type serves three roles:
//!
//! * [`RationalPoly`]: coefficients in ℚ,
//! * [`IntegerPoly`]: coefficients in ℤ,
//! * [`IteratedMapPoly`]: a polynomial in `z` whose coefficients are
//!   integer polynomials in the parameter `c`.

mod interval;
mod parse;
mod resultant;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use interval::RationalInterval;
pub use parse::{
    format_bivariate, format_poly, format_rational, parse_interval, parse_poly,
    parse_poly_detect, parse_rational,
};
pub use resultant::{
    discriminant, discriminant_field, discriminant_in_z, discriminant_in_z_interpolated,
    resultant, resultant_field, resultant_in_z,
};
pub use sturm::{
    cauchy_bound, count_real_roots, isolate_real_roots, poly_gcd, sign_at_rational,
    squarefree_part, sturm_count, sturm_sequence,
};

/// An integral domain in which exact division can be attempted.
///
/// The `*_ref` methods exist so generic code can avoid cloning big
/// coefficients for every operation.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Exact quotient, or `None` when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn pow_usize(&self, mut k: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Self;
}

impl Ring for BigInt {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Ring for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        self.recip()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

pub type RationalPoly = Poly<BigRational>;
pub type IntegerPoly = Poly<BigInt>;
/// `f(z) = Σ a_i(c) z^i` with each `a_i` in ℤ[c].
pub type IteratedMapPoly = Poly<IntegerPoly>;

impl<R: Ring> Poly<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Poly { coeffs: vec![R::zero(), R::one()] }
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, k: &R) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|c| c.mul_ref(k)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_ref(&small::<R>(i as i64)))
                .collect(),
        )
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Divide every coefficient by `d`, failing if any division is inexact.
    pub fn div_scalar_exact(&self, d: &R) -> Result<Self> {
        self.coeffs
            .iter()
            .map(|c| c.div_exact(d).ok_or(Error::NotDivisible))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// Pseudo-remainder: the `r` in `lc(b)^(deg a - deg b + 1) a = q b + r`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo_rem by the zero polynomial");
        let da = match self.degree() {
            Some(d) if d >= db => d,
            _ => return self.clone(),
        };
        let lb = b.lc().unwrap().clone();
        let mut r = self.coeffs.clone();
        let mut remaining = da - db + 1;
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            let off = top - db;
            for c in r.iter_mut() {
                *c = c.mul_ref(&lb);
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[off + i] = r[off + i].sub_ref(&bc.mul_ref(&lr));
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            remaining -= 1;
        }
        let r = Poly { coeffs: r };
        if remaining > 0 {
            r.scale(&lb.pow_usize(remaining))
        } else {
            r
        }
    }

    /// Exact division; `NotDivisible` if a remainder is left or a leading
    /// coefficient division fails.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let ld = d.lc().unwrap();
        let Some(dn) = self.degree() else {
            return Ok(Self::zero());
        };
        if dn < dd {
            return Err(Error::NotDivisible);
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![R::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let t = top.div_exact(ld).ok_or(Error::NotDivisible)?;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].sub_ref(&dc.mul_ref(&t));
            }
            q[k] = t;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::new(q))
    }
}

fn small<R: Ring>(n: i64) -> R {
    let mut acc = R::zero();
    let unit = if n < 0 { -R::one() } else { R::one() };
    for _ in 0..n.unsigned_abs() {
        acc = acc.add_ref(&unit);
    }
    acc
}

impl<F: Field> Poly<F> {
    /// Euclidean division `self = q d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let inv = d.lc().unwrap().inv();
        let Some(dn) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if dn < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let t = r[k + dd].mul_ref(&inv);
            if t.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].sub_ref(&dc.mul_ref(&t));
            }
            q[k] = t;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            Some(l) => self.scale(&l.inv()),
            None => Self::zero(),
        }
    }
}

impl IntegerPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn to_rational(&self) -> RationalPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Sign-preserving integer evaluation at a rational point:
    /// `q^d p(n/q)` for `x = n/q` with `q > 0`.
    pub fn eval_homogeneous(&self, x: &BigRational) -> BigInt {
        let (n, q) = (x.numer(), x.denom());
        // Horner: acc_k = acc_{k+1} * n + c_k * q^(d-k)
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &qpow;
            qpow = &qpow * q;
        }
        acc
    }
}

impl RationalPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// `(γ, q)` with `self = γ q`, `q` primitive with positive leading
    /// coefficient.
    pub fn content_and_primitive(&self) -> Result<(BigRational, IntegerPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints = IntegerPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
                .collect(),
        );
        let prim = ints.primitive_part();
        let gamma = BigRational::new(ints.lc().unwrap().clone(), den * prim.lc().unwrap());
        Ok((gamma, prim))
    }

    /// Primitive integer form; the zero polynomial maps to zero.
    pub fn primitive(&self) -> IntegerPoly {
        self.content_and_primitive()
            .map(|(_, p)| p)
            .unwrap_or_else(|_| IntegerPoly::zero())
    }

    /// Integer coefficients if every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntegerPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntegerPoly::new)
    }
}

impl IteratedMapPoly {
    /// Specialise the parameter to an integer value.
    pub fn at_integer(&self, c: &BigInt) -> IntegerPoly {
        self.map(|a| a.eval(c))
    }

    /// Specialise the parameter to a rational value.
    pub fn at_rational(&self, c: &BigRational) -> RationalPoly {
        self.map(|a| a.to_rational().eval(c))
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Poly::div_exact(self, rhs).ok()
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add_ref(s);
        }
        Poly::new(coeffs)
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(coeffs)
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Poly::new(coeffs)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$m(&rhs)
            }
        }
        impl<R: Ring> $tr<&Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: &Poly<R>) -> Poly<R> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: fmt::Debug> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self, 'x'))
    }
}

impl fmt::Display for IntegerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.to_rational(), 'x'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn difference_of_squares() {
        let a = RationalPoly::from_i64(&[1, 1]);
        let b = RationalPoly::from_i64(&[-1, 1]);
        assert_eq!(&a * &b, RationalPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn derivative_of_quadratic_map() {
        // z^2 + c with c = 5: derivative is 2z
        let f = IntegerPoly::from_i64(&[5, 0, 1]);
        assert_eq!(f.derivative(), IntegerPoly::from_i64(&[0, 2]));
    }

    #[test]
    fn compose_bivariate_step() {
        // (z^2)∘(z^2 + c) = z^4 + 2c z^2 + c^2
        let c = IntegerPoly::x();
        let step = IteratedMapPoly::new(vec![c.clone(), IntegerPoly::zero(), IntegerPoly::one()]);
        let sq = IteratedMapPoly::monomial(IntegerPoly::one(), 2);
        let out = sq.compose(&step);
        assert_eq!(out.degree(), Some(4));
        assert_eq!(out.coeff(2), IntegerPoly::from_i64(&[0, 2]));
        assert_eq!(out.coeff(0), IntegerPoly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn exact_division() {
        let p = RationalPoly::from_i64(&[-1, 0, 1]);
        let d = RationalPoly::from_i64(&[-1, 1]);
        assert_eq!(p.div_exact(&d).unwrap(), RationalPoly::from_i64(&[1, 1]));
        let p = RationalPoly::from_i64(&[1, 0, 1]);
        assert_eq!(p.div_exact(&d), Err(Error::NotDivisible));
        assert_eq!(p.div_exact(&RationalPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn integer_exact_division_requires_unit_quotients() {
        let p = IntegerPoly::from_i64(&[1, 2]);
        let d = IntegerPoly::from_i64(&[0, 2]);
        assert_eq!(p.div_exact(&d), Err(Error::NotDivisible));
    }

    #[test]
    fn content_and_primitive_examples() {
        let p = RationalPoly::new(vec![q(-1, 4), q(1, 1), q(1, 1)]);
        let (g, prim) = p.content_and_primitive().unwrap();
        assert_eq!(g, q(1, 4));
        assert_eq!(prim, IntegerPoly::from_i64(&[-1, 4, 4]));

        let (g, prim) = RationalPoly::from_i64(&[2, 2]).content_and_primitive().unwrap();
        assert_eq!((g, prim), (q(2, 1), IntegerPoly::from_i64(&[1, 1])));

        let (g, prim) = RationalPoly::from_i64(&[0, -1]).content_and_primitive().unwrap();
        assert_eq!((g, prim), (q(-1, 1), IntegerPoly::from_i64(&[0, 1])));

        assert_eq!(
            RationalPoly::zero().content_and_primitive(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = IntegerPoly::from_i64(&[3, -2, 0, 5, 1]);
        let b = IntegerPoly::from_i64(&[1, 0, 3]);
        let r = a.pseudo_rem(&b);
        // lc(b)^3 a - r must be divisible by b over ℚ
        let lhs = a.scale(&BigInt::from(27)) - r.clone();
        assert!(lhs.to_rational().div_exact(&b.to_rational()).is_ok());
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn homogeneous_eval_matches_rational_eval() {
        let p = IntegerPoly::from_i64(&[-1, -18, 4, 8]);
        let x = q(-3, 7);
        let direct = p.to_rational().eval(&x);
        let hom = p.eval_homogeneous(&x);
        assert_eq!(direct * BigRational::from_integer(BigInt::from(343)), BigRational::from_integer(hom));
    }
}
