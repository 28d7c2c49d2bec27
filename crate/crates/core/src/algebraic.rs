//! Exact real algebraic numbers as (minimal polynomial, isolating interval).
//!
//! Irreducibility of the minimal polynomial is not checked; callers supply
//! irreducible polynomials. Squarefreeness and isolation are checked.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polyring::{
    count_real_roots, format_poly, format_rational, isolate_real_roots, parse_interval,
    parse_poly_detect, parse_rational, poly_gcd, sign_at_rational, sturm_count, IntegerPoly,
    RationalInterval, RationalPoly,
};

/// Bisection budget for [`sign_at`].
pub const SIGN_REFINEMENT_CAP: u32 = 256;

#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    minpoly: IntegerPoly,
    isolation: RationalInterval,
}

fn is_squarefree(p: &IntegerPoly) -> bool {
    let r = p.to_rational();
    poly_gcd(&r, &r.derivative()).is_constant()
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

impl RealAlgebraic {
    /// Validate `p` and `iv`, then refine the interval to width at most 1.
    pub fn new(p: IntegerPoly, iv: RationalInterval) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        if !is_squarefree(&p) {
            return Err(Error::NotSquarefree);
        }
        let minpoly = p.primitive_part();
        let roots = sturm_count(&minpoly.to_rational(), &iv)?;
        if roots != 1 {
            return Err(Error::NotIsolating { roots });
        }
        let mut out = RealAlgebraic { minpoly, isolation: iv };
        while out.isolation.width() > BigRational::one() {
            out = out.bisect();
        }
        Ok(out)
    }

    pub fn from_rational(q: &BigRational) -> Self {
        RealAlgebraic {
            minpoly: IntegerPoly::new(vec![-q.numer().clone(), q.denom().clone()]),
            isolation: RationalInterval::point(q.clone()),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    pub fn minpoly(&self) -> &IntegerPoly {
        &self.minpoly
    }

    pub fn isolation(&self) -> &RationalInterval {
        &self.isolation
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        (self.degree() == 1).then(|| {
            BigRational::new(-self.minpoly.coeff(0), self.minpoly.coeff(1))
        })
    }

    fn root_count(&self, iv: &RationalInterval) -> usize {
        sturm_count(&self.minpoly.to_rational(), iv).expect("minpoly is nonzero")
    }

    /// Halve the isolating interval.
    pub fn bisect(&self) -> Self {
        if self.isolation.is_point() {
            return self.clone();
        }
        let iv = &self.isolation;
        let mid = iv.midpoint();
        if sign_at_rational(&self.minpoly, &mid) == Ordering::Equal {
            return RealAlgebraic {
                minpoly: self.minpoly.clone(),
                isolation: RationalInterval::point(mid),
            };
        }
        let left = RationalInterval::new(iv.lo.clone(), mid.clone(), iv.lo_strict, false)
            .expect("mid above lo");
        let isolation = if self.root_count(&left) == 1 {
            left
        } else {
            RationalInterval::new(mid, iv.hi.clone(), true, iv.hi_strict).expect("mid below hi")
        };
        RealAlgebraic { minpoly: self.minpoly.clone(), isolation }
    }

    pub fn refined_to(&self, width: &BigRational) -> Self {
        let mut out = self.clone();
        while out.isolation.width() > *width {
            out = out.bisect();
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        let w = BigRational::new(1.into(), (1u64 << 60).into());
        let r = self.refined_to(&w);
        r.isolation.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// All real roots of the minimal polynomial, ascending.
    pub fn real_conjugates(&self) -> Vec<RealAlgebraic> {
        isolate_real_roots(&self.minpoly.to_rational())
            .expect("minpoly is nonzero")
            .into_iter()
            .map(|iv| RealAlgebraic { minpoly: self.minpoly.clone(), isolation: iv })
            .collect()
    }

    /// Same number: equal minimal polynomials and a shared root in the
    /// overlap of the isolating intervals.
    pub fn same_number(&self, other: &RealAlgebraic) -> bool {
        if self.minpoly != other.minpoly {
            return false;
        }
        match self.isolation.intersect(&other.isolation) {
            Some(iv) => self.root_count(&iv) == 1,
            None => false,
        }
    }

    /// Exact comparison with a rational number.
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        let x = IntegerPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
        sign_at(&x, self).expect("linear sign always separates")
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.same_number(other)
    }
}

impl Eq for RealAlgebraic {}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => f.write_str(&format_rational(&q)),
            None => write!(f, "{}@{}", format_poly(&self.minpoly.to_rational(), 'x'), self.isolation),
        }
    }
}

impl FromStr for RealAlgebraic {
    type Err = Error;

    /// `p/q` or `minpoly@[lo,hi]`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('@') {
            Some((poly, iv)) => {
                let (p, _) = parse_poly_detect(poly)?;
                let p = p.primitive();
                RealAlgebraic::new(p, parse_interval(iv)?)
            }
            None => Ok(RealAlgebraic::from_rational(&parse_rational(s)?)),
        }
    }
}

pub fn make_real_algebraic(p: IntegerPoly, iv: RationalInterval) -> Result<RealAlgebraic> {
    RealAlgebraic::new(p, iv)
}

pub fn from_rational(q: &BigRational) -> RealAlgebraic {
    RealAlgebraic::from_rational(q)
}

fn check_squarefree(p: &IntegerPoly) -> Result<usize> {
    let d = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    if !is_squarefree(p) {
        return Err(Error::NotSquarefree);
    }
    Ok(d)
}

/// Every complex root of `p` is real.
pub fn is_totally_real(p: &IntegerPoly) -> Result<bool> {
    let d = check_squarefree(p)?;
    Ok(count_real_roots(p)? == d)
}

/// Every complex root of `p` is real and lies in `iv`.
pub fn all_conjugates_in(p: &IntegerPoly, iv: &RationalInterval) -> Result<bool> {
    let d = check_squarefree(p)?;
    Ok(sturm_count(&p.to_rational(), iv)? == d)
}

/// `s·α + t` with minimal polynomial `s^d p((x − t)/s)` made primitive.
pub fn affine_transform(
    alpha: &RealAlgebraic,
    s: &BigRational,
    t: &BigRational,
) -> Result<RealAlgebraic> {
    if s.is_zero() {
        return Err(Error::ZeroScale);
    }
    let inv = s.recip();
    let lin = RationalPoly::new(vec![-(t * &inv), inv]);
    let (_, minpoly) = alpha.minpoly.to_rational().compose(&lin).content_and_primitive()?;
    let isolation = alpha.isolation.affine(s, t)?;
    Ok(RealAlgebraic { minpoly, isolation })
}

/// Exact sign of `p(α)`.
///
/// Zero is decided through `gcd(p, minpoly)`; otherwise the isolating
/// interval is bisected until `p` has no root on its closure.
pub fn sign_at(p: &IntegerPoly, alpha: &RealAlgebraic) -> Result<Ordering> {
    if p.is_zero() {
        return Ok(Ordering::Equal);
    }
    if alpha.isolation.is_point() {
        return Ok(sign_at_rational(p, &alpha.isolation.lo));
    }
    let pr = p.to_rational();
    let g = poly_gcd(&pr, &alpha.minpoly.to_rational());
    if !g.is_constant() && sturm_count(&g, &alpha.isolation)? == 1 {
        return Ok(Ordering::Equal);
    }
    let mut cur = alpha.clone();
    for _ in 0..=SIGN_REFINEMENT_CAP {
        if cur.isolation.is_point() {
            return Ok(sign_at_rational(p, &cur.isolation.lo));
        }
        let hull = RationalInterval::closed(cur.isolation.lo.clone(), cur.isolation.hi.clone())?;
        if sturm_count(&pr, &hull)? == 0 {
            return Ok(sign_at_rational(p, &hull.midpoint()));
        }
        cur = cur.bisect();
    }
    Err(Error::RefinementExhausted(SIGN_REFINEMENT_CAP))
}

/// Decimal approximation with an explicit error radius, for display.
pub fn approximate(alpha: &RealAlgebraic, digits: u32) -> (BigRational, BigRational) {
    let ten = BigRational::from_integer(10.into());
    let mut width = BigRational::one();
    for _ in 0..digits {
        width /= &ten;
    }
    let r = alpha.refined_to(&width);
    (r.isolation.midpoint(), r.isolation.width() * half())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ip(c: &[i64]) -> IntegerPoly {
        IntegerPoly::from_i64(c)
    }

    #[test]
    fn construct_sqrt5() {
        let a = make_real_algebraic(ip(&[-5, 0, 1]), RationalInterval::closed(q(2, 1), q(3, 1)).unwrap())
            .unwrap();
        assert!((a.to_f64() - 5f64.sqrt()).abs() < 1e-12);
        assert!(matches!(
            make_real_algebraic(ip(&[-5, 0, 1]), RationalInterval::closed(q(0, 1), q(1, 1)).unwrap()),
            Err(Error::NotIsolating { roots: 0 })
        ));
        assert!(matches!(
            make_real_algebraic(ip(&[-5, 0, 1]), RationalInterval::closed(q(-3, 1), q(3, 1)).unwrap()),
            Err(Error::NotIsolating { roots: 2 })
        ));
        assert_eq!(
            make_real_algebraic(ip(&[0, 0, 1]), RationalInterval::closed(q(-1, 1), q(1, 1)).unwrap())
                .unwrap_err(),
            Error::NotSquarefree
        );
    }

    #[test]
    fn construct_candidate_parameter() {
        let c = make_real_algebraic(
            ip(&[41, 52, 16]),
            RationalInterval::closed(q(-3, 2), q(-1, 1)).unwrap(),
        )
        .unwrap();
        assert!((c.to_f64() - (5f64.sqrt() - 13.0) / 8.0).abs() < 1e-12);
    }

    #[test]
    fn rational_minpolys() {
        assert_eq!(from_rational(&q(-7, 4)).minpoly(), &ip(&[7, 4]));
        assert_eq!(from_rational(&q(0, 1)).minpoly(), &ip(&[0, 1]));
        assert_eq!(from_rational(&q(1, 4)).minpoly(), &ip(&[-1, 4]));
    }

    #[test]
    fn totally_real_examples() {
        assert!(is_totally_real(&ip(&[41, 52, 16])).unwrap());
        assert!(!is_totally_real(&ip(&[1, 0, 1])).unwrap());
        assert!(is_totally_real(&ip(&[-5, 1])).unwrap());
        assert_eq!(is_totally_real(&ip(&[1, 2, 1])), Err(Error::NotSquarefree));
    }

    #[test]
    fn conjugates_in_intervals() {
        let iv = RationalInterval::closed_open(q(-2, 1), q(-5, 4)).unwrap();
        assert!(all_conjugates_in(&ip(&[41, 52, 16]), &iv).unwrap());
        let iv = RationalInterval::closed_open(q(-2, 1), q(1, 1)).unwrap();
        assert!(all_conjugates_in(&ip(&[-1, 1, 1]), &iv).unwrap());
        let iv = RationalInterval::closed(q(-2, 1), q(0, 1)).unwrap();
        assert!(all_conjugates_in(&ip(&[7, 4]), &iv).unwrap());
        assert!(!all_conjugates_in(&ip(&[-1, 1, 1]), &iv).unwrap());
    }

    #[test]
    fn affine_examples() {
        let c = from_rational(&q(-7, 4));
        let b = affine_transform(&c, &q(4, 1), &q(6, 1)).unwrap();
        assert_eq!(b.as_rational(), Some(q(-1, 1)));

        let c = make_real_algebraic(
            ip(&[41, 52, 16]),
            RationalInterval::closed(q(-3, 2), q(-1, 1)).unwrap(),
        )
        .unwrap();
        let b = affine_transform(&c, &q(4, 1), &q(6, 1)).unwrap();
        assert_eq!(b.minpoly(), &ip(&[-1, 1, 1]));
        assert!((b.to_f64() - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);

        let r5 = make_real_algebraic(ip(&[-5, 0, 1]), RationalInterval::closed(q(2, 1), q(3, 1)).unwrap())
            .unwrap();
        assert_eq!(affine_transform(&r5, &q(1, 1), &q(0, 1)).unwrap(), r5);
        assert_eq!(
            affine_transform(&r5, &q(0, 1), &q(1, 1)).unwrap_err(),
            Error::ZeroScale
        );
    }

    #[test]
    fn sign_examples() {
        let golden = make_real_algebraic(ip(&[-1, 1, 1]), RationalInterval::closed(q(0, 1), q(1, 1)).unwrap())
            .unwrap();
        assert_eq!(sign_at(&ip(&[-1, 1, 1]), &golden).unwrap(), Ordering::Equal);
        // a multiple of the minimal polynomial also vanishes
        assert_eq!(sign_at(&ip(&[-3, 2, 4, 1]), &golden).unwrap(), Ordering::Equal);
        let r5 = make_real_algebraic(ip(&[-5, 0, 1]), RationalInterval::closed(q(2, 1), q(3, 1)).unwrap())
            .unwrap();
        assert_eq!(sign_at(&ip(&[0, 1]), &r5).unwrap(), Ordering::Greater);
        // x - 9/4 at √5 ≈ 2.236 is negative
        assert_eq!(sign_at(&ip(&[-9, 4]), &r5).unwrap(), Ordering::Less);
    }

    #[test]
    fn text_round_trip() {
        let a: RealAlgebraic = "16x^2+52x+41@[-3/2,-1]".parse().unwrap();
        let b: RealAlgebraic = a.to_string().parse().unwrap();
        assert_eq!(a, b);
        let r: RealAlgebraic = "-7/4".parse().unwrap();
        assert_eq!(r.to_string(), "-7/4");
    }

    #[test]
    fn conjugates_of_golden_pair() {
        let c: RealAlgebraic = "16x^2+52x+41@[-3/2,-1]".parse().unwrap();
        let conj = c.real_conjugates();
        assert_eq!(conj.len(), 2);
        assert!(conj[1] == c);
        assert!(conj[0] != c);
    }
}
