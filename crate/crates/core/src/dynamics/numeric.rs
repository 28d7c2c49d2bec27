//! Fixed-point interval arithmetic and certified attracting cycles.
//!
//! Reals are stored as integers at scale `10^digits`. Every interval
//! operation rounds its lower end down and its upper end up, so the true
//! value always lies inside the stored interval.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebraic::RealAlgebraic;
use crate::error::{Error, Result};
use crate::polyring::RationalInterval;

/// Maximum period accepted by [`find_attracting_cycle_numeric`].
pub const NUMERIC_PERIOD_CAP: u32 = 8;
/// Default working precision in decimal digits.
pub const DEFAULT_PRECISION: u32 = 64;
/// Iterations of the critical orbit before giving up on convergence.
pub const CYCLE_ITERATION_BUDGET: usize = 20_000;

#[derive(Clone, Debug)]
struct Scale {
    s: BigInt,
}

impl Scale {
    fn new(digits: u32) -> Self {
        Scale { s: num_traits::pow(BigInt::from(10), digits as usize) }
    }

    fn floor(&self, q: &BigRational) -> BigInt {
        (q * BigRational::from_integer(self.s.clone())).floor().to_integer()
    }

    fn ceil(&self, q: &BigRational) -> BigInt {
        (q * BigRational::from_integer(self.s.clone())).ceil().to_integer()
    }

    fn to_rational(&self, u: &BigInt) -> BigRational {
        BigRational::new(u.clone(), self.s.clone())
    }

    fn div_floor(&self, x: &BigInt) -> BigInt {
        x.div_floor(&self.s)
    }

    fn div_ceil(&self, x: &BigInt) -> BigInt {
        -((-x).div_floor(&self.s))
    }

    fn to_f64(&self, u: &BigInt) -> f64 {
        self.to_rational(u).to_f64().unwrap_or(f64::NAN)
    }
}

#[derive(Clone, Debug, PartialEq)]
struct Iv {
    lo: BigInt,
    hi: BigInt,
}

impl Iv {
    fn new(lo: BigInt, hi: BigInt) -> Self {
        debug_assert!(lo <= hi);
        Iv { lo, hi }
    }

    fn add(&self, o: &Iv) -> Iv {
        Iv::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    fn mul(&self, o: &Iv, sc: &Scale) -> Iv {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let min = p.iter().min().unwrap();
        let max = p.iter().max().unwrap();
        Iv::new(sc.div_floor(min), sc.div_ceil(max))
    }

    fn sqr(&self, sc: &Scale) -> Iv {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.lo.is_negative() && self.hi.is_positive() {
            Iv::new(BigInt::zero(), sc.div_ceil(&a.max(b)))
        } else if self.lo.is_negative() || self.hi.is_negative() {
            Iv::new(sc.div_floor(&b), sc.div_ceil(&a))
        } else {
            Iv::new(sc.div_floor(&a), sc.div_ceil(&b))
        }
    }

    fn scale_int(&self, k: i64) -> Iv {
        let k = BigInt::from(k);
        if k.is_negative() {
            Iv::new(&self.hi * &k, &self.lo * &k)
        } else {
            Iv::new(&self.lo * &k, &self.hi * &k)
        }
    }

    fn mag(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    fn mig(&self) -> BigInt {
        if self.lo.is_positive() {
            self.lo.clone()
        } else if self.hi.is_negative() {
            -&self.hi
        } else {
            BigInt::zero()
        }
    }

    fn inside_interior_of(&self, o: &Iv) -> bool {
        o.lo < self.lo && self.hi < o.hi
    }

    fn disjoint(&self, o: &Iv) -> bool {
        self.hi < o.lo || o.hi < self.lo
    }

    fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }
}

/// Steps until the critical orbit of a rational `c` provably leaves
/// `|z| ≤ max(2, |c|)`, tracked with outward-rounded intervals.
///
/// `None` when the budget runs out or the enclosure grows wider than 1.
pub(crate) fn escape_step(c: &BigRational, budget: usize, digits: u32) -> Option<usize> {
    let sc = Scale::new(digits);
    let cc = Iv::new(sc.floor(c), sc.ceil(c));
    let two = BigRational::from_integer(2.into());
    let radius = if c.abs() > two { c.abs() } else { two };
    let bound = sc.ceil(&radius);
    let mut z = Iv::new(BigInt::zero(), BigInt::zero());
    for k in 1..=budget {
        z = z.sqr(&sc).add(&cc);
        if z.mig() > bound {
            return Some(k);
        }
        if z.width() > sc.s {
            return None;
        }
    }
    None
}

/// Result of [`find_attracting_cycle_numeric`].
#[derive(Clone, Debug)]
pub struct NumericCycle {
    pub period: u32,
    pub digits: u32,
    /// Approximate cycle points, starting from the one nearest the orbit
    /// position where convergence was detected.
    pub points: Vec<f64>,
    pub multiplier_estimate: f64,
    /// Certified enclosure of the multiplier.
    pub multiplier_enclosure: RationalInterval,
    /// Certified upper bound on `|λ|`, always `< 1`.
    pub modulus_bound: BigRational,
    /// Half-width of the box proven to contain a cycle point.
    pub radius: BigRational,
}

enum Attempt {
    Certified(Iv, Vec<Iv>),
    NotContracting(BigInt),
    Overlap,
}

fn try_box(z: &BigInt, r: &BigInt, cc: &Iv, n: usize, sc: &Scale) -> Attempt {
    let b0 = Iv::new(z - r, z + r);
    let mut orbit = vec![b0.clone()];
    let mut cur = b0.clone();
    for _ in 1..n {
        cur = cur.sqr(sc).add(cc);
        orbit.push(cur.clone());
    }
    let image = cur.sqr(sc).add(cc);
    let mut lambda = Iv::new(sc.s.clone(), sc.s.clone());
    for b in &orbit {
        lambda = lambda.mul(&b.scale_int(2), sc);
    }
    let contained = image.inside_interior_of(&b0);
    let contracting = lambda.mag() < sc.s;
    if contained && contracting {
        if orbit[1..].iter().any(|b| !b.disjoint(&b0)) {
            return Attempt::Overlap;
        }
        return Attempt::Certified(lambda, orbit);
    }
    Attempt::NotContracting(lambda.mag())
}

/// Locate and certify an attracting cycle of exact period `n` for `f_c`.
///
/// The critical orbit is iterated at `digits` decimal digits until it
/// repeats with period `n` to half the working precision. A box around the
/// last iterate is then pushed once around the cycle with interval
/// arithmetic. Success means the box maps strictly inside itself, its first
/// `n − 1` images avoid it, and the interval product `∏ 2Bᵢ` has modulus
/// below 1; the contraction principle then gives an attracting cycle of
/// exact period `n` whose multiplier lies in the returned enclosure.
pub fn find_attracting_cycle_numeric(c: &RealAlgebraic, n: u32, digits: u32) -> Result<NumericCycle> {
    if n == 0 {
        return Err(Error::InvalidParameter("period must be positive".into()));
    }
    if n > NUMERIC_PERIOD_CAP {
        return Err(Error::CapExceeded { n, cap: NUMERIC_PERIOD_CAP });
    }
    if digits < 2 {
        return Err(Error::InvalidParameter("precision must be at least 2 digits".into()));
    }
    let sc = Scale::new(digits);
    let width = BigRational::new(BigInt::one(), sc.s.clone());
    let cr = c.refined_to(&width);
    let iso = cr.isolation();
    let cc = Iv::new(sc.floor(&iso.lo), sc.ceil(&iso.hi));
    let cmid = sc.floor(&iso.midpoint());

    let n = n as usize;
    let tol = num_traits::pow(BigInt::from(10), (digits / 2) as usize);
    let escape = &sc.s * BigInt::from(3);
    let mut hist: Vec<BigInt> = vec![BigInt::zero()];
    let mut converged = false;
    for _ in 0..CYCLE_ITERATION_BUDGET {
        let z = hist.last().unwrap();
        let next = sc.div_floor(&(z * z)) + &cmid;
        if next.abs() > escape {
            return Err(Error::NoConvergence(CYCLE_ITERATION_BUDGET as u32));
        }
        hist.push(next);
        let k = hist.len() - 1;
        if k >= n && (&hist[k] - &hist[k - n]).abs() <= tol {
            converged = true;
            break;
        }
        if hist.len() > 2 * n {
            hist.remove(0);
        }
    }
    if !converged {
        return Err(Error::NoConvergence(CYCLE_ITERATION_BUDGET as u32));
    }
    let zstar = hist.last().unwrap().clone();

    let mut best: Option<BigInt> = None;
    let mut overlap = false;
    let mut r = tol.clone();
    let quarter = &sc.s / BigInt::from(4);
    while r <= quarter {
        match try_box(&zstar, &r, &cc, n, &sc) {
            Attempt::Certified(lambda, orbit) => {
                let mut points = Vec::with_capacity(n);
                let mut z = zstar.clone();
                let mut est = 1.0;
                for _ in 0..n {
                    points.push(sc.to_f64(&z));
                    est *= 2.0 * sc.to_f64(&z);
                    z = sc.div_floor(&(&z * &z)) + &cmid;
                }
                debug_assert_eq!(orbit.len(), n);
                return Ok(NumericCycle {
                    period: n as u32,
                    digits,
                    points,
                    multiplier_estimate: est,
                    multiplier_enclosure: RationalInterval::closed(
                        sc.to_rational(&lambda.lo),
                        sc.to_rational(&lambda.hi),
                    )?,
                    modulus_bound: sc.to_rational(&lambda.mag()),
                    radius: sc.to_rational(&r),
                });
            }
            Attempt::Overlap => overlap = true,
            Attempt::NotContracting(m) => {
                if best.as_ref().is_none_or(|b| m < *b) {
                    best = Some(m);
                }
            }
        }
        r *= BigInt::from(10);
    }
    if overlap {
        return Err(Error::PeriodMismatch(n as u32));
    }
    let detail = match best {
        Some(m) => format!(
            "|λ| bound {:.6} at {} digits does not certify a contraction",
            sc.to_f64(&m),
            digits
        ),
        None => format!("no contracting box at {digits} digits"),
    };
    Err(Error::PrecisionInsufficient(detail))
}
