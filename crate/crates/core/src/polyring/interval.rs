use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::parse::format_rational;
use crate::error::{Error, Result};

/// An interval with rational endpoints and explicit endpoint strictness.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub lo_strict: bool,
    pub hi_strict: bool,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational, lo_strict: bool, hi_strict: bool) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval(format!(
                "lower end {} exceeds upper end {}",
                format_rational(&lo),
                format_rational(&hi)
            )));
        }
        if lo == hi && (lo_strict || hi_strict) {
            return Err(Error::InvalidInterval(
                "a degenerate interval must be closed".into(),
            ));
        }
        Ok(RationalInterval { lo, hi, lo_strict, hi_strict })
    }

    pub fn closed(lo: BigRational, hi: BigRational) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    pub fn open(lo: BigRational, hi: BigRational) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    /// `[lo, hi)`
    pub fn closed_open(lo: BigRational, hi: BigRational) -> Result<Self> {
        Self::new(lo, hi, false, true)
    }

    /// `(lo, hi]`
    pub fn open_closed(lo: BigRational, hi: BigRational) -> Result<Self> {
        Self::new(lo, hi, true, false)
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval { lo: x.clone(), hi: x, lo_strict: false, hi_strict: false }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        let above = if self.lo_strict { *x > self.lo } else { *x >= self.lo };
        let below = if self.hi_strict { *x < self.hi } else { *x <= self.hi };
        above && below
    }

    /// Every point of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &RationalInterval) -> bool {
        let lo_ok = self.lo > other.lo
            || (self.lo == other.lo && (self.lo_strict || !other.lo_strict));
        let hi_ok = self.hi < other.hi
            || (self.hi == other.hi && (self.hi_strict || !other.hi_strict));
        lo_ok && hi_ok
    }

    /// Image under `x ↦ s·x + t`; orientation and strictness flip when `s < 0`.
    pub fn affine(&self, s: &BigRational, t: &BigRational) -> Result<Self> {
        if s == &BigRational::from_integer(0.into()) {
            return Err(Error::ZeroScale);
        }
        let a = s * &self.lo + t;
        let b = s * &self.hi + t;
        if s.is_positive() {
            Self::new(a, b, self.lo_strict, self.hi_strict)
        } else {
            Self::new(b, a, self.hi_strict, self.lo_strict)
        }
    }

    pub fn intersect(&self, other: &RationalInterval) -> Option<Self> {
        let (lo, lo_strict) = match self.lo.cmp(&other.lo) {
            std::cmp::Ordering::Greater => (self.lo.clone(), self.lo_strict),
            std::cmp::Ordering::Less => (other.lo.clone(), other.lo_strict),
            std::cmp::Ordering::Equal => (self.lo.clone(), self.lo_strict || other.lo_strict),
        };
        let (hi, hi_strict) = match self.hi.cmp(&other.hi) {
            std::cmp::Ordering::Less => (self.hi.clone(), self.hi_strict),
            std::cmp::Ordering::Greater => (other.hi.clone(), other.hi_strict),
            std::cmp::Ordering::Equal => (self.hi.clone(), self.hi_strict || other.hi_strict),
        };
        Self::new(lo, hi, lo_strict, hi_strict).ok()
    }

    /// Symmetric interval `[-b, b]`.
    pub fn symmetric(bound: BigRational) -> Self {
        let b = bound.abs().max(BigRational::one());
        RationalInterval { lo: -b.clone(), hi: b, lo_strict: false, hi_strict: false }
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_strict { '(' } else { '[' },
            format_rational(&self.lo),
            format_rational(&self.hi),
            if self.hi_strict { ')' } else { ']' }
        )
    }
}
