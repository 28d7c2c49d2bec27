//! Sturm sequences, real-root counting and isolation, gcd and squarefree parts.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntegerPoly, RationalInterval, RationalPoly};
use crate::error::{Error, Result};

/// Sign of `p(x)` computed exactly.
pub fn sign_at_rational(p: &IntegerPoly, x: &BigRational) -> Ordering {
    p.eval_homogeneous(x).cmp(&BigInt::zero())
}

/// Primitive-PRS gcd over ℤ, normalised to positive leading coefficient.
fn integer_gcd(a: &IntegerPoly, b: &IntegerPoly) -> IntegerPoly {
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive_part();
        a = b;
        b = r;
    }
    a
}

/// Monic gcd over ℚ. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &RationalPoly, b: &RationalPoly) -> RationalPoly {
    let g = integer_gcd(&a.primitive(), &b.primitive());
    g.to_rational().monic()
}

/// `p / gcd(p, p′)`, made monic.
pub fn squarefree_part(p: &RationalPoly) -> Result<RationalPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = poly_gcd(p, &p.derivative());
    Ok(p.div_exact(&g)?.monic())
}

fn integer_squarefree(p: &IntegerPoly) -> IntegerPoly {
    let g = integer_gcd(p, &p.derivative());
    if g.is_constant() {
        return p.primitive_part();
    }
    p.to_rational()
        .div_exact(&g.to_rational())
        .expect("gcd divides p")
        .primitive()
}

/// Sturm sequence of `p` with each remainder replaced by its primitive part.
///
/// Signs are tracked so that every entry is a positive multiple of the
/// classical negated Euclidean remainder.
pub fn sturm_sequence(p: &IntegerPoly) -> Vec<IntegerPoly> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut seq = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let prem = a.pseudo_rem(b);
        if prem.is_zero() {
            break;
        }
        // prem = lc(b)^(delta+1) · rem; we want a positive multiple of -rem.
        let lb_negative = b.lc().unwrap().is_negative();
        let factor_negative = lb_negative && delta % 2 == 0;
        let next = if factor_negative { prem } else { -prem };
        let content = next.content();
        seq.push(next.div_scalar_exact(&content).expect("content divides"));
    }
    seq
}

fn variations(seq: &[IntegerPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = Ordering::Equal;
    for s in seq {
        let sg = sign_at_rational(s, x);
        if sg == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && sg != last {
            count += 1;
        }
        last = sg;
    }
    count
}

/// Distinct real roots of `p` (integer form) in `iv`.
pub(crate) fn count_roots_integer(p: &IntegerPoly, iv: &RationalInterval) -> usize {
    let sf = integer_squarefree(p);
    if sf.is_constant() {
        return 0;
    }
    let seq = sturm_sequence(&sf);
    // V(lo) - V(hi) counts the roots in (lo, hi].
    let mut n = variations(&seq, &iv.lo) - variations(&seq, &iv.hi);
    if iv.is_point() {
        return usize::from(sign_at_rational(&sf, &iv.lo) == Ordering::Equal);
    }
    if !iv.lo_strict && sign_at_rational(&sf, &iv.lo) == Ordering::Equal {
        n += 1;
    }
    if iv.hi_strict && sign_at_rational(&sf, &iv.hi) == Ordering::Equal {
        n -= 1;
    }
    n
}

/// Number of distinct real roots of `p` in `iv`, endpoint strictness respected.
pub fn sturm_count(p: &RationalPoly, iv: &RationalInterval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(count_roots_integer(&p.primitive(), iv))
}

/// Cauchy bound `1 + max|aᵢ| / |lead|`; every complex root has smaller modulus.
pub fn cauchy_bound(p: &IntegerPoly) -> BigRational {
    let lead = p.lc().map(|l| l.abs()).unwrap_or_else(BigInt::one);
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len().saturating_sub(1))
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    BigRational::one() + BigRational::new(max, lead)
}

/// Number of distinct real roots of `p` on the whole line.
pub fn count_real_roots(p: &IntegerPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let b = cauchy_bound(p);
    Ok(count_roots_integer(p, &RationalInterval::symmetric(b)))
}

/// Disjoint intervals each holding exactly one real root, in increasing order.
///
/// Intervals are half-open `(a, b]` of width at most 1 from the bisection
/// tree, except for roots hit exactly by a bisection point, which come back
/// as `[r, r]`.
pub fn isolate_real_roots(p: &RationalPoly) -> Result<Vec<RationalInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = integer_squarefree(&p.primitive());
    if sf.is_constant() {
        return Ok(Vec::new());
    }
    let seq = sturm_sequence(&sf);
    let b = cauchy_bound(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    // (lo, hi] with V(lo) - V(hi) roots; process left to right.
    while let Some((lo, hi)) = stack.pop() {
        let n = variations(&seq, &lo) - variations(&seq, &hi);
        match n {
            0 => {}
            1 if hi.clone() - lo.clone() > BigRational::one() => {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
            1 => {
                if sign_at_rational(&sf, &hi) == Ordering::Equal {
                    out.push(RationalInterval::point(hi));
                } else {
                    out.push(RationalInterval::open_closed(lo, hi)?);
                }
            }
            _ => {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sturm_count_examples() {
        let p = RationalPoly::from_i64(&[-2, 0, 1]);
        let iv = RationalInterval::closed(q(0, 1), q(2, 1)).unwrap();
        assert_eq!(sturm_count(&p, &iv).unwrap(), 1);

        // 16x^2+52x+41: roots (−13±√5)/8 ≈ −1.9045, −1.3455
        let p = RationalPoly::from_i64(&[41, 52, 16]);
        let iv = RationalInterval::closed_open(q(-2, 1), q(-5, 4)).unwrap();
        assert_eq!(sturm_count(&p, &iv).unwrap(), 2);

        let p = RationalPoly::from_i64(&[1, 0, 1]);
        let iv = RationalInterval::closed(q(-10, 1), q(10, 1)).unwrap();
        assert_eq!(sturm_count(&p, &iv).unwrap(), 0);
    }

    #[test]
    fn endpoint_roots() {
        // roots 0 and 1
        let p = RationalPoly::from_i64(&[0, -1, 1]);
        let closed = RationalInterval::closed(q(0, 1), q(1, 1)).unwrap();
        let open = RationalInterval::open(q(0, 1), q(1, 1)).unwrap();
        let co = RationalInterval::closed_open(q(0, 1), q(1, 1)).unwrap();
        assert_eq!(sturm_count(&p, &closed).unwrap(), 2);
        assert_eq!(sturm_count(&p, &open).unwrap(), 0);
        assert_eq!(sturm_count(&p, &co).unwrap(), 1);
        assert_eq!(sturm_count(&p, &RationalInterval::point(q(1, 1))).unwrap(), 1);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x-1)^2 (x+2)
        let p = RationalPoly::from_i64(&[2, -3, 0, 1]);
        let iv = RationalInterval::closed(q(-5, 1), q(5, 1)).unwrap();
        assert_eq!(sturm_count(&p, &iv).unwrap(), 2);
    }

    #[test]
    fn squarefree_examples() {
        let p = RationalPoly::from_i64(&[0, 0, 0, 1]);
        assert_eq!(squarefree_part(&p).unwrap(), RationalPoly::from_i64(&[0, 1]));
        let p = RationalPoly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(squarefree_part(&p).unwrap(), RationalPoly::from_i64(&[-2, 1, 1]));
        assert_eq!(squarefree_part(&RationalPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn isolation_examples() {
        let p = RationalPoly::from_i64(&[-2, 0, 1]);
        let ivs = isolate_real_roots(&p).unwrap();
        assert_eq!(ivs.len(), 2);
        let root = 2f64.sqrt();
        for (iv, r) in ivs.iter().zip([-root, root]) {
            let lo: f64 = num_traits::ToPrimitive::to_f64(&iv.lo).unwrap();
            let hi: f64 = num_traits::ToPrimitive::to_f64(&iv.hi).unwrap();
            assert!(lo < r && r <= hi && hi - lo <= 1.0);
        }
        assert!(ivs[0].hi <= ivs[1].lo);

        let p = RationalPoly::from_i64(&[-5, 1]);
        let ivs = isolate_real_roots(&p).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&q(5, 1)));

        let p = RationalPoly::from_i64(&[-1, 4, 4]);
        let ivs = isolate_real_roots(&p).unwrap();
        assert_eq!(ivs.len(), 2);
        let r1 = (-1.0 - 2f64.sqrt()) / 2.0;
        let r2 = (-1.0 + 2f64.sqrt()) / 2.0;
        for (iv, r) in ivs.iter().zip([r1, r2]) {
            let lo: f64 = num_traits::ToPrimitive::to_f64(&iv.lo).unwrap();
            let hi: f64 = num_traits::ToPrimitive::to_f64(&iv.hi).unwrap();
            assert!(lo <= r && r <= hi);
        }
    }

    #[test]
    fn gcd_basic() {
        let a = RationalPoly::from_i64(&[-1, 0, 1]);
        let b = RationalPoly::from_i64(&[1, 2, 1]);
        assert_eq!(poly_gcd(&a, &b), RationalPoly::from_i64(&[1, 1]));
    }
}
