//! The discriminant polynomials `P_n(b)` with `disc_z(f_c^n(z) − z) = P_n(4c)`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{period_poly, DISCRIMINANT_CAP, DISCRIMINANT_HARD_CAP};
use crate::error::{Error, Result};
use crate::polyring::{discriminant, discriminant_in_z, discriminant_in_z_interpolated, IntegerPoly};

fn cache() -> &'static Mutex<HashMap<u32, IntegerPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, IntegerPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Substitute `c = b/4` into an integer polynomial in `c`, requiring the
/// result to stay integral.
pub fn substitute_quarter(d: &IntegerPoly) -> Result<IntegerPoly> {
    let four = BigInt::from(4);
    let mut pow = BigInt::one();
    let mut out = Vec::with_capacity(d.coeffs().len());
    for (k, a) in d.coeffs().iter().enumerate() {
        let (q, r) = a.div_rem(&pow);
        if !r.is_zero() {
            return Err(Error::IntegralityViolation { power: k });
        }
        out.push(q);
        pow *= &four;
    }
    Ok(IntegerPoly::new(out))
}

fn check_pm_monic(p: &IntegerPoly) -> Result<()> {
    match p.lc() {
        Some(l) if l.abs().is_one() => Ok(()),
        _ => Err(Error::NotMonic),
    }
}

/// `P_n(b)` via the subresultant PRS over ℤ[c]; `n ≤ 5` by default.
pub fn discriminant_pn(n: u32) -> Result<IntegerPoly> {
    discriminant_pn_with_cap(n, DISCRIMINANT_CAP)
}

/// As [`discriminant_pn`] with a raised cap (at most 6). Results are cached.
pub fn discriminant_pn_with_cap(n: u32, cap: u32) -> Result<IntegerPoly> {
    let cap = cap.min(DISCRIMINANT_HARD_CAP);
    if n == 0 || n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return Ok(p.clone());
    }
    let d = discriminant_in_z(&period_poly(n)?)?;
    let p = substitute_quarter(&d)?;
    check_pm_monic(&p)?;
    cache().lock().unwrap().insert(n, p.clone());
    Ok(p)
}

/// A-priori bound `(2^(n+1) − 2)·2^(n−1)` on `deg_c disc_z(f_c^n(z) − z)`.
pub fn interpolation_degree_bound(n: u32) -> usize {
    ((1usize << (n + 1)) - 2) << (n - 1)
}

/// `P_n(b)` via evaluation at integer `c` and exact interpolation.
pub fn discriminant_pn_interpolated(n: u32) -> Result<IntegerPoly> {
    if n == 0 || n > DISCRIMINANT_CAP {
        return Err(Error::CapExceeded { n, cap: DISCRIMINANT_CAP });
    }
    let d = discriminant_in_z_interpolated(&period_poly(n)?, interpolation_degree_bound(n))?;
    let p = substitute_quarter(&d)?;
    check_pm_monic(&p)?;
    Ok(p)
}

/// Mod-2 facts about `P_n` at `b = 0` and `b = −6`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityCertificate {
    pub n: u32,
    pub value_at_0_mod2: u8,
    pub value_at_minus6_mod2: u8,
    /// `P_n(0)` equals `disc(z^(2^n) − z)` computed independently.
    pub cross_check_disc_z2n: u8,
}

impl ParityCertificate {
    pub fn is_valid(&self) -> bool {
        self.value_at_0_mod2 == 1 && self.value_at_minus6_mod2 == 1 && self.cross_check_disc_z2n == 1
    }
}

fn parity(x: &BigInt) -> u8 {
    u8::from(x.is_odd())
}

pub fn parity_certificate(n: u32) -> Result<ParityCertificate> {
    parity_certificate_with_cap(n, DISCRIMINANT_CAP)
}

pub fn parity_certificate_with_cap(n: u32, cap: u32) -> Result<ParityCertificate> {
    let p = discriminant_pn_with_cap(n, cap)?;
    let at0 = p.eval(&BigInt::zero());
    let at_m6 = p.eval(&BigInt::from(-6));
    let deg = 1usize << n;
    let mut z2n = vec![BigInt::zero(); deg + 1];
    z2n[1] = -BigInt::one();
    z2n[deg] = BigInt::one();
    let direct = discriminant(&IntegerPoly::new(z2n))?;
    Ok(ParityCertificate {
        n,
        value_at_0_mod2: parity(&at0),
        value_at_minus6_mod2: parity(&at_m6),
        cross_check_disc_z2n: u8::from(direct == at0),
    })
}
