//! End-to-end classification pipelines.
//!
//! Two pipelines are provided: the totally real postcritically finite
//! parameters of `z² + c`, and the totally real parabolic parameters. Each
//! candidate produced by the order enumeration ends up either confirmed with
//! a positive certificate or eliminated with a typed reason.

mod report;

use std::time::Instant;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebraic::{affine_transform, all_conjugates_in, RealAlgebraic};
use crate::cyclotomic::{admissible_orders, admissible_orders_with_cap, trace_polynomial, DEFAULT_ORDER_CAP};
use crate::dynamics::{
    discriminant_pn_with_cap, find_attracting_cycle_numeric, is_parabolic_up_to, is_pcf_rational,
    parity_certificate_with_cap, real_behavior, verify_cycle, ParabolicVerdict, DISCRIMINANT_CAP,
    DISCRIMINANT_HARD_CAP, NUMERIC_PERIOD_CAP,
};
use crate::error::{Error, Result};
use crate::polyring::{
    format_poly, format_rational, isolate_real_roots, parse_poly, IntegerPoly, RationalInterval,
};

pub use report::{
    report_from_json, report_to_json, CertificateRecord, ClassificationReport, Environment,
    Verdict, SCHEMA,
};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Why a candidate parameter was ruled out.
#[derive(Clone, Debug, PartialEq)]
pub enum EliminationReason {
    /// Strictly preperiodic critical orbit; a parabolic cycle would have to
    /// attract it.
    PreperiodicPcf { preperiod: u32, period: u32 },
    /// `4c` is an even integer and `P_n(0)` is odd for every checked `n`.
    ParityOdd,
    /// Certified attracting cycle; the single critical point is taken.
    AttractingCycle { period: u32, modulus_bound: BigRational },
    /// A Galois conjugate was already eliminated (index into the report).
    GaloisConjugateEliminated { sibling: usize },
    /// Critical orbit infinite.
    NotPostcriticallyFinite,
    /// Some conjugate lies outside the admissible interval.
    ConjugateOutsideInterval,
}

impl EliminationReason {
    pub fn name(&self) -> &'static str {
        match self {
            EliminationReason::PreperiodicPcf { .. } => "PreperiodicPCF",
            EliminationReason::ParityOdd => "ParityOdd",
            EliminationReason::AttractingCycle { .. } => "AttractingCycle",
            EliminationReason::GaloisConjugateEliminated { .. } => "GaloisConjugateEliminated",
            EliminationReason::NotPostcriticallyFinite => "NotPostcriticallyFinite",
            EliminationReason::ConjugateOutsideInterval => "ConjugateOutsideInterval",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EliminationCertificate {
    pub candidate: RealAlgebraic,
    pub reason: EliminationReason,
    pub checked_up_to: Option<u32>,
}

impl EliminationCertificate {
    pub fn to_record(&self, detail: String) -> CertificateRecord {
        let modulus_bound = match &self.reason {
            EliminationReason::AttractingCycle { modulus_bound, .. } => {
                Some(format_rational(modulus_bound))
            }
            _ => None,
        };
        CertificateRecord {
            candidate: self.candidate.to_string(),
            verdict: Verdict::Eliminated,
            reason: self.reason.name().to_string(),
            checked_up_to: self.checked_up_to,
            modulus_bound,
            detail,
        }
    }
}

fn confirmed(candidate: &RealAlgebraic, reason: &str, checked_up_to: Option<u32>, detail: String) -> CertificateRecord {
    CertificateRecord {
        candidate: candidate.to_string(),
        verdict: Verdict::Confirmed,
        reason: reason.to_string(),
        checked_up_to,
        modulus_bound: None,
        detail,
    }
}

/// Real roots of `T_n` as exact algebraic numbers, ascending.
fn trace_roots(n: u64) -> Result<(IntegerPoly, Vec<RealAlgebraic>)> {
    let tn = trace_polynomial(n);
    let roots = isolate_real_roots(&tn.to_rational())?
        .into_iter()
        .map(|iv| RealAlgebraic::new(tn.clone(), iv))
        .collect::<Result<Vec<_>>>()?;
    Ok((tn, roots))
}

fn sorted_rationals(mut v: Vec<BigRational>) -> Vec<String> {
    v.sort();
    v.iter().map(format_rational).collect()
}

/// Knobs for the postcritically finite pipeline.
#[derive(Clone, Debug)]
pub struct Prop1Options {
    /// Candidates come from orders whose `T_n` roots are all at most `2t`.
    pub threshold: BigRational,
    pub strict: bool,
    pub cap: u64,
}

impl Default for Prop1Options {
    fn default() -> Self {
        Prop1Options { threshold: BigRational::zero(), strict: false, cap: DEFAULT_ORDER_CAP }
    }
}

/// Totally real PCF parameters; must come out as `{−2, −1, 0}`.
pub fn prop1_pipeline() -> Result<ClassificationReport> {
    let report = prop1_diagnostic(&Prop1Options::default())?;
    let expected = ["-2", "-1", "0"];
    if report.parameters != expected {
        return Err(Error::PipelineMismatch(format!(
            "final set {{{}}} differs from {{-2, -1, 0}}",
            report.parameters.join(", ")
        )));
    }
    if report.orders != [2, 3, 4] {
        return Err(Error::PipelineMismatch(format!("orders {:?} differ from {{2, 3, 4}}", report.orders)));
    }
    Ok(report)
}

/// The PCF pipeline with a configurable threshold and no expectation check.
pub fn prop1_diagnostic(opts: &Prop1Options) -> Result<ClassificationReport> {
    let start = Instant::now();
    let orders = admissible_orders_with_cap(&opts.threshold, opts.strict, opts.cap)?;
    let interval = RationalInterval::closed(q(-2, 1), q(0, 1))?;
    let mut report = ClassificationReport::new("prop1");
    report.orders = orders.as_slice().to_vec();
    let mut params = Vec::new();
    for &n in &orders {
        let (tn, roots) = trace_roots(n)?;
        let inside = all_conjugates_in(&tn, &interval)?;
        for c in roots {
            let record = match c.as_rational() {
                Some(r) => match is_pcf_rational(&r) {
                    Some(o) if inside => {
                        params.push(r);
                        confirmed(
                            &c,
                            "PostcriticallyFinite",
                            None,
                            format!("order {n}; preperiod {} period {}; conjugates in [-2,0]", o.preperiod, o.period),
                        )
                    }
                    Some(_) => EliminationCertificate {
                        candidate: c.clone(),
                        reason: EliminationReason::ConjugateOutsideInterval,
                        checked_up_to: None,
                    }
                    .to_record(format!("order {n}")),
                    None => EliminationCertificate {
                        candidate: c.clone(),
                        reason: EliminationReason::NotPostcriticallyFinite,
                        checked_up_to: None,
                    }
                    .to_record(format!("order {n}; critical orbit infinite; {:?}", real_behavior(&r))),
                },
                None if !inside => EliminationCertificate {
                    candidate: c.clone(),
                    reason: EliminationReason::ConjugateOutsideInterval,
                    checked_up_to: None,
                }
                .to_record(format!("order {n}; ≈ {:.6}", c.to_f64())),
                None => {
                    return Err(Error::PipelineMismatch(format!("irrational candidate {c} left undecided")));
                }
            };
            report.certificates.push(record);
        }
    }
    report.parameters = sorted_rationals(params);
    report.notes.push(
"orders are enumerated until the largest root 2cos(2π/n) of T_n leaves the admissible range".into(),
    );
    report.environment.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

struct Landmark {
    c: BigRational,
    cycle: &'static str,
    period: u32,
    multiplier: i64,
    discriminant_order: u32,
}

fn landmarks() -> Vec<Landmark> {
    vec![
        Landmark { c: q(1, 4), cycle: "2z-1", period: 1, multiplier: 1, discriminant_order: 1 },
        Landmark { c: q(-3, 4), cycle: "2z+1", period: 1, multiplier: -1, discriminant_order: 2 },
        Landmark { c: q(-5, 4), cycle: "4z^2+4z-1", period: 2, multiplier: -1, discriminant_order: 4 },
        Landmark { c: q(-7, 4), cycle: "8z^3+4z^2-18z-1", period: 3, multiplier: 1, discriminant_order: 3 },
    ]
}

fn confirm_landmark(l: &Landmark, nmax: u32) -> Result<CertificateRecord> {
    let c = RealAlgebraic::from_rational(&l.c);
    let n = match is_parabolic_up_to(&c, nmax)? {
        ParabolicVerdict::Parabolic(n) if n == l.discriminant_order => n,
        v => {
            return Err(Error::PipelineMismatch(format!(
                "{c} not confirmed parabolic: {v:?} (expected P_{}(4c) = 0)",
                l.discriminant_order
            )))
        }
    };
    let g = parse_poly(l.cycle, 'z')?.primitive();
    let cert = verify_cycle(&l.c, &g, l.period, &BigRational::from_integer(l.multiplier.into()))?;
    Ok(confirmed(
        &c,
        "Parabolic",
        Some(nmax),
        format!(
            "P_{n}(4c) = 0; cycle {} of period {} with multiplier {}",
            format_poly(&cert.cycle_poly.to_rational(), 'z'),
            cert.period,
            format_rational(&cert.multiplier)
        ),
    ))
}

/// The five parameters `(b − 6)/4` for roots `b` of `T_n`, `n ∈ {2,3,4,5}`.
pub fn expected_interval_candidates() -> Vec<RealAlgebraic> {
    let quad = IntegerPoly::from_i64(&[41, 52, 16]);
    vec![
        RealAlgebraic::from_rational(&q(-2, 1)),
        RealAlgebraic::from_rational(&q(-7, 4)),
        RealAlgebraic::from_rational(&q(-3, 2)),
        RealAlgebraic::new(quad.clone(), RationalInterval::closed(q(-3, 2), q(-5, 4)).unwrap()).unwrap(),
        RealAlgebraic::new(quad, RationalInterval::closed(q(-2, 1), q(-3, 2)).unwrap()).unwrap(),
    ]
}

/// Candidates in `[−2, −5/4)` from the order enumeration at threshold ½.
pub fn prop2_candidates() -> Result<(Vec<u64>, Vec<RealAlgebraic>)> {
    let orders = admissible_orders(&q(1, 2), true)?;
    let mut out = Vec::new();
    for &n in &orders {
        let (_, roots) = trace_roots(n)?;
        for b in roots {
            out.push(affine_transform(&b, &q(1, 4), &q(-3, 2))?);
        }
    }
    Ok((orders.as_slice().to_vec(), out))
}

fn same_set(a: &[RealAlgebraic], b: &[RealAlgebraic]) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.iter().any(|y| x.same_number(y)))
}

/// Totally real parabolic parameters; must come out as `{¼, −¾, −5/4, −7/4}`.
///
/// `nmax` bounds the discriminant and parity checks; `precision` is the
/// number of decimal digits for the attracting-cycle certificate.
pub fn prop2_pipeline(nmax: u32, precision: u32) -> Result<ClassificationReport> {
    if nmax == 0 || nmax > DISCRIMINANT_HARD_CAP {
        return Err(Error::CapExceeded { n: nmax, cap: DISCRIMINANT_HARD_CAP });
    }
    let start = Instant::now();
    let mut report = ClassificationReport::new("prop2");
    let mut params = Vec::new();
    let table = landmarks();

    for l in &table[..3] {
        report.certificates.push(confirm_landmark(l, nmax)?);
        params.push(l.c.clone());
    }

    let (orders, mut candidates) = prop2_candidates()?;
    report.orders = orders;
    if !same_set(&candidates, &expected_interval_candidates()) {
        let got: Vec<String> = candidates.iter().map(ToString::to_string).collect();
        return Err(Error::PipelineMismatch(format!("unexpected candidate set {got:?}")));
    }
    candidates.sort_by(|a, b| b.to_f64().total_cmp(&a.to_f64()));

    let mut eliminated: Vec<(usize, RealAlgebraic)> = Vec::new();
    for c in candidates {
        if let Some(r) = c.as_rational() {
            if let Some(l) = table.iter().find(|l| l.c == r) {
                report.certificates.push(confirm_landmark(l, nmax)?);
                params.push(r);
                continue;
            }
        }
        let (cert, detail) = eliminate(&c, nmax, precision, &eliminated)?;
        eliminated.push((report.certificates.len(), c));
        report.certificates.push(cert.to_record(detail));
    }

    report.parameters = sorted_rationals(params);
    let expected = sorted_rationals(table.iter().map(|l| l.c.clone()).collect());
    if report.parameters != expected {
        return Err(Error::PipelineMismatch(format!(
            "final set {{{}}} differs from {{{}}}",
            report.parameters.join(", "),
            expected.join(", ")
        )));
    }
    report.notes = vec![
        format!(
            "discriminant and parity checks are carried out for n <= {nmax}; the parity argument \
             P_n(-6) = P_n(0) = 1 (mod 2) covers every n"
        ),
        "GaloisConjugateEliminated uses the rule that every Galois conjugate of a totally real \
         parabolic parameter is parabolic; it is taken as an axiom here"
            .into(),
        "PreperiodicPCF uses that a parabolic cycle attracts the critical orbit".into(),
        format!("AttractingCycle bounds come from outward-rounded interval arithmetic at {precision} digits"),
        "the criterion that 4c be an algebraic unit is not evaluated".into(),
    ];
    report.environment = Environment {
        nmax: Some(nmax),
        precision: Some(precision),
        runtime_ms: start.elapsed().as_millis() as u64,
    };
    Ok(report)
}

/// Smallest multiple of `10^-12` not below `x`, or `x` itself if that
/// would reach 1.
fn round_up(x: &BigRational) -> BigRational {
    let s = BigRational::from_integer(num_traits::pow(10.into(), 12));
    let r = (x * &s).ceil() / s;
    if r < BigRational::from_integer(1.into()) {
        r
    } else {
        x.clone()
    }
}

fn eliminate(
    c: &RealAlgebraic,
    nmax: u32,
    precision: u32,
    eliminated: &[(usize, RealAlgebraic)],
) -> Result<(EliminationCertificate, String)> {
    let cap = nmax.max(DISCRIMINANT_CAP);
    let make = |reason| EliminationCertificate { candidate: c.clone(), reason, checked_up_to: Some(nmax) };

    if let Some(r) = c.as_rational() {
        if let Some(o) = is_pcf_rational(&r).filter(|o| o.preperiod > 0) {
            let v = is_parabolic_up_to(c, nmax)?;
            if v != ParabolicVerdict::NotUpToBound(nmax) {
                return Err(Error::PipelineMismatch(format!("preperiodic {c} has vanishing P_n: {v:?}")));
            }
            let detail = format!(
                "critical value preperiod {} period {}; P_n(4c) != 0 for n <= {nmax}",
                o.preperiod, o.period
            );
            return Ok((make(EliminationReason::PreperiodicPcf { preperiod: o.preperiod, period: o.period }), detail));
        }
        let b = &r * q(4, 1);
        if b.is_integer() && b.to_integer().is_even() {
            let b = b.to_integer();
            for n in 1..=nmax {
                let cert = parity_certificate_with_cap(n, cap)?;
                let at_b = discriminant_pn_with_cap(n, cap)?.eval(&b);
                if !cert.is_valid() || at_b.is_even() {
                    return Err(Error::PipelineMismatch(format!("parity check fails for n = {n} at b = {b}")));
                }
            }
            let detail = format!("P_n({b}) = P_n(0) = 1 (mod 2) for n <= {nmax}");
            return Ok((make(EliminationReason::ParityOdd), detail));
        }
    }

    if let Some((idx, sib)) = eliminated.iter().find(|(_, s)| s.minpoly() == c.minpoly()) {
        let detail = format!("conjugate of {sib}");
        return Ok((make(EliminationReason::GaloisConjugateEliminated { sibling: *idx }), detail));
    }

    let mut precision_error = None;
    for period in 1..=NUMERIC_PERIOD_CAP {
        match find_attracting_cycle_numeric(c, period, precision) {
            Ok(cyc) => {
                let detail = format!(
                    "≈ {:.10}; λ ≈ {:.10}; cycle ≈ [{}]",
                    c.to_f64(),
                    cyc.multiplier_estimate,
                    cyc.points.iter().map(|p| format!("{p:.6}")).collect::<Vec<_>>().join(", ")
                );
                let reason = EliminationReason::AttractingCycle { period, modulus_bound: round_up(&cyc.modulus_bound) };
                return Ok((make(reason), detail));
            }
            Err(e @ Error::PrecisionInsufficient(_)) => {
                precision_error.get_or_insert(e);
            }
            Err(_) => {}
        }
    }
    Err(precision_error
        .unwrap_or_else(|| Error::PipelineMismatch(format!("no elimination rule applies to {c}"))))
}
