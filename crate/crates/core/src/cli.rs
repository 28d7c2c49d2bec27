//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::json;

use crate::algebraic::{is_totally_real, RealAlgebraic};
use crate::classify::{
    prop1_diagnostic, prop1_pipeline, prop2_pipeline, report_to_json, ClassificationReport,
    Prop1Options,
};
use crate::cyclotomic::{is_cyclotomic_product, CyclotomicDecision, DEFAULT_ORDER_CAP};
use crate::dynamics::{
    cycle_multiplier, discriminant_pn_with_cap, escapes, is_parabolic_up_to, is_pcf_rational,
    parity_certificate_with_cap, period_poly_at, real_behavior, verify_cycle, DEFAULT_PRECISION,
    DISCRIMINANT_CAP, DISCRIMINANT_HARD_CAP,
};
use crate::error::{Error, Result};
use crate::polyring::{
    format_poly, format_rational, isolate_real_roots, parse_poly_detect, parse_rational,
    squarefree_part, IntegerPoly,
};

#[derive(Parser, Debug)]
#[command(name = "parab-kit", version, about = "Exact certificates for real parameters of z^2 + c")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on success; rely on the exit code.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a classification pipeline.
    Verify {
        #[command(subcommand)]
        which: Which,
    },
    /// Print P_n(b), where disc_z(f_c^n(z) - z) = P_n(4c).
    Pn {
        #[arg(long)]
        n: u32,
        /// Also check P_n(0) and P_n(-6) are odd.
        #[arg(long)]
        check_parity: bool,
    },
    /// Decide whether a monic integer polynomial is a product of cyclotomics.
    Kronecker {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Describe the real dynamics at a parameter.
    Classify {
        /// `p/q` or `minpoly@[lo,hi]`.
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = DISCRIMINANT_CAP)]
        nmax: u32,
    },
    /// Exact multiplier of the cycle formed by the roots of a polynomial.
    Multiplier {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        period: u32,
        #[arg(long, allow_hyphen_values = true)]
        cycle_poly: String,
        /// Fail unless the multiplier equals this value.
        #[arg(long, allow_hyphen_values = true)]
        expect: Option<String>,
    },
    /// Whether every root of a squarefree integer polynomial is real.
    TotallyReal {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Isolating intervals for the real roots of a polynomial.
    Isolate {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
}

#[derive(Subcommand, Debug)]
enum Which {
    /// Totally real postcritically finite parameters.
    Prop1 {
        #[command(flatten)]
        diag: Prop1Flags,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Totally real parabolic parameters.
    Prop2 {
        #[arg(long, default_value_t = DISCRIMINANT_CAP)]
        nmax: u32,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Prop1Flags {
    /// Diagnostic: admissible threshold t (orders with all T_n roots <= 2t).
    #[arg(long, allow_hyphen_values = true)]
    threshold: Option<String>,
    /// Diagnostic: require roots < 2t.
    #[arg(long)]
    strict: bool,
    /// Diagnostic: largest order scanned.
    #[arg(long)]
    cap: Option<u64>,
}

struct Ctx<'a> {
    json: bool,
    quiet: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, text: &str, value: serde_json::Value) {
        if self.quiet {
            return;
        }
        if self.json {
            let _ = writeln!(self.out, "{}", serde_json::to_string_pretty(&value).unwrap());
        } else {
            let _ = write!(self.out, "{text}");
        }
    }

    fn warn(&mut self, msg: &str) {
        let _ = writeln!(self.err, "warning: {msg}");
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVariable { .. }
        | Error::InvalidInterval(_)
        | Error::InvalidParameter(_)
        | Error::InvalidThreshold(_)
        | Error::CapExceeded { .. }
        | Error::NotMonic
        | Error::NotSquarefree
        | Error::ZeroPolynomial
        | Error::ConstantPolynomial
        | Error::NotIsolating { .. }
        | Error::DegreeMismatch { .. }
        | Error::ZeroScale => 2,
        _ => 1,
    }
}

/// Parse `args` (including the program name) and run; output goes to the
/// given writers.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    let mut ctx = Ctx { json: cli.json, quiet: cli.quiet, out, err };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, ctx: &mut Ctx) -> Result<i32> {
    match cmd {
        Command::Verify { which } => verify(which, ctx),
        Command::Pn { n, check_parity } => pn(n, check_parity, ctx),
        Command::Kronecker { poly } => kronecker(&poly, ctx),
        Command::Classify { c, nmax } => classify(&c, nmax, ctx),
        Command::Multiplier { c, period, cycle_poly, expect } => {
            multiplier(&c, period, &cycle_poly, expect.as_deref(), ctx)
        }
        Command::TotallyReal { poly } => totally_real(&poly, ctx),
        Command::Isolate { poly } => isolate(&poly, ctx),
    }
}

fn write_report(r: &ClassificationReport, output: Option<PathBuf>, ctx: &mut Ctx) -> Result<()> {
    let json = report_to_json(r);
    if let Some(path) = output {
        std::fs::write(&path, format!("{json}\n"))
            .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
    }
    if !ctx.quiet {
        if ctx.json {
            let _ = writeln!(ctx.out, "{json}");
        } else {
            let _ = write!(ctx.out, "{}", r.to_text());
        }
    }
    Ok(())
}

fn verify(which: Which, ctx: &mut Ctx) -> Result<i32> {
    let (report, output) = match which {
        Which::Prop1 { diag, output } => {
            let diagnostic = diag.threshold.is_some() || diag.strict || diag.cap.is_some();
            let report = if diagnostic {
                let opts = Prop1Options {
                    threshold: match &diag.threshold {
                        Some(t) => parse_rational(t)?,
                        None => BigRational::from_integer(0.into()),
                    },
                    strict: diag.strict,
                    cap: diag.cap.unwrap_or(DEFAULT_ORDER_CAP),
                };
                prop1_diagnostic(&opts)?
            } else {
                prop1_pipeline()?
            };
            (report, output)
        }
        Which::Prop2 { nmax, precision, output } => {
            if nmax > DISCRIMINANT_CAP && nmax <= DISCRIMINANT_HARD_CAP {
                ctx.warn(&format!("nmax = {nmax} computes P_6 (degree 192); this takes noticeably longer"));
            }
            (prop2_pipeline(nmax, precision)?, output)
        }
    };
    write_report(&report, output, ctx)?;
    Ok(0)
}

fn pn(n: u32, check_parity: bool, ctx: &mut Ctx) -> Result<i32> {
    if n > DISCRIMINANT_CAP && n <= DISCRIMINANT_HARD_CAP {
        ctx.warn(&format!("n = {n} is above the default cap {DISCRIMINANT_CAP}; this takes noticeably longer"));
    }
    let p = discriminant_pn_with_cap(n, DISCRIMINANT_HARD_CAP)?;
    let text = format_poly(&p.to_rational(), 'b');
    let mut out = format!("P_{n}(b) = {text}\n");
    let mut value = json!({ "n": n, "degree": p.degree(), "polynomial": text });
    let mut code = 0;
    if check_parity {
        let cert = parity_certificate_with_cap(n, DISCRIMINANT_HARD_CAP)?;
        out += &format!(
            "P_{n}(0) mod 2 = {}, P_{n}(-6) mod 2 = {}, P_{n}(0) = disc(z^{} - z): {}\n",
            cert.value_at_0_mod2,
            cert.value_at_minus6_mod2,
            1u64 << n,
            if cert.cross_check_disc_z2n == 1 { "yes" } else { "no" }
        );
        if !cert.is_valid() {
            code = 1;
        }
        value["parity"] = serde_json::to_value(&cert).unwrap();
    }
    ctx.emit(&out, value);
    Ok(code)
}

fn integer_poly(s: &str) -> Result<(IntegerPoly, char)> {
    let (p, var) = parse_poly_detect(s)?;
    let p = p
        .to_integer()
        .ok_or_else(|| Error::InvalidParameter(format!("{s} does not have integer coefficients")))?;
    Ok((p, var))
}

fn kronecker(s: &str, ctx: &mut Ctx) -> Result<i32> {
    let (p, var) = integer_poly(s)?;
    let shown = format_poly(&p.to_rational(), var);
    match is_cyclotomic_product(&p)? {
        CyclotomicDecision::Product(orders) => {
            let names: Vec<String> = orders.iter().map(|n| format!("Phi_{n}")).collect();
            ctx.emit(
                &format!("{shown}: product of cyclotomics {}\n", names.join(" * ")),
                json!({ "polynomial": shown, "cyclotomic": true, "orders": orders }),
            );
        }
        CyclotomicDecision::NotCyclotomic => ctx.emit(
            &format!("{shown}: not a product of cyclotomics\n"),
            json!({ "polynomial": shown, "cyclotomic": false }),
        ),
    }
    Ok(0)
}

fn classify(s: &str, nmax: u32, ctx: &mut Ctx) -> Result<i32> {
    let c: RealAlgebraic = s.parse()?;
    let parabolic = is_parabolic_up_to(&c, nmax)?;
    let mut text = format!("c = {c} (≈ {:.12})\n", c.to_f64());
    let mut value = json!({ "c": c.to_string(), "approx": c.to_f64(), "parabolic": format!("{parabolic:?}") });
    if let Some(r) = c.as_rational() {
        let behavior = real_behavior(&r);
        let pcf = is_pcf_rational(&r);
        let esc = escapes(&r);
        text += &format!("behavior: {behavior:?}\n");
        match pcf {
            Some(o) => text += &format!("postcritically finite: preperiod {} period {}\n", o.preperiod, o.period),
            None => text += "postcritically finite: no\n",
        }
        match &esc {
            Ok(b) => text += &format!("escapes: {}\n", if *b { "yes" } else { "no" }),
            Err(e) => text += &format!("escapes: {e}\n"),
        }
        value["behavior"] = serde_json::to_value(behavior).unwrap();
        value["pcf"] = serde_json::to_value(pcf).unwrap();
        value["escapes"] = match esc {
            Ok(b) => json!(b),
            Err(_) => serde_json::Value::Null,
        };
    } else {
        let tr = is_totally_real(c.minpoly())?;
        text += &format!("minimal polynomial totally real: {}\n", if tr { "yes" } else { "no" });
        value["totally_real"] = json!(tr);
    }
    text += &format!("parabolic up to n = {nmax}: {parabolic:?}\n");
    ctx.emit(&text, value);
    Ok(0)
}

fn multiplier(c: &str, period: u32, g: &str, expect: Option<&str>, ctx: &mut Ctx) -> Result<i32> {
    let c = parse_rational(c)?;
    let (g, var) = parse_poly_detect(g)?;
    let g = g.primitive();
    let shown = format_poly(&g.to_rational(), var);
    let lambda = match expect {
        Some(e) => verify_cycle(&c, &g, period, &parse_rational(e)?)?.multiplier,
        None => {
            let lambda = cycle_multiplier(&g, period)?;
            let (_, r) = period_poly_at(period, &c)?.div_rem(&g.to_rational())?;
            if !r.is_zero() {
                return Err(Error::NotAFactor);
            }
            lambda
        }
    };
    let l = format_rational(&lambda);
    ctx.emit(
        &format!("c = {}, cycle {shown}, period {period}: multiplier {l}\n", format_rational(&c)),
        json!({ "c": format_rational(&c), "cycle_poly": shown, "period": period, "multiplier": l }),
    );
    Ok(0)
}

fn totally_real(s: &str, ctx: &mut Ctx) -> Result<i32> {
    let (p, var) = integer_poly(s)?;
    let shown = format_poly(&p.to_rational(), var);
    let tr = is_totally_real(&p)?;
    ctx.emit(
        &format!("{shown}: {}\n", if tr { "totally real" } else { "not totally real" }),
        json!({ "polynomial": shown, "totally_real": tr }),
    );
    Ok(0)
}

fn isolate(s: &str, ctx: &mut Ctx) -> Result<i32> {
    let (p, var) = parse_poly_detect(s)?;
    let ivs = isolate_real_roots(&p)?;
    let sf = squarefree_part(&p)?.primitive();
    let mut text = format!("{} real root(s) of {}\n", ivs.len(), format_poly(&p, var));
    let mut list = Vec::new();
    for iv in &ivs {
        let approx = RealAlgebraic::new(sf.clone(), iv.clone())?.to_f64();
        text += &format!("  {iv}  ≈ {approx:.12}\n");
        list.push(json!({ "interval": iv.to_string(), "approx": approx }));
    }
    ctx.emit(&text, json!({ "polynomial": format_poly(&p, var), "roots": list }));
    Ok(0)
}
