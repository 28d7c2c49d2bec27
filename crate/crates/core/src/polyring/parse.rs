//! Text form of polynomials.
//!
//! ```text
//! expr     := sign? term (('+'|'-') term)*
//! term     := factor ('*'? factor)*
//! factor   := base ('^' uint)?
//! base     := '(' expr ')' | rational | var
//! rational := int ('/' uint)?
//! ```
//!
//! Whitespace is ignored. The canonical output lists descending powers with
//! signs folded into the coefficients and no `*` between a coefficient and
//! the variable, e.g. `8z^3+4z^2-18z-1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntegerPoly, IteratedMapPoly, RationalInterval, RationalPoly};
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    var: Option<char>,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, var: Option<char>) -> Self {
        let chars = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { chars, pos: 0, var, text }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.text.len(), |&(i, _)| i)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.offset(), message: message.into() })
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn parse_all(&mut self) -> Result<RationalPoly> {
        if self.peek().is_none() {
            return self.error("empty input");
        }
        let p = self.expr()?;
        if let Some(c) = self.peek() {
            return self.error(format!("unexpected '{c}'"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<RationalPoly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                -self.term()?
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.bump();
            let t = self.term()?;
            acc = if op == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn starts_base(c: char) -> bool {
        c == '(' || c.is_ascii_digit() || c.is_alphabetic()
    }

    fn term(&mut self) -> Result<RationalPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if Self::starts_base(c) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RationalPoly> {
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.bump();
            let e = self.uint()?;
            let e: usize = e
                .try_into()
                .map_err(|_| Error::Syntax { position: self.offset(), message: "exponent too large".into() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<RationalPoly> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if self.bump() != Some(')') {
                    self.pos -= 1;
                    return self.error("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let q = if self.peek() == Some('/') {
                    self.bump();
                    let den = self.uint()?;
                    if den.is_zero() {
                        return self.error("zero denominator");
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                Ok(RationalPoly::constant(q))
            }
            Some(c) if c.is_alphabetic() => {
                match self.var {
                    Some(v) if v != c => {
                        return Err(Error::UnknownVariable { expected: v, found: c });
                    }
                    None => self.var = Some(c),
                    _ => {}
                }
                self.bump();
                Ok(RationalPoly::x())
            }
            Some(c) => self.error(format!("unexpected '{c}'")),
            None => self.error("unexpected end of input"),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Ok(digits.parse().expect("ascii digits"))
    }
}

/// Parse a polynomial in the single-letter variable `var`.
pub fn parse_poly(text: &str, var: char) -> Result<RationalPoly> {
    Parser::new(text, Some(var)).parse_all()
}

/// Parse a polynomial, taking the variable from the first letter seen
/// (`x` when the input is constant).
pub fn parse_poly_detect(text: &str) -> Result<(RationalPoly, char)> {
    let mut parser = Parser::new(text, None);
    let p = parser.parse_all()?;
    Ok((p, parser.var.unwrap_or('x')))
}

/// Parse `p/q` or an integer, with optional sign.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let bad = || Error::Syntax { position: 0, message: format!("not a rational number: '{text}'") };
    let q = match body.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() || n.is_negative() || d.is_negative() {
                return Err(bad());
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(body.trim().parse::<BigInt>().map_err(|_| bad())?),
    };
    Ok(if neg { -q } else { q })
}

/// Parse `[lo,hi]`, `(lo,hi]`, `[lo,hi)` or `(lo,hi)`.
pub fn parse_interval(text: &str) -> Result<RationalInterval> {
    let t = text.trim();
    let bad = |m: &str| Error::Syntax { position: 0, message: format!("{m}: '{text}'") };
    let mut it = t.chars();
    let open = it.next().ok_or_else(|| bad("empty interval"))?;
    let close = it.next_back().ok_or_else(|| bad("empty interval"))?;
    let lo_strict = match open {
        '[' => false,
        '(' => true,
        _ => return Err(bad("interval must start with '[' or '('")),
    };
    let hi_strict = match close {
        ']' => false,
        ')' => true,
        _ => return Err(bad("interval must end with ']' or ')'")),
    };
    let inner = &t[1..t.len() - 1];
    let (lo, hi) = inner.split_once(',').ok_or_else(|| bad("missing ','"))?;
    RationalInterval::new(parse_rational(lo)?, parse_rational(hi)?, lo_strict, hi_strict)
}

pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Canonical descending-degree rendering.
pub fn format_poly(p: &RationalPoly, var: char) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        if k == 0 {
            out.push_str(&format_rational(&a));
            continue;
        }
        if !a.is_one() {
            out.push_str(&format_rational(&a));
        }
        out.push(var);
        if k > 1 {
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
    out
}

/// Human-readable form of a polynomial in `z` over ℤ[c].
pub fn format_bivariate(p: &IteratedMapPoly, zvar: char, cvar: char) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, a) in p.coeffs().iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let inner = format_poly(&IntegerPoly::to_rational(a), cvar);
        let monomial = a.coeffs().iter().filter(|x| !x.is_zero()).count() == 1;
        let zpart = match k {
            0 => String::new(),
            1 => zvar.to_string(),
            _ => format!("{zvar}^{k}"),
        };
        let term = match (monomial, inner.as_str()) {
            (_, "1") if k > 0 => zpart,
            (_, "-1") if k > 0 => format!("-{zpart}"),
            (true, _) => format!("{inner}{zpart}"),
            (false, _) => format!("({inner}){zpart}"),
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}
