//! Text syntax for fields, scalars, polynomials and points.
//!
//! ```text
//! field   := "padic:" P | "radical:" P "," b "," m | "laurent"
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary | unary)*      juxtaposition multiplies
//! unary   := ("-" | "+") unary | power
//! power   := primary ("^" "-"? INT)?
//! primary := INT | "z" | "u" | "t" | "(" expr ")"
//! point   := "(" expr ";" rational ")"
//! ```
//!
//! `u` is the adjoined radical of a `radical:` field and `t` the variable of
//! the `laurent` field; `z` is the polynomial variable.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::berkpoly::TypeIIPoint;
use crate::error::{Error, Result};
use crate::exactval::{FieldDesc, Scalar};
use crate::polynewt::Poly;
use crate::rat::Q;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
            }
            out.push(Tok::Int(digits.parse().expect("ascii digits")));
        } else if c.is_ascii_alphabetic() {
            chars.next();
            if chars.peek().is_some_and(|n| n.is_ascii_alphanumeric()) {
                return Err(Error::Parse(format!(
                    "unknown identifier starting with {c:?} in {s:?}"
                )));
            }
            out.push(Tok::Ident(c));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            chars.next();
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: &'a FieldDesc,
    allow_z: bool,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at token {} of {:?}", self.pos + 1, self.src))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let den = self.unary()?;
                acc = divide(&acc, &den).map_err(|e| self.err(&e.to_string()))?;
            } else if matches!(
                self.peek(),
                Some(Tok::Int(_) | Tok::Ident(_) | Tok::Op('('))
            ) {
                acc = acc.mul(&self.unary()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Int(n)) => n.to_usize().ok_or_else(|| self.err("exponent too large"))?,
            _ => return Err(self.err("expected an integer exponent")),
        };
        self.pos += 1;
        let pow = base.pow(e);
        if !neg {
            return Ok(pow);
        }
        let one = Poly::constant(self.field.one());
        divide(&one, &pow).map_err(|e| self.err(&e.to_string()))
    }

    fn primary(&mut self) -> Result<Poly> {
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(Poly::constant(self.field.rational(Q::from_integer(n)))),
            Tok::Ident('z') if self.allow_z => Ok(Poly::z(self.field)),
            Tok::Ident(c @ ('u' | 't')) => {
                let ok = matches!(
                    (c, self.field.kind()),
                    ('u', crate::exactval::FieldKind::Radical { .. })
                        | ('t', crate::exactval::FieldKind::Laurent)
                );
                match self.field.generator().filter(|_| ok) {
                    Some(g) => Ok(Poly::constant(g)),
                    None => {
                        Err(self.err(&format!("{c:?} is not available in field {}", self.field)))
                    }
                }
            }
            Tok::Ident(c) => Err(self.err(&format!("unknown variable {c:?}"))),
            Tok::Op('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Tok::Op(c) => Err(self.err(&format!("unexpected {c:?}"))),
        }
    }
}

fn divide(num: &Poly, den: &Poly) -> Result<Poly> {
    if !den.is_constant() {
        return Err(Error::Parse("division by a non-constant polynomial".into()));
    }
    let c = den.coeff(0);
    if c.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(num.scale(&c.inv()?))
}

fn parse_expr(field: &FieldDesc, s: &str, allow_z: bool) -> Result<Poly> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
        field,
        allow_z,
        src: s,
    };
    if p.toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

pub fn parse_poly(field: &FieldDesc, s: &str) -> Result<Poly> {
    parse_expr(field, s, true)
}

pub fn parse_scalar(field: &FieldDesc, s: &str) -> Result<Scalar> {
    Ok(parse_expr(field, s, false)?.coeff(0))
}

/// `"3"`, `"-1/2"`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Q::new(n, d))
}

pub fn parse_field(s: &str) -> Result<FieldDesc> {
    let s = s.trim();
    if s == "laurent" {
        return Ok(FieldDesc::laurent());
    }
    let bad = || {
        Error::Parse(format!(
            "bad field description {s:?}; expected padic:P, radical:P,b,m or laurent"
        ))
    };
    let (kind, args) = s.split_once(':').ok_or_else(bad)?;
    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
    let prime = |t: &str| t.parse::<u64>().map_err(|_| bad());
    match (kind.trim(), parts.as_slice()) {
        ("padic", [p]) => FieldDesc::padic(prime(p)?),
        ("radical", [p, b, m]) => {
            let m = m.parse::<usize>().map_err(|_| bad())?;
            FieldDesc::radical(prime(p)?, parse_rational(b)?, m)
        }
        _ => Err(bad()),
    }
}

/// `"(center; rho)"`.
pub fn parse_point(field: &FieldDesc, s: &str) -> Result<TypeIIPoint> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("point {s:?} must look like (center; rho)")))?;
    let (c, rho) = inner
        .rsplit_once(';')
        .ok_or_else(|| Error::Parse(format!("point {s:?} is missing ';'")))?;
    Ok(TypeIIPoint::new(
        parse_scalar(field, c)?,
        parse_rational(rho)?,
    ))
}

/// `"2,3,3"`.
pub fn parse_dilations(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad dilation {t:?}")))
        })
        .collect()
}
