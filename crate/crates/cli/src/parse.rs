//! Expression parser for polynomials over Q(i) and for 1-forms.
//!
//! Grammar, whitespace-insensitive:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' natural)*
//! atom   := 'x0' | 'x1' | 'x2' | 'dx0' | 'dx1' | 'dx2' | 'i'
//!         | natural | '(' expr ')'
//! ```
//!
//! Values are polynomials and 1-form combinations. Division is allowed
//! by nonzero constants only, powers apply to polynomials only, and
//! products of differentials are rejected. The grammar accepts exactly
//! the output of the library's text serializers.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use wpfol_core::{GaussRat, OneForm, QHPoly, WeightVector};

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    /// What the parser was looking for.
    pub expected: String,
    /// What it saw instead.
    pub found: String,
}

impl ParseError {
    fn new(position: usize, expected: &str, found: impl Into<String>) -> Self {
        ParseError { position, expected: expected.to_string(), found: found.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at byte {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(usize),
    Dif(usize),
    ImagUnit,
    Nat(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Var(v) => format!("'x{v}'"),
            Tok::Dif(v) => format!("'dx{v}'"),
            Tok::ImagUnit => "'i'".to_string(),
            Tok::Nat(n) => format!("the number {n}"),
            Tok::Plus => "'+'".to_string(),
            Tok::Minus => "'-'".to_string(),
            Tok::Star => "'*'".to_string(),
            Tok::Slash => "'/'".to_string(),
            Tok::Caret => "'^'".to_string(),
            Tok::LParen => "'('".to_string(),
            Tok::RParen => "')'".to_string(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
            }
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let n: BigInt = src[start..pos].parse().expect("digits");
                toks.push((start, Tok::Nat(n)));
            }
            b'x' | b'd' => {
                let start = pos;
                let (skip, is_dif) = if c == b'd' { (2, true) } else { (1, false) };
                let var_at = pos + skip - 1;
                let ok = if is_dif { bytes.get(pos + 1) == Some(&b'x') } else { true };
                let v = bytes.get(var_at + 1).copied();
                match (ok, v) {
                    (true, Some(d @ b'0'..=b'2')) => {
                        let idx = (d - b'0') as usize;
                        pos = var_at + 2;
                        toks.push((start, if is_dif { Tok::Dif(idx) } else { Tok::Var(idx) }));
                    }
                    _ => {
                        return Err(ParseError::new(
                            start,
                            "a variable x0, x1, x2 or a differential dx0, dx1, dx2",
                            format!("{:?}", text_at(src, start)),
                        ))
                    }
                }
            }
            b'i' => {
                toks.push((pos, Tok::ImagUnit));
                pos += 1;
            }
            b'+' => {
                toks.push((pos, Tok::Plus));
                pos += 1;
            }
            b'-' => {
                toks.push((pos, Tok::Minus));
                pos += 1;
            }
            b'*' => {
                toks.push((pos, Tok::Star));
                pos += 1;
            }
            b'/' => {
                toks.push((pos, Tok::Slash));
                pos += 1;
            }
            b'^' => {
                toks.push((pos, Tok::Caret));
                pos += 1;
            }
            b'(' => {
                toks.push((pos, Tok::LParen));
                pos += 1;
            }
            b')' => {
                toks.push((pos, Tok::RParen));
                pos += 1;
            }
            _ => {
                return Err(ParseError::new(
                    pos,
                    "a term, operator, or parenthesis",
                    format!("{:?}", text_at(src, pos)),
                ))
            }
        }
    }
    Ok(toks)
}

fn text_at(src: &str, pos: usize) -> &str {
    let end = src[pos..]
        .char_indices()
        .nth(8)
        .map(|(o, _)| pos + o)
        .unwrap_or(src.len());
    &src[pos..end]
}

/// A parsed value: a polynomial or a combination of differentials with
/// polynomial coefficients.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Poly(QHPoly),
    Form([QHPoly; 3]),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Poly(_) => "a polynomial",
            Value::Form(_) => "a 1-form",
        }
    }
}

fn as_constant(p: &QHPoly) -> Option<GaussRat> {
    if p.is_zero() {
        return Some(GaussRat::zero());
    }
    if !p.is_constant() {
        return None;
    }
    p.terms().next().map(|(_, c)| c.clone())
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.src.len())
    }

    fn found(&self) -> String {
        match self.peek() {
            Some((_, t)) => t.describe(),
            None => "end of input".to_string(),
        }
    }

    fn next_is(&mut self, t: &Tok) -> bool {
        if self.peek().map(|(_, tok)| tok == t).unwrap_or(false) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.term()?;
        loop {
            let at = self.here();
            if self.next_is(&Tok::Plus) {
                acc = add(acc, self.term()?, at, false)?;
            } else if self.next_is(&Tok::Minus) {
                acc = add(acc, self.term()?, at, true)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.factor()?;
        loop {
            let at = self.here();
            if self.next_is(&Tok::Star) {
                acc = mul(acc, self.factor()?, at)?;
            } else if self.next_is(&Tok::Slash) {
                acc = div(acc, self.factor()?, at)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Value, ParseError> {
        if self.next_is(&Tok::Minus) {
            return Ok(neg(self.factor()?));
        }
        let mut base = self.atom()?;
        loop {
            let at = self.here();
            if !self.next_is(&Tok::Caret) {
                return Ok(base);
            }
            let (npos, n) = match self.peek().cloned() {
                Some((p, Tok::Nat(n))) => {
                    self.pos += 1;
                    (p, n)
                }
                _ => {
                    return Err(ParseError::new(
                        self.here(),
                        "a nonnegative integer exponent",
                        self.found(),
                    ))
                }
            };
            let e = u32::try_from(&n)
                .ok()
                .filter(|e| *e <= MAX_EXPONENT)
                .ok_or_else(|| {
                    ParseError::new(npos, &format!("an exponent at most {MAX_EXPONENT}"), format!("{n}"))
                })?;
            base = match base {
                Value::Poly(p) => Value::Poly(p.pow(e)),
                v @ Value::Form(_) => {
                    return Err(ParseError::new(
                        at,
                        "a polynomial base for '^'",
                        v.kind().to_string(),
                    ))
                }
            };
        }
    }

    fn atom(&mut self) -> Result<Value, ParseError> {
        let at = self.here();
        let tok = match self.peek().cloned() {
            Some((_, t)) => t,
            None => {
                return Err(ParseError::new(
                    at,
                    "a variable, differential, number, 'i', '-', or '('",
                    "end of input",
                ))
            }
        };
        self.pos += 1;
        match tok {
            Tok::Var(v) => Ok(Value::Poly(QHPoly::var(v))),
            Tok::Dif(v) => {
                let mut a = [QHPoly::zero(), QHPoly::zero(), QHPoly::zero()];
                a[v] = QHPoly::one();
                Ok(Value::Form(a))
            }
            Tok::ImagUnit => Ok(Value::Poly(QHPoly::constant(GaussRat::i()))),
            Tok::Nat(n) => Ok(Value::Poly(QHPoly::constant(GaussRat::new(
                BigRational::from_integer(n),
                BigRational::from_integer(BigInt::from(0)),
            )))),
            Tok::LParen => {
                let inner = self.expr()?;
                if !self.next_is(&Tok::RParen) {
                    return Err(ParseError::new(self.here(), "')'", self.found()));
                }
                Ok(inner)
            }
            other => Err(ParseError::new(
                at,
                "a variable, differential, number, 'i', '-', or '('",
                other.describe(),
            )),
        }
    }
}

fn add(a: Value, b: Value, at: usize, subtract: bool) -> Result<Value, ParseError> {
    let b = if subtract { neg(b) } else { b };
    match (a, b) {
        (Value::Poly(p), Value::Poly(q)) => Ok(Value::Poly(&p + &q)),
        (Value::Form(p), Value::Form(q)) => {
            Ok(Value::Form([&p[0] + &q[0], &p[1] + &q[1], &p[2] + &q[2]]))
        }
        // adding zero to a form arises from serialized zero components
        (Value::Form(p), Value::Poly(q)) | (Value::Poly(q), Value::Form(p)) if q.is_zero() => {
            Ok(Value::Form(p))
        }
        (a, b) => Err(ParseError::new(
            at,
            "both sides of '+'/'-' to be polynomials or both 1-forms",
            format!("{} and {}", a.kind(), b.kind()),
        )),
    }
}

fn mul(a: Value, b: Value, at: usize) -> Result<Value, ParseError> {
    match (a, b) {
        (Value::Poly(p), Value::Poly(q)) => Ok(Value::Poly(&p * &q)),
        (Value::Form(f), Value::Poly(p)) | (Value::Poly(p), Value::Form(f)) => {
            Ok(Value::Form([&f[0] * &p, &f[1] * &p, &f[2] * &p]))
        }
        (a, b) => Err(ParseError::new(
            at,
            "at most one factor to be a 1-form",
            format!("{} times {}", a.kind(), b.kind()),
        )),
    }
}

fn div(a: Value, b: Value, at: usize) -> Result<Value, ParseError> {
    let c = match &b {
        Value::Poly(p) => as_constant(p),
        Value::Form(_) => None,
    };
    let c = c.ok_or_else(|| {
        ParseError::new(at, "a constant divisor", format!("{}", b.kind()))
    })?;
    if c.is_zero() {
        return Err(ParseError::new(at, "a nonzero divisor", "zero".to_string()));
    }
    let inv = c.inv();
    Ok(match a {
        Value::Poly(p) => Value::Poly(p.scale(&inv)),
        Value::Form(f) => Value::Form([f[0].scale(&inv), f[1].scale(&inv), f[2].scale(&inv)]),
    })
}

fn neg(a: Value) -> Value {
    let m = GaussRat::from_int(-1);
    match a {
        Value::Poly(p) => Value::Poly(p.scale(&m)),
        Value::Form(f) => Value::Form([f[0].scale(&m), f[1].scale(&m), f[2].scale(&m)]),
    }
}

/// Parse a full expression and return the resulting value.
pub fn parse_value(src: &str) -> Result<Value, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { src, toks, pos: 0 };
    if p.peek().is_none() {
        return Err(ParseError::new(0, "a nonempty expression", "end of input"));
    }
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(ParseError::new(p.here(), "end of input or an operator", p.found()));
    }
    Ok(v)
}

/// Parse a polynomial; differentials are rejected.
pub fn parse_polynomial(src: &str) -> Result<QHPoly, ParseError> {
    match parse_value(src)? {
        Value::Poly(p) => Ok(p),
        Value::Form(_) => Err(ParseError::new(0, "a polynomial without differentials", "a 1-form")),
    }
}

/// Parse a constant; variables and differentials are rejected.
pub fn parse_scalar(src: &str) -> Result<GaussRat, ParseError> {
    let p = parse_polynomial(src)?;
    as_constant(&p).ok_or_else(|| {
        ParseError::new(0, "a constant scalar", "a polynomial with variables")
    })
}

/// Parse a 1-form with coefficients attached to the given weights. The
/// literal "0" is accepted as the zero form; every other polynomial
/// without differentials is rejected. Degree homogeneity and the
/// radial-contraction identity are NOT checked here; validation happens
/// when the form is turned into a foliation.
pub fn parse_oneform(w: WeightVector, src: &str) -> Result<OneForm, ParseError> {
    match parse_value(src)? {
        Value::Form(a) => Ok(OneForm::new(w, a)),
        Value::Poly(p) if p.is_zero() => {
            Ok(OneForm::new(w, [QHPoly::zero(), QHPoly::zero(), QHPoly::zero()]))
        }
        Value::Poly(_) => Err(ParseError::new(
            0,
            "a 1-form with dx0, dx1, dx2 terms",
            "a polynomial",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> QHPoly {
        QHPoly::var(i)
    }

    #[test]
    fn polynomial_shapes() {
        let p = parse_polynomial("2*x0^3*x1 - x2 + 1").unwrap();
        let q = &(&(&x(0).pow(3) * &x(1)).scale(&GaussRat::from_int(2)) - &x(2))
            + &QHPoly::one();
        assert_eq!(p, q);

        let c = parse_scalar("(1/2-3*i)").unwrap();
        assert_eq!(c, GaussRat::new(
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::from_integer(BigInt::from(-3)),
        ));
        assert_eq!(parse_scalar("3/4*i").unwrap(), GaussRat::from_ratio(3, 4) * GaussRat::i());
        assert_eq!(parse_scalar("-i").unwrap(), -GaussRat::i());
        assert_eq!(parse_scalar("2^10").unwrap(), GaussRat::from_int(1024));
        // division folds into the coefficient exactly
        assert_eq!(parse_scalar("1/3/5").unwrap(), GaussRat::from_ratio(1, 15));
    }

    #[test]
    fn oneform_shapes() {
        let w = WeightVector::new(1, 1, 2);
        let f = parse_oneform(w, "x1*dx0 - x0*dx1").unwrap();
        assert_eq!(f.a[0], x(1));
        assert_eq!(f.a[1], x(0).scale(&GaussRat::from_int(-1)));
        assert!(f.a[2].is_zero());
        assert_eq!(f.validate().unwrap(), 2);

        let z = parse_oneform(w, "0").unwrap();
        assert!(z.is_zero());

        // polynomial coefficients distribute over the differential
        let g = parse_oneform(w, "(x0^2 + x1^2)*dx2/2").unwrap();
        assert_eq!(g.a[2], (&x(0) * &x(0) + &x(1) * &x(1)).scale(&GaussRat::from_ratio(1, 2)));
    }

    #[test]
    fn error_positions_and_expectations() {
        let e = parse_polynomial("x0 + x3").err().unwrap();
        assert_eq!(e.position, 5);
        assert!(e.expected.contains("variable"));

        let e = parse_polynomial("x0 +").err().unwrap();
        assert_eq!(e.position, 4);
        assert_eq!(e.found, "end of input");

        let e = parse_polynomial("(x0").err().unwrap();
        assert_eq!(e.expected, "')'");

        let e = parse_value("dx0*dx1").err().unwrap();
        assert!(e.expected.contains("at most one factor"));

        let e = parse_value("x0/x1").err().unwrap();
        assert!(e.expected.contains("constant divisor"));

        let e = parse_value("1/0").err().unwrap();
        assert!(e.expected.contains("nonzero"));

        let e = parse_value("x0 + dx0").err().unwrap();
        assert!(e.expected.contains("both"));

        let e = parse_value("dx0^2").err().unwrap();
        assert!(e.expected.contains("polynomial base"));

        let e = parse_value("x0^x1").err().unwrap();
        assert!(e.expected.contains("integer exponent"));

        let e = parse_value("x0^99999").err().unwrap();
        assert!(e.expected.contains("at most"));

        assert!(parse_value("").is_err());
        assert!(parse_value("x0 x1").is_err());
    }

    #[test]
    fn round_trips_through_to_text() {
        let polys = [
            "x0^3 - 2*x1*x2 + 1",
            "(1+2*i)*x0^2 - i*x1",
            "-3/4*x2^5",
            "0",
        ];
        for s in polys {
            let p = parse_polynomial(s).unwrap();
            assert_eq!(parse_polynomial(&p.to_text()).unwrap(), p, "{s}");
        }
        let w = WeightVector::new(1, 2, 3);
        let forms = [
            "(2*x1)*dx0 + (-x0)*dx1",
            "(x2 - x0*x1)*dx0 + (i*x0^2)*dx1 + ((1-i)*x1)*dx2",
        ];
        for s in forms {
            let f = parse_oneform(w, s).unwrap();
            assert_eq!(parse_oneform(w, &f.to_text()).unwrap(), f, "{s}");
        }
    }
}
