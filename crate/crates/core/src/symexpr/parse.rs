//! Recursive-descent parser.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' '-'? INT)?
//! atom   := NUMBER | 'x' | FUNC "'"* '(' args ')' | '(' expr ')'
//! ```
//!
//! Function arguments must reduce to `c*x`; orders must reduce to integers in
//! 0..=32. Division is accepted by constants and by products of powers of `x`
//! and basis functions. Primes after `Pd`, `G`, `Hd`, `Gd` count derivatives.

use super::simplify::normalize;
use super::{Basis, Expr, FuncKind, MAX_ORDER};
use crate::error::{ParseError, ParseErrorKind};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String, u32),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(v) => format!("number {v}"),
            Tok::Ident(s, _) => format!("'{s}'"),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
        }
    }
}

fn err(position: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { position, kind }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        let start = i;
        match ch {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            ',' => out.push((start, Tok::Comma)),
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '/' => out.push((start, Tok::Slash)),
            '^' => out.push((start, Tok::Caret)),
            '0'..='9' | '.' => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_digit() || bytes[j] == b'.') {
                    j += 1;
                }
                if j < bytes.len() && (bytes[j] == b'e' || bytes[j] == b'E') {
                    let mut k = j + 1;
                    if k < bytes.len() && (bytes[k] == b'+' || bytes[k] == b'-') {
                        k += 1;
                    }
                    if k < bytes.len() && bytes[k].is_ascii_digit() {
                        while k < bytes.len() && bytes[k].is_ascii_digit() {
                            k += 1;
                        }
                        j = k;
                    }
                }
                let lit = &text[i..j];
                let v: f64 = lit.parse().map_err(|_| err(start, ParseErrorKind::BadNumber(lit.to_string())))?;
                out.push((start, Tok::Num(v)));
                i = j;
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                    j += 1;
                }
                let name = text[i..j].to_string();
                let mut primes = 0;
                while j < bytes.len() && bytes[j] == b'\'' {
                    primes += 1;
                    j += 1;
                }
                out.push((start, Tok::Ident(name, primes)));
                i = j;
                continue;
            }
            _ => {
                let c = text[i..].chars().next().unwrap_or(ch);
                return Err(err(start, ParseErrorKind::UnexpectedChar(c)));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| err(self.end, ParseErrorKind::UnexpectedEnd))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        let (p, t) = self.next()?;
        if t == want {
            Ok(())
        } else {
            Err(err(p, ParseErrorKind::UnexpectedToken(t.describe())))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    terms.push(-self.term()?);
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.unary()?];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    factors.push(self.unary()?);
                }
                Some(Tok::Slash) => {
                    let at = self.here();
                    self.pos += 1;
                    let d = normalize(&self.unary()?);
                    if !is_divisor(&d) {
                        return Err(err(at, ParseErrorKind::UnsupportedDivision));
                    }
                    factors.push(d.powi(-1));
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(factors) })
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let (p, t) = self.next()?;
        match t {
            Tok::Num(v) if v.fract() == 0.0 && v <= i32::MAX as f64 => {
                let n = v as i32;
                Ok(base.powi(if negative { -n } else { n }))
            }
            Tok::Num(_) => Err(err(p, ParseErrorKind::NonIntegerOrder("^".into()))),
            other => Err(err(p, ParseErrorKind::UnexpectedToken(other.describe()))),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (p, t) = self.next()?;
        match t {
            Tok::Num(v) => Ok(Expr::Const(v)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name, primes) => {
                if name == "x" && primes == 0 {
                    return Ok(Expr::X);
                }
                match FuncKind::from_name(&name) {
                    Some(kind) => self.call(kind, primes, p),
                    None if self.peek() == Some(&Tok::LParen) => Err(err(p, ParseErrorKind::UnknownFunction(name))),
                    None => Err(err(p, ParseErrorKind::UnknownSymbol(name))),
                }
            }
            other => Err(err(p, ParseErrorKind::UnexpectedToken(other.describe()))),
        }
    }

    fn call(&mut self, kind: FuncKind, primes: u32, at: usize) -> Result<Expr, ParseError> {
        if primes > 0 && !kind.counts_derivatives() {
            return Err(err(at, ParseErrorKind::UnexpectedChar('\'')));
        }
        self.expect(Tok::LParen)?;
        let mut args = vec![(self.here(), self.expr()?)];
        while self.peek() == Some(&Tok::Comma) {
            self.pos += 1;
            args.push((self.here(), self.expr()?));
        }
        self.expect(Tok::RParen)?;
        let want = if kind.has_order() || kind == FuncKind::Pow { 2 } else { 1 };
        if args.len() != want {
            return Err(err(at, ParseErrorKind::Arity(kind.name().into())));
        }
        let (arg_pos, arg) = args.pop().unwrap();
        let scale = linear_scale(&arg).ok_or_else(|| err(arg_pos, ParseErrorKind::NonLinearArgument))?;
        let mut b = Basis::new(kind, scale);
        b.deriv = primes;
        if let Some((p, first)) = args.pop() {
            let value = match normalize(&first) {
                Expr::Const(v) => v,
                _ if kind == FuncKind::Pow => return Err(err(p, ParseErrorKind::NonLinearArgument)),
                _ => return Err(err(p, ParseErrorKind::NonIntegerOrder(kind.name().into()))),
            };
            if kind == FuncKind::Pow {
                b.param = value;
            } else {
                if value.fract() != 0.0 || !value.is_finite() {
                    return Err(err(p, ParseErrorKind::NonIntegerOrder(kind.name().into())));
                }
                if value < 0.0 || value > MAX_ORDER as f64 {
                    return Err(err(p, ParseErrorKind::OrderOutOfRange(kind.name().into(), value as i64)));
                }
                b.order = value as u32;
            }
        }
        Ok(Expr::Func(b))
    }
}

/// Scale c of an argument that reduces to c*x with c != 0.
fn linear_scale(arg: &Expr) -> Option<f64> {
    match normalize(arg) {
        Expr::X => Some(1.0),
        Expr::Product(v) => match v.as_slice() {
            [Expr::Const(c), Expr::X] if c.is_finite() => Some(*c),
            _ => None,
        },
        _ => None,
    }
}

/// Constants, and single monomials in x and basis functions.
fn is_divisor(d: &Expr) -> bool {
    let atom_ok = |e: &Expr| match e {
        Expr::X | Expr::Func(_) => true,
        Expr::Pow(b, _) => matches!(**b, Expr::X | Expr::Func(_)),
        _ => false,
    };
    match d {
        Expr::Const(c) => *c != 0.0,
        Expr::Product(v) => v.iter().all(|e| matches!(e, Expr::Const(_)) || atom_ok(e)),
        other => atom_ok(other),
    }
}

/// Parse and return the canonical form.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    if p.peek().is_none() {
        return Err(err(0, ParseErrorKind::UnexpectedEnd));
    }
    let e = p.expr()?;
    if let Some((pos, t)) = p.toks.get(p.pos) {
        return Err(err(*pos, ParseErrorKind::UnexpectedToken(t.describe())));
    }
    Ok(normalize(&e))
}
