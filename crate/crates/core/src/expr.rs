//! Recursive-descent parser for scalar and class expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | ident | '(' expr ')'
//! ```
//!
//! Identifiers: `t`, `zeta`, `zetabar`, `i` (scalars) and `one`, `C`, `F`,
//! `sigma`, `sigmabar`, `eta` (classes). In the `HT²` context `sigma^-1`
//! is the bivector, `sigma^-1*C` and `sigma^-1*F` the `H¹(T)` classes and
//! `sigmabar` the `H²(O)` class.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::cohomology::CohClass;
use crate::harmonic::HtClass;
use crate::scalar::{GaussRational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown symbol `{name}` at {line}:{col}")]
    UnknownSymbol { line: usize, col: usize, name: String },
    #[error("type error at {line}:{col}: {msg}")]
    Type { line: usize, col: usize, msg: String },
    #[error("cannot evaluate at {line}:{col}: {msg}")]
    Eval { line: usize, col: usize, msg: String },
}

/// Which class space the class symbols refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    /// Even cohomology `{1, C, F, σ, σ̄, η}`.
    Coh,
    /// `HT² = {σ⁻¹, σ⁻¹[C], σ⁻¹[F], σ̄}`.
    Ht,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Coh(CohClass),
    Ht(HtClass),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Coh(_) => "cohomology class",
            Value::Ht(_) => "HT class",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Coh(c) => write!(f, "{c}"),
            Value::Ht(h) => write!(f, "{h}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut k = 0;
    while k < chars.len() {
        let ch = chars[k];
        let (l0, c0) = (line, col);
        if ch == '\n' {
            line += 1;
            col = 1;
            k += 1;
        } else if ch.is_whitespace() {
            col += 1;
            k += 1;
        } else if ch.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            col += k - start;
            out.push(Token { tok: Tok::Int(digits.parse().expect("ascii digits")), line: l0, col: c0 });
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            col += k - start;
            out.push(Token { tok: Tok::Ident(chars[start..k].iter().collect()), line: l0, col: c0 });
        } else if "+-*/^()".contains(ch) {
            out.push(Token { tok: Tok::Sym(ch), line: l0, col: c0 });
            col += 1;
            k += 1;
        } else {
            return Err(ParseError::Syntax { line: l0, col: c0, msg: format!("unexpected character `{ch}`") });
        }
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    ctx: Context,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".to_owned(),
    }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn at_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn syntax<T>(&self, tok: &Token, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { line: tok.line, col: tok.col, msg: msg.into() })
    }

    fn type_err<T>(tok: &Token, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Type { line: tok.line, col: tok.col, msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.term()?;
        while self.at_sym('+') || self.at_sym('-') {
            let op = self.bump();
            let rhs = self.term()?;
            acc = self.add(&op, acc, rhs, op.tok == Tok::Sym('-'))?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.unary()?;
        while self.at_sym('*') || self.at_sym('/') {
            let op = self.bump();
            let rhs = self.unary()?;
            acc = if op.tok == Tok::Sym('*') { self.mul(&op, acc, rhs)? } else { div(&op, acc, rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value, ParseError> {
        if self.at_sym('-') {
            self.bump();
            return Ok(match self.unary()? {
                Value::Scalar(s) => Value::Scalar(-s),
                Value::Coh(c) => Value::Coh(-c),
                Value::Ht(h) => Value::Ht(-h),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value, ParseError> {
        let start = self.peek().clone();
        let is_sigma = start.tok == Tok::Ident("sigma".to_owned());
        let base = self.atom()?;
        if !self.at_sym('^') {
            if is_sigma && self.ctx == Context::Ht {
                return Self::type_err(&start, "only sigma^-1 is an HT class");
            }
            return Ok(base);
        }
        let caret = self.bump();
        let negative = if self.at_sym('-') {
            self.bump();
            true
        } else {
            false
        };
        let exp_tok = self.bump();
        let Tok::Int(n) = &exp_tok.tok else {
            return self.syntax(&exp_tok, format!("expected integer exponent, found {}", describe(&exp_tok.tok)));
        };
        let n: i32 = match i32::try_from(n.clone()) {
            Ok(v) => v,
            Err(_) => return self.syntax(&exp_tok, "exponent too large"),
        };
        let e = if negative { -n } else { n };
        if is_sigma && e == -1 {
            return match self.ctx {
                Context::Ht => Ok(Value::Ht(HtClass::new(Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()))),
                Context::Coh => Self::type_err(&start, "sigma^-1 is only valid in an HT expression"),
            };
        }
        match base {
            Value::Scalar(s) => s
                .pow(e)
                .map(Value::Scalar)
                .map_err(|err| ParseError::Eval { line: caret.line, col: caret.col, msg: err.to_string() }),
            Value::Coh(c) if e >= 0 => Ok(Value::Coh((0..e).fold(CohClass::one(), |acc, _| acc.wedge(&c)))),
            other => Self::type_err(&caret, format!("cannot raise a {} to the power {e}", other.kind())),
        }
    }

    fn atom(&mut self) -> Result<Value, ParseError> {
        let tok = self.bump();
        match &tok.tok {
            Tok::Int(n) => Ok(Value::Scalar(Scalar::rational(BigRational::from_integer(n.clone())))),
            Tok::Sym('(') => {
                let v = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::Sym(')') {
                    return self.syntax(&close, format!("expected `)`, found {}", describe(&close.tok)));
                }
                Ok(v)
            }
            Tok::Ident(name) => self.ident(&tok, name),
            other => self.syntax(&tok, format!("unexpected {}", describe(other))),
        }
    }

    fn ident(&self, tok: &Token, name: &str) -> Result<Value, ParseError> {
        let v = match (name, self.ctx) {
            ("t", _) => Value::Scalar(Scalar::t()),
            ("zeta", _) => Value::Scalar(Scalar::zeta()),
            ("zetabar", _) => Value::Scalar(Scalar::zetabar()),
            ("i", _) => Value::Scalar(Scalar::i()),
            ("sigmabar", Context::Ht) => Value::Ht(HtClass::new(Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::one())),
            ("one", Context::Coh) => Value::Coh(CohClass::one()),
            ("C", _) => Value::Coh(CohClass::curve()),
            ("F", _) => Value::Coh(CohClass::fibre()),
            ("sigma", _) => Value::Coh(CohClass::sigma()),
            ("sigmabar", Context::Coh) => Value::Coh(CohClass::sigmabar()),
            ("eta", Context::Coh) => Value::Coh(CohClass::eta()),
            ("one" | "eta", Context::Ht) => return Self::type_err(tok, format!("`{name}` is not an HT class")),
            _ => return Err(ParseError::UnknownSymbol { line: tok.line, col: tok.col, name: name.to_owned() }),
        };
        Ok(v)
    }

    fn add(&self, op: &Token, a: Value, b: Value, subtract: bool) -> Result<Value, ParseError> {
        let b = if subtract {
            match b {
                Value::Scalar(s) => Value::Scalar(-s),
                Value::Coh(c) => Value::Coh(-c),
                Value::Ht(h) => Value::Ht(-h),
            }
        } else {
            b
        };
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
            (Value::Coh(x), Value::Coh(y)) => Value::Coh(x + y),
            (Value::Ht(x), Value::Ht(y)) => Value::Ht(x + y),
            (Value::Scalar(s), Value::Coh(c)) | (Value::Coh(c), Value::Scalar(s)) => Value::Coh(c + CohClass::one().scale(&s)),
            (x, y) => return Self::type_err(op, format!("cannot add a {} and a {}", x.kind(), y.kind())),
        })
    }

    fn mul(&self, op: &Token, a: Value, b: Value) -> Result<Value, ParseError> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (Value::Scalar(s), Value::Coh(c)) | (Value::Coh(c), Value::Scalar(s)) => Value::Coh(c.scale(&s)),
            (Value::Scalar(s), Value::Ht(h)) | (Value::Ht(h), Value::Scalar(s)) => Value::Ht(h.scale(&s)),
            (Value::Coh(x), Value::Coh(y)) if self.ctx == Context::Coh => Value::Coh(x.wedge(&y)),
            (Value::Ht(h), Value::Coh(c)) => {
                let pure_bivector = h.q_c.is_zero() && h.q_f.is_zero() && h.r.is_zero();
                let in_cf = c.one.is_zero() && c.sigma.is_zero() && c.sigmabar.is_zero() && c.eta.is_zero();
                if !pure_bivector || !in_cf {
                    return Self::type_err(op, "only sigma^-1 applied to a combination of C and F is an HT class");
                }
                Value::Ht(HtClass::new(Scalar::zero(), &h.p * &c.c, &h.p * &c.f, Scalar::zero()))
            }
            (x, y) => return Self::type_err(op, format!("cannot multiply a {} by a {}", x.kind(), y.kind())),
        })
    }
}

fn div(op: &Token, a: Value, b: Value) -> Result<Value, ParseError> {
    let eval_err = |e: crate::scalar::ScalarError| ParseError::Eval { line: op.line, col: op.col, msg: e.to_string() };
    let Value::Scalar(d) = b else {
        return Parser::type_err(op, format!("cannot divide by a {}", b.kind()));
    };
    Ok(match a {
        Value::Scalar(s) => Value::Scalar(s.div_unit(&d).map_err(eval_err)?),
        Value::Coh(c) => Value::Coh(c.div_unit(&d).map_err(eval_err)?),
        Value::Ht(h) => {
            let inv = Scalar::one().div_unit(&d).map_err(eval_err)?;
            Value::Ht(h.scale(&inv))
        }
    })
}

/// Parses `src` in the given context. The result may be a bare scalar.
pub fn parse(src: &str, ctx: Context) -> Result<Value, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0, ctx };
    let v = p.expr()?;
    let end = p.peek().clone();
    if end.tok != Tok::End {
        return p.syntax(&end, format!("unexpected {}", describe(&end.tok)));
    }
    Ok(v)
}

/// `HT` when the input mentions `sigma^-1`, otherwise cohomology.
pub fn detect_context(src: &str) -> Context {
    let Ok(toks) = lex(src) else {
        return Context::Coh;
    };
    let hit = toks.windows(3).any(|w| {
        w[0].tok == Tok::Ident("sigma".to_owned()) && w[1].tok == Tok::Sym('^') && w[2].tok == Tok::Sym('-')
    });
    if hit {
        Context::Ht
    } else {
        Context::Coh
    }
}

/// A class expression, in the detected context. Bare scalars are read as
/// multiples of `1` in cohomology.
pub fn parse_class_expr(src: &str) -> Result<Value, ParseError> {
    let ctx = detect_context(src);
    match parse(src, ctx)? {
        Value::Scalar(s) if ctx == Context::Coh => Ok(Value::Coh(CohClass::one().scale(&s))),
        Value::Scalar(_) => Err(ParseError::Type { line: 1, col: 1, msg: "expected an HT class, found a scalar".to_owned() }),
        v => Ok(v),
    }
}

pub fn parse_coh(src: &str) -> Result<CohClass, ParseError> {
    match parse_class_expr(src)? {
        Value::Coh(c) => Ok(c),
        v => Err(ParseError::Type { line: 1, col: 1, msg: format!("expected a cohomology class, found a {}", v.kind()) }),
    }
}

pub fn parse_ht(src: &str) -> Result<HtClass, ParseError> {
    match parse(src, Context::Ht)? {
        Value::Ht(h) => Ok(h),
        v => Err(ParseError::Type { line: 1, col: 1, msg: format!("expected an HT class, found a {}", v.kind()) }),
    }
}

pub fn parse_scalar(src: &str) -> Result<Scalar, ParseError> {
    match parse(src, Context::Coh)? {
        Value::Scalar(s) => Ok(s),
        v => Err(ParseError::Type { line: 1, col: 1, msg: format!("expected a scalar, found a {}", v.kind()) }),
    }
}

/// A constant Gaussian rational such as `3/5 + 4/5*i`.
pub fn parse_gauss(src: &str) -> Result<GaussRational, ParseError> {
    parse_scalar(src)?.as_constant().ok_or_else(|| ParseError::Type {
        line: 1,
        col: 1,
        msg: format!("expected a constant, found `{src}`"),
    })
}

/// A real rational such as `3/2`.
pub fn parse_rational(src: &str) -> Result<BigRational, ParseError> {
    let g = parse_gauss(src)?;
    if !g.is_real() {
        return Err(ParseError::Type { line: 1, col: 1, msg: format!("expected a real rational, found `{src}`") });
    }
    Ok(g.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::alpha_class;

    #[test]
    fn alpha_expression() {
        assert_eq!(parse_coh("(1/t)*C + ((t^2+1)/t)*F").unwrap(), alpha_class(&Scalar::t()));
    }

    #[test]
    fn sigma_inverse_in_ht_context() {
        assert_eq!(parse_class_expr("sigma^-1").unwrap(), Value::Ht(HtClass::new(Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero())));
        let h = parse_ht("-2*sigma^-1*C - 4*sigma^-1*F + 1/2*sigmabar").unwrap();
        assert_eq!(h, HtClass::new(Scalar::zero(), Scalar::int(-2), Scalar::int(-4), Scalar::frac(1, 2)));
        assert!(matches!(parse("sigma^-1", Context::Coh), Err(ParseError::Type { .. })));
    }

    #[test]
    fn doubled_operator_is_positioned() {
        assert_eq!(parse_coh("C + + F").unwrap_err(), ParseError::Syntax { line: 1, col: 5, msg: "unexpected `+`".to_owned() });
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_coh("C + G"), Err(ParseError::UnknownSymbol { col: 5, .. })));
        assert!(matches!(parse_coh("(C + F"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_coh("C\n + $"), Err(ParseError::Syntax { line: 2, col: 4, .. })));
        assert!(matches!(parse_scalar("1/(1+t)"), Err(ParseError::Eval { .. })));
        assert!(matches!(parse_ht("sigma^-1*eta"), Err(ParseError::Type { .. })));
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("zeta*zetabar").unwrap(), Scalar::zeta() * Scalar::zetabar());
        assert_eq!(parse_gauss("3/5 + 4/5*i").unwrap(), GaussRational::from_fracs((3, 5), (4, 5)));
        assert_eq!(parse_rational("3/2").unwrap(), crate::scalar::rat(3, 2));
        assert!(parse_rational("i").is_err());
        assert_eq!(parse_scalar("t^-2").unwrap(), Scalar::t().pow(-2).unwrap());
    }

    #[test]
    fn display_round_trips() {
        let samples = [
            Scalar::frac(-1, 2) * Scalar::t().pow(-1).unwrap() + Scalar::i() * Scalar::zeta(),
            Scalar::constant(GaussRational::from_fracs((1, 2), (-3, 4))) * Scalar::zetabar().pow(3).unwrap(),
            Scalar::int(7) - Scalar::frac(2, 9) * Scalar::t() * Scalar::zeta(),
        ];
        for s in samples {
            assert_eq!(parse_scalar(&s.to_string()).unwrap(), s, "{s}");
        }
        let a = alpha_class(&Scalar::t()) + CohClass::sigma().scale(&Scalar::zeta());
        assert_eq!(parse_coh(&a.to_string()).unwrap(), a);
        let h = HtClass::new(Scalar::frac(-1, 2) * Scalar::t().pow(-1).unwrap(), Scalar::int(3), Scalar::zero(), Scalar::t());
        assert_eq!(parse_ht(&h.to_string()).unwrap(), h);
    }

    #[test]
    fn bare_scalar_is_multiple_of_one() {
        assert_eq!(parse_coh("2 + C").unwrap(), CohClass::one().scale(&Scalar::int(2)) + CohClass::curve());
        assert_eq!(parse_coh("C*C").unwrap(), CohClass::eta().scale(&Scalar::int(-2)));
    }
}
