//! Small expression language shared by the field and jet parsers.
//!
//! ```text
//! sum     := ['-'] product (('+' | '-') product)*
//! product := power (('*' | '·' | '/' | <juxtaposition>) power)*
//! power   := atom ['^' integer]
//! atom    := number | ident | '∂' ident | 'd_' ident | ident '(' sum ')' | '(' sum ')'
//! ```
//!
//! Identifiers are letters followed by letters, digits, `_` and primes
//! (`'`, `′`, `″`, `‴`). Division is by numeric literals only. Products keep
//! their written order, which matters for odd factors.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigRational),
    Var(String),
    Partial(String),
    Call(String, Box<Expr>),
    Neg(Box<Expr>),
    Add(Vec<Expr>),
    Mul(Vec<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at character {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Partial(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn is_prime(c: char) -> bool {
    matches!(c, '\'' | '′' | '″' | '‴')
}

fn ident_start(c: char) -> bool {
    c.is_alphabetic() && c != '∂'
}

fn ident_cont(c: char) -> bool {
    (c.is_alphanumeric() && c != '∂' && c != '·') || c == '_' || is_prime(c)
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let read_ident = |i: &mut usize| {
        let start = *i;
        while *i < chars.len() && ident_cont(chars[*i]) {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>()
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '∂' => {
                i += 1;
                if i >= chars.len() || !ident_start(chars[i]) {
                    return Err(ParseError {
                        pos,
                        msg: "expected a coordinate after ∂".into(),
                    });
                }
                out.push((pos, Tok::Partial(read_ident(&mut i))));
                continue;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((pos, Tok::Num(digits.parse().expect("digits"))));
                continue;
            }
            c if ident_start(c) => {
                let name = read_ident(&mut i);
                if let Some(rest) = name.strip_prefix("d_") {
                    if !rest.is_empty() {
                        out.push((pos, Tok::Partial(rest.to_string())));
                        continue;
                    }
                }
                out.push((pos, Tok::Ident(name)));
                continue;
            }
            _ => {
                return Err(ParseError {
                    pos,
                    msg: format!("unexpected character {c:?}"),
                })
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut neg = false;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            neg = true;
        } else if self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
        }
        loop {
            let p = self.product()?;
            terms.push(if neg { Expr::Neg(Box::new(p)) } else { p });
            match self.peek() {
                Some(Tok::Plus) => neg = false,
                Some(Tok::Minus) => neg = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Add(terms) })
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.power()?];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    factors.push(self.power()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(n)) => {
                            self.pos += 1;
                            if n == BigInt::from(0) {
                                return self.err("division by zero");
                            }
                            factors.push(Expr::Num(BigRational::new(1.into(), n)));
                        }
                        _ => return self.err("division is only by integer literals"),
                    }
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Partial(_)) | Some(Tok::LParen) => {
                    factors.push(self.power()?);
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Mul(factors) })
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| ParseError {
                        pos: self.here(),
                        msg: "exponent too large".into(),
                    })?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(BigRational::from_integer(n)))
            }
            Some(Tok::Partial(name)) => {
                self.pos += 1;
                Ok(Expr::Partial(name))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::LParen) {
                    self.pos += 1;
                    let arg = self.sum()?;
                    self.expect_rparen()?;
                    return Ok(Expr::Call(name, Box::new(arg)));
                }
                Ok(Expr::Var(name))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect_rparen()?;
                Ok(e)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.power()?)))
            }
            Some(t) => self.err(format!("unexpected {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::RParen) {
            self.pos += 1;
            Ok(())
        } else {
            self.err("expected ')'")
        }
    }
}

pub fn parse(s: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(s)?;
    let len = s.chars().count();
    if toks.is_empty() {
        return Err(ParseError {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser { toks, pos: 0, len };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Evaluation target for [`Expr`]; carries the coordinate names.
pub trait Context {
    type Value: Clone;

    fn number(&self, q: &BigRational) -> Result<Self::Value, String>;
    fn var(&self, name: &str) -> Result<Self::Value, String>;
    fn partial(&self, name: &str) -> Result<Self::Value, String> {
        Err(format!("derivation ∂{name} is not allowed here"))
    }
    fn call(&self, name: &str, _arg: Self::Value) -> Result<Self::Value, String> {
        Err(format!("unknown function {name}"))
    }
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String>;
    fn neg(&self, a: Self::Value) -> Self::Value;
    fn one(&self) -> Self::Value;
}

pub fn eval<C: Context>(ctx: &C, e: &Expr) -> Result<C::Value, String> {
    match e {
        Expr::Num(q) => ctx.number(q),
        Expr::Var(v) => ctx.var(v),
        Expr::Partial(v) => ctx.partial(v),
        Expr::Call(f, arg) => {
            let a = eval(ctx, arg)?;
            ctx.call(f, a)
        }
        Expr::Neg(x) => Ok(ctx.neg(eval(ctx, x)?)),
        Expr::Add(xs) => {
            let mut it = xs.iter();
            let mut acc = eval(ctx, it.next().expect("nonempty"))?;
            for x in it {
                acc = ctx.add(acc, eval(ctx, x)?)?;
            }
            Ok(acc)
        }
        Expr::Mul(xs) => {
            let mut it = xs.iter();
            let mut acc = eval(ctx, it.next().expect("nonempty"))?;
            for x in it {
                acc = ctx.mul(acc, eval(ctx, x)?)?;
            }
            Ok(acc)
        }
        Expr::Pow(b, n) => {
            let base = eval(ctx, b)?;
            let mut acc = ctx.one();
            for _ in 0..*n {
                acc = ctx.mul(acc, base.clone())?;
            }
            Ok(acc)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Expr {
        Expr::Num(BigRational::from_integer(n.into()))
    }

    #[test]
    fn field_expression() {
        let e = parse("∂x + p*∂u + q·∂p + q^2*∂z").unwrap();
        let Expr::Add(terms) = e else { panic!() };
        assert_eq!(terms.len(), 4);
        assert_eq!(terms[0], Expr::Partial("x".into()));
        assert_eq!(
            terms[3],
            Expr::Mul(vec![Expr::Pow(Box::new(Expr::Var("q".into())), 2), Expr::Partial("z".into())])
        );
    }

    #[test]
    fn juxtaposition_and_division() {
        assert_eq!(
            parse("2q∂z").unwrap(),
            Expr::Mul(vec![q(2), Expr::Var("q".into()), Expr::Partial("z".into())])
        );
        assert_eq!(
            parse("x^2/2").unwrap(),
            Expr::Mul(vec![
                Expr::Pow(Box::new(Expr::Var("x".into())), 2),
                Expr::Num(BigRational::new(1.into(), 2.into()))
            ])
        );
    }

    #[test]
    fn primes_and_calls() {
        assert_eq!(parse("ξ″").unwrap(), Expr::Var("ξ″".into()));
        assert_eq!(parse("θ1'").unwrap(), Expr::Var("θ1'".into()));
        assert_eq!(
            parse("exp(2x)").unwrap(),
            Expr::Call("exp".into(), Box::new(Expr::Mul(vec![q(2), Expr::Var("x".into())])))
        );
        assert_eq!(parse("d_x").unwrap(), Expr::Partial("x".into()));
    }

    #[test]
    fn signs() {
        assert_eq!(
            parse("-a - b").unwrap(),
            Expr::Add(vec![
                Expr::Neg(Box::new(Expr::Var("a".into()))),
                Expr::Neg(Box::new(Expr::Var("b".into())))
            ])
        );
        assert_eq!(parse("−1").unwrap(), Expr::Neg(Box::new(q(1))));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("x +").unwrap_err().pos, 3);
        assert!(parse("x / y").is_err());
        assert!(parse("(x").is_err());
        assert!(parse("").is_err());
        assert!(parse("x $ y").is_err());
        assert!(parse("∂ + x").is_err());
    }
}
