//! The term DSL for sequence expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' (natural | 'n'))?
//! atom   := natural | 'n' | symbol | 'pow' '(' expr ',' 'n' ')' | '(' expr ')'
//! ```
//!
//! Literals are naturals; fractions are written with `/`. Symbols are the
//! named constants a structure registers (`X` in ℤ(X), `i` in ℚ(i)).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::instances::Instance;
use crate::order::{Group, Semiring};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Num(BigInt),
    /// The index `n`.
    Var,
    Sym(String),
    Neg(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Sub(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Div(Box<Term>, Box<Term>),
    Pow(Box<Term>, u64),
    /// `base^n`.
    PowN(Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                return Err(parse_err(i + 1, "decimal points are not allowed; write fractions with '/'"));
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((col, Tok::Num(digits.parse().expect("ascii digits"))));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((col, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^(),".contains(c) {
            out.push((col, Tok::Op(c)));
            i += 1;
        } else {
            return Err(parse_err(col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

fn parse_err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
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

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(parse_err(self.column(), format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<Term> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Term::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Term::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Term::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = Term::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Term> {
        if self.eat('-') {
            return Ok(Term::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let col = self.column();
        match self.peek().cloned() {
            Some(Tok::Num(k)) => {
                self.pos += 1;
                let k = u64::try_from(k).map_err(|_| parse_err(col, "exponent too large"))?;
                Ok(Term::Pow(Box::new(base), k))
            }
            Some(Tok::Ident(s)) if s == "n" => {
                self.pos += 1;
                Ok(Term::PowN(Box::new(base)))
            }
            _ => Err(parse_err(col, "exponent must be a natural number or n")),
        }
    }

    fn atom(&mut self) -> Result<Term> {
        let col = self.column();
        match self.peek().cloned() {
            Some(Tok::Num(k)) => {
                self.pos += 1;
                Ok(Term::Num(k))
            }
            Some(Tok::Ident(s)) if s == "n" => {
                self.pos += 1;
                Ok(Term::Var)
            }
            Some(Tok::Ident(s)) if s == "pow" => {
                self.pos += 1;
                self.expect('(')?;
                let base = self.expr()?;
                self.expect(',')?;
                let c = self.column();
                match self.peek() {
                    Some(Tok::Ident(v)) if v == "n" => self.pos += 1,
                    _ => return Err(parse_err(c, "the exponent of pow must be n")),
                }
                self.expect(')')?;
                Ok(Term::PowN(Box::new(base)))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Term::Sym(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Op(c)) => Err(parse_err(col, format!("unexpected '{c}'"))),
            None => Err(parse_err(col, "unexpected end of input")),
        }
    }
}

/// Parse a term; errors carry the 1-based column.
pub fn parse(src: &str) -> Result<Term> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.chars().count() + 1,
    };
    let t = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(parse_err(p.column(), "unexpected trailing input"));
    }
    Ok(t)
}

impl Term {
    fn level(&self) -> u8 {
        match self {
            Term::Add(..) | Term::Sub(..) => 1,
            Term::Mul(..) | Term::Div(..) => 2,
            Term::Neg(_) => 3,
            Term::Pow(..) | Term::PowN(_) => 4,
            Term::Num(_) | Term::Var | Term::Sym(_) => 5,
        }
    }

    /// True when the term mentions `n`.
    pub fn has_var(&self) -> bool {
        match self {
            Term::Var | Term::PowN(_) => true,
            Term::Num(_) | Term::Sym(_) => false,
            Term::Neg(a) | Term::Pow(a, _) => a.has_var(),
            Term::Add(a, b) | Term::Sub(a, b) | Term::Mul(a, b) | Term::Div(a, b) => a.has_var() || b.has_var(),
        }
    }

    /// Evaluate in ℚ.
    pub fn eval_rational(&self, n: u64) -> Result<BigRational> {
        let int = |k: &BigInt| BigRational::from_integer(k.clone());
        Ok(match self {
            Term::Num(k) => int(k),
            Term::Var => BigRational::from_integer(n.into()),
            Term::Sym(s) => return Err(Error::Evaluation(format!("symbol {s} is not a rational number"))),
            Term::Neg(a) => -a.eval_rational(n)?,
            Term::Add(a, b) => a.eval_rational(n)? + b.eval_rational(n)?,
            Term::Sub(a, b) => a.eval_rational(n)? - b.eval_rational(n)?,
            Term::Mul(a, b) => a.eval_rational(n)? * b.eval_rational(n)?,
            Term::Div(a, b) => {
                let d = b.eval_rational(n)?;
                if d.is_zero() {
                    return Err(Error::Evaluation(format!("division by zero at n = {n}")));
                }
                a.eval_rational(n)? / d
            }
            Term::Pow(a, k) => rational_pow(&a.eval_rational(n)?, *k),
            Term::PowN(a) => rational_pow(&a.eval_rational(n)?, n),
        })
    }

    /// Evaluate at index `n` inside a ring structure. Literals go through
    /// the structure's embedding of ℚ, division through `try_inv`.
    pub fn eval<R>(&self, r: &R, n: u64) -> Result<R::Elem>
    where
        R: Instance + Group + Semiring,
    {
        let embed = |q: BigRational| {
            r.embed(&q)
                .ok_or_else(|| Error::Evaluation(format!("{q} is not an element of {}", r.key())))
        };
        Ok(match self {
            Term::Num(k) => embed(BigRational::from_integer(k.clone()))?,
            Term::Var => embed(BigRational::from_integer(n.into()))?,
            Term::Sym(s) => r
                .symbols()
                .into_iter()
                .find(|(name, _)| name == s)
                .map(|(_, v)| v)
                .ok_or_else(|| Error::Unknown {
                    kind: "symbol",
                    name: format!("{s} (in {})", r.key()),
                })?,
            Term::Neg(a) => r.neg(&a.eval(r, n)?),
            Term::Add(a, b) => r.op(&a.eval(r, n)?, &b.eval(r, n)?),
            Term::Sub(a, b) => r.sub(&a.eval(r, n)?, &b.eval(r, n)?),
            Term::Mul(a, b) => r.mul(&a.eval(r, n)?, &b.eval(r, n)?),
            Term::Div(a, b) => {
                let d = b.eval(r, n)?;
                if d == r.zero() {
                    return Err(Error::Evaluation(format!("division by zero at n = {n}")));
                }
                let inv = r
                    .try_inv(&d)
                    .ok_or_else(|| Error::Evaluation(format!("{d} is not invertible in {} (n = {n})", r.key())))?;
                r.mul(&a.eval(r, n)?, &inv)
            }
            Term::Pow(a, k) => r.pow(&a.eval(r, n)?, *k),
            Term::PowN(a) => r.pow(&a.eval(r, n)?, n),
        })
    }

    /// A constant of any structure: symbols, or a rational expression
    /// without `n` mapped through the embedding.
    pub fn eval_constant<I: Instance>(&self, s: &I) -> Result<I::Elem> {
        if let Term::Sym(name) = self {
            return s
                .symbols()
                .into_iter()
                .find(|(k, _)| k == name)
                .map(|(_, v)| v)
                .ok_or_else(|| Error::Unknown {
                    kind: "symbol",
                    name: format!("{name} (in {})", s.key()),
                });
        }
        if self.has_var() {
            return Err(Error::Evaluation("a constant cannot mention n".into()));
        }
        let q = self.eval_rational(1)?;
        s.embed(&q)
            .ok_or_else(|| Error::Evaluation(format!("{q} is not an element of {}", s.key())))
    }
}

fn rational_pow(a: &BigRational, k: u64) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..k {
        out *= a;
    }
    out
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, t: &Term, min: u8| {
            if t.level() < min {
                write!(f, "({t})")
            } else {
                write!(f, "{t}")
            }
        };
        match self {
            Term::Num(k) => write!(f, "{k}"),
            Term::Var => write!(f, "n"),
            Term::Sym(s) => write!(f, "{s}"),
            Term::Neg(a) => {
                write!(f, "-")?;
                wrap(f, a, 3)
            }
            Term::Add(a, b) | Term::Sub(a, b) => {
                wrap(f, a, 1)?;
                write!(f, " {} ", if matches!(self, Term::Add(..)) { '+' } else { '-' })?;
                wrap(f, b, 2)
            }
            Term::Mul(a, b) | Term::Div(a, b) => {
                wrap(f, a, 2)?;
                write!(f, "{}", if matches!(self, Term::Mul(..)) { '*' } else { '/' })?;
                wrap(f, b, 3)
            }
            Term::Pow(a, k) => {
                wrap(f, a, 5)?;
                write!(f, "^{k}")
            }
            Term::PowN(a) => {
                wrap(f, a, 5)?;
                write!(f, "^n")
            }
        }
    }
}
