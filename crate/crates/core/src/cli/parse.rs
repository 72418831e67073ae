//! Expression grammar shared by the command line and the JSON reports.
//!
//! Precedence, loosest first: `+ -`, then `* /` and juxtaposition, then unary minus, then `^`.
//! Products keep the written order. `/` only accepts a scalar divisor.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::hopf::{builtin_presentation, BUILTIN_NAMES};
use crate::ncalg::{AlgebraElement, Monomial, Presentation};
use crate::quasiinv::ChiElem;
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown generator {name:?} at {pos}")]
    UnknownGenerator { name: String, pos: usize },
    #[error("division by a non-scalar at {pos}")]
    ScalarDivisionOnly { pos: usize },
    #[error("division by zero at {pos}")]
    DivisionByZero { pos: usize },
    #[error("negative power of a non-invertible element at {pos}")]
    NotInvertible { pos: usize },
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let b: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = b[st..i].iter().collect();
            out.push((Tok::Num(txt.parse().expect("digits")), st));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < b.len() && (b[i].is_alphanumeric() || b[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(b[st..i].iter().collect()), st));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(ParseError::SyntaxError { pos: i, msg: format!("unexpected character {:?}", c) });
        }
    }
    out.push((Tok::End, b.len()));
    Ok(out)
}

/// Syntax tree of a parsed expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    /// One of the scalar symbols `i`, `w`, `m`, `u`.
    Symbol(String),
    Gen(String),
    /// `chi` in h0-irr.
    Chi,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64, usize),
}

#[derive(Clone, Debug)]
pub struct ParsedExpr {
    pub expr: Expr,
    pub algebra: Arc<Presentation>,
    pub value: AlgebraElement,
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    k: usize,
    alg: &'a Presentation,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.k].0
    }

    fn pos(&self) -> usize {
        self.toks[self.k].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.k].clone();
        self.k += 1;
        t
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError::SyntaxError { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self, min_bp: u8) -> Result<Expr, ParseError> {
        let mut lhs = self.prefix()?;
        loop {
            let (l_bp, r_bp, op) = match self.peek() {
                Tok::Op('+') => (1, 2, '+'),
                Tok::Op('-') => (1, 2, '-'),
                Tok::Op('*') => (3, 4, '*'),
                Tok::Op('/') => (3, 4, '/'),
                Tok::Op('^') => (7, 0, '^'),
                Tok::Num(_) | Tok::Ident(_) | Tok::Op('(') => (3, 4, ' '),
                _ => break,
            };
            if l_bp < min_bp {
                break;
            }
            let pos = self.pos();
            if op != ' ' {
                self.bump();
            }
            if op == '^' {
                let e = self.exponent()?;
                lhs = Expr::Pow(Box::new(lhs), e, pos);
                continue;
            }
            let rhs = self.expr(r_bp)?;
            lhs = match op {
                '+' => Expr::Add(Box::new(lhs), Box::new(rhs)),
                '-' => Expr::Sub(Box::new(lhs), Box::new(rhs)),
                '/' => Expr::Div(Box::new(lhs), Box::new(rhs), pos),
                _ => Expr::Mul(Box::new(lhs), Box::new(rhs)),
            };
        }
        Ok(lhs)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let paren = matches!(self.peek(), Tok::Op('('));
        if paren {
            self.bump();
        }
        let sign = match self.peek() {
            Tok::Op('-') => {
                self.bump();
                -1
            }
            Tok::Op('+') => {
                self.bump();
                1
            }
            _ => 1,
        };
        let n = match self.bump() {
            (Tok::Num(n), p) => i64::try_from(n).map_err(|_| ParseError::SyntaxError { pos: p, msg: "exponent too large".into() })?,
            _ => {
                self.k -= 1;
                return self.err("expected an integer exponent");
            }
        };
        if paren {
            match self.bump() {
                (Tok::Op(')'), _) => {}
                _ => {
                    self.k -= 1;
                    return self.err("expected ')'");
                }
            }
        }
        Ok(sign * n)
    }

    fn prefix(&mut self) -> Result<Expr, ParseError> {
        match self.bump() {
            (Tok::Num(n), _) => Ok(Expr::Num(n)),
            (Tok::Ident(name), pos) => {
                if self.alg.gen_index(&name).is_some() {
                    Ok(Expr::Gen(name))
                } else if name == "chi" && self.alg.name() == "h0-irr" {
                    Ok(Expr::Chi)
                } else if Scalar::symbol(&name).is_some() {
                    Ok(Expr::Symbol(name))
                } else {
                    Err(ParseError::UnknownGenerator { name, pos })
                }
            }
            (Tok::Op('('), _) => {
                let e = self.expr(0)?;
                match self.bump() {
                    (Tok::Op(')'), _) => Ok(e),
                    _ => {
                        self.k -= 1;
                        self.err("expected ')'")
                    }
                }
            }
            (Tok::Op('-'), _) => Ok(Expr::Neg(Box::new(self.expr(5)?))),
            (Tok::Op('+'), _) => self.expr(5),
            _ => {
                self.k -= 1;
                self.err("expected an operand")
            }
        }
    }
}

#[derive(Clone)]
enum Val {
    S(Scalar),
    E(AlgebraElement),
}

fn to_elem(alg: &Arc<Presentation>, v: Val) -> AlgebraElement {
    match v {
        Val::S(s) => AlgebraElement::scalar(alg, s),
        Val::E(e) => e,
    }
}

fn inverse(alg: &Arc<Presentation>, e: &AlgebraElement) -> Option<AlgebraElement> {
    if e.len() == 1 {
        let (m, c) = e.terms().next().expect("one term");
        if m.exps().iter().enumerate().all(|(g, &x)| x == 0 || alg.is_invertible(g)) {
            let inv = Monomial(m.exps().iter().map(|x| -x).collect());
            let mut acc = AlgebraElement::scalar(alg, c.inv().ok()?);
            for l in inv.letters() {
                acc = acc.mul(&AlgebraElement::letter(alg, l));
            }
            return Some(acc);
        }
    }
    if alg.name() == "h0-irr" {
        return ChiElem::from_h0(e).inverse().map(|c| c.to_h0());
    }
    None
}

fn eval(alg: &Arc<Presentation>, e: &Expr) -> Result<Val, ParseError> {
    Ok(match e {
        Expr::Num(n) => Val::S(Scalar::from_big_rational(BigRational::from_integer(n.clone()))),
        Expr::Symbol(s) => Val::S(Scalar::symbol(s).expect("checked at parse time")),
        Expr::Gen(g) => Val::E(AlgebraElement::gen(alg, g)),
        Expr::Chi => Val::E(ChiElem::chi_pow(1).to_h0()),
        Expr::Neg(a) => match eval(alg, a)? {
            Val::S(s) => Val::S(s.neg()),
            Val::E(x) => Val::E(x.neg()),
        },
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let (x, y) = (eval(alg, a)?, eval(alg, b)?);
            let sub = matches!(e, Expr::Sub(..));
            match (x, y) {
                (Val::S(x), Val::S(y)) => Val::S(if sub { x.sub(&y) } else { x.add(&y) }),
                (x, y) => {
                    let (x, y) = (to_elem(alg, x), to_elem(alg, y));
                    Val::E(if sub { x.sub(&y) } else { x.add(&y) })
                }
            }
        }
        Expr::Mul(a, b) => match (eval(alg, a)?, eval(alg, b)?) {
            (Val::S(x), Val::S(y)) => Val::S(x.mul(&y)),
            (Val::S(x), Val::E(y)) | (Val::E(y), Val::S(x)) => Val::E(y.scale(&x)),
            (Val::E(x), Val::E(y)) => Val::E(x.mul(&y)),
        },
        Expr::Div(a, b, pos) => {
            let d = match eval(alg, b)? {
                Val::S(d) => d,
                Val::E(_) => return Err(ParseError::ScalarDivisionOnly { pos: *pos }),
            };
            let inv = d.inv().map_err(|_| ParseError::DivisionByZero { pos: *pos })?;
            match eval(alg, a)? {
                Val::S(x) => Val::S(x.mul(&inv)),
                Val::E(x) => Val::E(x.scale(&inv)),
            }
        }
        Expr::Pow(a, n, pos) => match eval(alg, a)? {
            Val::S(x) => Val::S(x.pow(*n).map_err(|_| ParseError::DivisionByZero { pos: *pos })?),
            Val::E(x) => {
                let base = if *n < 0 { inverse(alg, &x).ok_or(ParseError::NotInvertible { pos: *pos })? } else { x };
                Val::E(base.pow(n.unsigned_abs() as u32))
            }
        },
    })
}

/// Parses and evaluates `text` in one of the builtin algebras.
pub fn parse(text: &str, algebra: &str) -> Result<ParsedExpr, ParseError> {
    let alg = builtin_presentation(algebra).map_err(|_| ParseError::UnknownAlgebra(algebra.into()))?;
    parse_in(text, &alg)
}

pub fn parse_in(text: &str, alg: &Arc<Presentation>) -> Result<ParsedExpr, ParseError> {
    let mut p = Parser { toks: lex(text)?, k: 0, alg };
    let expr = p.expr(0)?;
    if *p.peek() != Tok::End {
        return p.err("unexpected trailing input");
    }
    let value = to_elem(alg, eval(alg, &expr)?);
    Ok(ParsedExpr { expr, algebra: alg.clone(), value })
}

/// Scalar-only expression over `i`, `w`, `m`, `u`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let alg = builtin_presentation(BUILTIN_NAMES[0]).expect("builtin algebra");
    let e = parse_in(text, &alg)?;
    let mut terms = e.value.terms();
    match (terms.next(), terms.next()) {
        (None, _) => Ok(Scalar::zero()),
        (Some((m, c)), None) if m.is_one() => Ok(c.clone()),
        _ => Err(ParseError::SyntaxError { pos: 0, msg: "expected a scalar".into() }),
    }
}

/// The printed form in this grammar; `parse(print(a)) == a`.
pub fn print(a: &AlgebraElement) -> String {
    a.to_string()
}
