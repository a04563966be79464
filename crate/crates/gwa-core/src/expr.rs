//! Expression parsing for polynomials, rational functions, GWA elements,
//! and skew-ring elements.
//!
//! One grammar serves every surface: `+ - * / ^` with integer literals,
//! variable symbols, the generator symbols `Xp<i>` / `Xm<i>`, the
//! cyclotomic root symbol `z`, and skew basis atoms `m[z1,...,zn]`.
//! `^` binds tightest and takes an integer-literal exponent, `*` and `/`
//! are left-associative, `+` and `-` bind loosest. Offsets in syntax
//! errors are 1-based.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::coeff::{FieldDesc, FieldElem, Rational};
use crate::error::{KernelError, Result};
use crate::gwa::{DegreeVector, GwaElement, GwaPresentation};
use crate::poly::{Poly, PolyRing};
use crate::ratfunc::RatFunc;
use crate::skew::{SkewContext, SkewElement};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let v: BigInt = src[i..j].parse().expect("digits");
                out.push((Tok::Int(v), start));
                i = j;
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut j = i;
                while j < bytes.len()
                    && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_')
                {
                    j += 1;
                }
                out.push((Tok::Ident(src[i..j].to_string()), start));
                i = j;
            }
            '+' => {
                out.push((Tok::Plus, start));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, start));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, start));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, start));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, start));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, start));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, start));
                i += 1;
            }
            '[' => {
                out.push((Tok::LBracket, start));
                i += 1;
            }
            ']' => {
                out.push((Tok::RBracket, start));
                i += 1;
            }
            ',' => {
                out.push((Tok::Comma, start));
                i += 1;
            }
            _ => return Err(KernelError::SyntaxError(start + 1)),
        }
    }
    Ok(out)
}

/// Abstract syntax shared by every evaluation target.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Sym(String),
    /// A skew basis atom `m[z1,...,zn]`.
    Monoid(Vec<i64>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, p)| p + 1)
            .unwrap_or(self.end + 1)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Tok) -> Result<()> {
        if self.peek() == Some(t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(KernelError::SyntaxError(self.here()))
        }
    }

    /// Signed integer literal, used for exponents and monoid entries.
    fn signed_int(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.here();
        match self.next() {
            Some(Tok::Int(v)) => {
                let v = v.to_i64().ok_or(KernelError::SyntaxError(at))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(KernelError::SyntaxError(at)),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.here();
        match self.next() {
            Some(Tok::Int(v)) => Ok(Expr::Int(v)),
            Some(Tok::Ident(name)) => {
                if name == "m" && self.peek() == Some(&Tok::LBracket) {
                    self.pos += 1;
                    let mut entries = Vec::new();
                    if self.peek() != Some(&Tok::RBracket) {
                        loop {
                            entries.push(self.signed_int()?);
                            if self.peek() == Some(&Tok::Comma) {
                                self.pos += 1;
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(&Tok::RBracket)?;
                    Ok(Expr::Monoid(entries))
                } else {
                    Ok(Expr::Sym(name))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr(1)?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            _ => Err(KernelError::SyntaxError(at)),
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            // unary minus binds like multiplication but looser than ^
            let operand = self.expr(2)?;
            return Ok(Expr::Neg(Box::new(operand)));
        }
        let mut base = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = self.signed_int()?;
            base = Expr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn expr(&mut self, min_prec: u8) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let (prec, tok) = match self.peek() {
                Some(Tok::Plus) => (1, Tok::Plus),
                Some(Tok::Minus) => (1, Tok::Minus),
                Some(Tok::Star) => (2, Tok::Star),
                Some(Tok::Slash) => (2, Tok::Slash),
                _ => break,
            };
            if prec < min_prec {
                break;
            }
            self.pos += 1;
            let rhs = self.expr(prec + 1)?;
            lhs = match tok {
                Tok::Plus => Expr::Add(Box::new(lhs), Box::new(rhs)),
                Tok::Minus => Expr::Sub(Box::new(lhs), Box::new(rhs)),
                Tok::Star => Expr::Mul(Box::new(lhs), Box::new(rhs)),
                Tok::Slash => Expr::Div(Box::new(lhs), Box::new(rhs)),
                _ => unreachable!(),
            };
        }
        Ok(lhs)
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let e = p.expr(1)?;
    if p.pos != p.toks.len() {
        return Err(KernelError::SyntaxError(p.here()));
    }
    Ok(e)
}

/// A plain rational literal like `5`, `-3/2`.
pub fn parse_rational(src: &str) -> Result<Rational> {
    let e = parse(src)?;
    fn go(e: &Expr) -> Result<Rational> {
        match e {
            Expr::Int(v) => Ok(Rational::from(v.clone())),
            Expr::Neg(x) => Ok(-go(x)?),
            Expr::Div(a, b) => {
                let d = go(b)?;
                if d == Rational::from(BigInt::from(0)) {
                    return Err(KernelError::DivisionByZero);
                }
                Ok(go(a)? / d)
            }
            Expr::Mul(a, b) => Ok(go(a)? * go(b)?),
            Expr::Add(a, b) => Ok(go(a)? + go(b)?),
            Expr::Sub(a, b) => Ok(go(a)? - go(b)?),
            _ => Err(KernelError::InvalidInput("not a rational literal".into())),
        }
    }
    go(&e)
}

fn field_symbol(ring: &Arc<PolyRing>, name: &str) -> Option<Result<FieldElem>> {
    if name == "z" {
        if let FieldDesc::Cyclotomic { conductor } = ring.field() {
            return Some(FieldElem::root_of_unity_in(ring.field(), conductor, 1));
        }
    }
    None
}

/// Evaluate into the polynomial ring; division must be exact.
pub fn eval_poly(e: &Expr, ring: &Arc<PolyRing>) -> Result<Poly> {
    match e {
        Expr::Int(v) => Ok(Poly::constant_rat(ring, Rational::from(v.clone()))),
        Expr::Sym(s) => {
            if let Some(idx) = ring.var_index(s) {
                Ok(Poly::var(ring, idx))
            } else if let Some(c) = field_symbol(ring, s) {
                Ok(Poly::constant(ring, c?))
            } else {
                Err(KernelError::UnknownSymbol(s.clone()))
            }
        }
        Expr::Monoid(_) => Err(KernelError::InvalidInput(
            "monoid atom is only valid in skew-ring expressions".into(),
        )),
        Expr::Neg(x) => Ok(eval_poly(x, ring)?.neg()),
        Expr::Add(a, b) => eval_poly(a, ring)?.add(&eval_poly(b, ring)?),
        Expr::Sub(a, b) => eval_poly(a, ring)?.sub(&eval_poly(b, ring)?),
        Expr::Mul(a, b) => eval_poly(a, ring)?.mul(&eval_poly(b, ring)?),
        Expr::Div(a, b) => eval_poly(a, ring)?.div_exact(&eval_poly(b, ring)?),
        Expr::Pow(b, k) => {
            let base = eval_poly(b, ring)?;
            if *k < 0 {
                Ok(base.inverse_unit()?.pow(k.unsigned_abs() as u32))
            } else {
                Ok(base.pow(*k as u32))
            }
        }
    }
}

/// Evaluate into the fraction field; division is unrestricted.
pub fn eval_ratfunc(e: &Expr, ring: &Arc<PolyRing>) -> Result<RatFunc> {
    match e {
        Expr::Int(_) | Expr::Sym(_) => Ok(RatFunc::from_poly(eval_poly(e, ring)?)),
        Expr::Monoid(_) => Err(KernelError::InvalidInput(
            "monoid atom is only valid in skew-ring expressions".into(),
        )),
        Expr::Neg(x) => Ok(eval_ratfunc(x, ring)?.neg()),
        Expr::Add(a, b) => eval_ratfunc(a, ring)?.add(&eval_ratfunc(b, ring)?),
        Expr::Sub(a, b) => eval_ratfunc(a, ring)?.sub(&eval_ratfunc(b, ring)?),
        Expr::Mul(a, b) => eval_ratfunc(a, ring)?.mul(&eval_ratfunc(b, ring)?),
        Expr::Div(a, b) => eval_ratfunc(a, ring)?.div(&eval_ratfunc(b, ring)?),
        Expr::Pow(b, k) => eval_ratfunc(b, ring)?.pow(*k),
    }
}

fn generator_symbol(name: &str) -> Option<(i64, usize)> {
    let (sign, rest) = if let Some(r) = name.strip_prefix("Xp") {
        (1i64, r)
    } else if let Some(r) = name.strip_prefix("Xm") {
        (-1i64, r)
    } else {
        return None;
    };
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse::<usize>().ok().map(|i| (sign, i))
}

/// Evaluate into a GWA: generator symbols `Xp<i>`/`Xm<i>` are 1-based, the
/// product is the normal-form product, exponents of generators must be
/// nonnegative, and division is only by invertible degree-0 elements.
pub fn eval_gwa(e: &Expr, algebra: &Arc<GwaPresentation>) -> Result<GwaElement> {
    match e {
        Expr::Int(v) => Ok(GwaElement::from_poly(
            algebra,
            Poly::constant_rat(algebra.base(), Rational::from(v.clone())),
        )),
        Expr::Sym(s) => {
            if let Some(idx) = algebra.base().var_index(s) {
                return Ok(GwaElement::from_poly(algebra, Poly::var(algebra.base(), idx)));
            }
            if let Some((sign, i)) = generator_symbol(s) {
                if i == 0 || i > algebra.rank() {
                    return Err(KernelError::RankOutOfRange(i, algebra.rank()));
                }
                return GwaElement::generator(algebra, i - 1, sign);
            }
            if let Some(c) = field_symbol(algebra.base(), s) {
                return Ok(GwaElement::from_poly(
                    algebra,
                    Poly::constant(algebra.base(), c?),
                ));
            }
            Err(KernelError::UnknownSymbol(s.clone()))
        }
        Expr::Monoid(_) => Err(KernelError::InvalidInput(
            "monoid atom is only valid in skew-ring expressions".into(),
        )),
        Expr::Neg(x) => Ok(eval_gwa(x, algebra)?.neg()),
        Expr::Add(a, b) => eval_gwa(a, algebra)?.add(&eval_gwa(b, algebra)?),
        Expr::Sub(a, b) => eval_gwa(a, algebra)?.sub(&eval_gwa(b, algebra)?),
        Expr::Mul(a, b) => eval_gwa(a, algebra)?.mul(&eval_gwa(b, algebra)?),
        Expr::Div(a, b) => {
            let num = eval_gwa(a, algebra)?;
            let den = eval_gwa(b, algebra)?;
            let inv = gwa_scalar_inverse(&den)?;
            num.scale_poly(&inv)
        }
        Expr::Pow(b, k) => {
            let base = eval_gwa(b, algebra)?;
            if *k >= 0 {
                base.pow(*k as u32)
            } else {
                let inv = gwa_scalar_inverse(&base)?;
                GwaElement::from_poly(base.algebra(), inv).pow(k.unsigned_abs() as u32)
            }
        }
    }
}

fn gwa_scalar_inverse(x: &GwaElement) -> Result<Poly> {
    let zero = DegreeVector::zero(x.algebra().rank());
    if x.num_terms() == 1 && x.support()[0] == zero {
        x.coeff_at(&zero).inverse_unit()
    } else if x.is_zero() {
        Err(KernelError::DivisionByZero)
    } else {
        Err(KernelError::NegativeExponent)
    }
}

/// Evaluate into the skew group ring: `m[...]` atoms are the lattice basis
/// elements and division is by invertible degree-0 coefficients.
pub fn eval_skew(e: &Expr, ctx: &Arc<SkewContext>) -> Result<SkewElement> {
    match e {
        Expr::Int(_) | Expr::Sym(_) => Ok(SkewElement::from_ratfunc(
            ctx,
            eval_ratfunc(e, ctx.base())?,
        )?),
        Expr::Monoid(v) => {
            if v.len() != ctx.rank() {
                return Err(KernelError::ContextMismatch);
            }
            SkewElement::basis(ctx, DegreeVector(v.clone()))
        }
        Expr::Neg(x) => Ok(eval_skew(x, ctx)?.neg()),
        Expr::Add(a, b) => eval_skew(a, ctx)?.add(&eval_skew(b, ctx)?),
        Expr::Sub(a, b) => eval_skew(a, ctx)?.sub(&eval_skew(b, ctx)?),
        Expr::Mul(a, b) => eval_skew(a, ctx)?.mul(&eval_skew(b, ctx)?),
        Expr::Div(a, b) => {
            let num = eval_skew(a, ctx)?;
            let den = eval_skew(b, ctx)?;
            let zero = DegreeVector::zero(ctx.rank());
            if den.num_terms() == 1 && den.support().contains(&zero) {
                num.scale(&den.coeff_at(&zero).inverse()?)
            } else if den.is_zero() {
                Err(KernelError::DivisionByZero)
            } else {
                Err(KernelError::InvalidInput(
                    "skew division only by degree-0 coefficients".into(),
                ))
            }
        }
        Expr::Pow(b, k) => {
            let base = eval_skew(b, ctx)?;
            if *k >= 0 {
                base.pow(*k as u32)
            } else {
                let zero = DegreeVector::zero(ctx.rank());
                if base.num_terms() == 1 && base.support().contains(&zero) {
                    SkewElement::from_ratfunc(ctx, base.coeff_at(&zero).inverse()?)?
                        .pow(k.unsigned_abs() as u32)
                } else {
                    Err(KernelError::NegativeExponent)
                }
            }
        }
    }
}

pub fn parse_poly(src: &str, ring: &Arc<PolyRing>) -> Result<Poly> {
    eval_poly(&parse(src)?, ring)
}

pub fn parse_ratfunc(src: &str, ring: &Arc<PolyRing>) -> Result<RatFunc> {
    eval_ratfunc(&parse(src)?, ring)
}

pub fn parse_element(src: &str, algebra: &Arc<GwaPresentation>) -> Result<GwaElement> {
    eval_gwa(&parse(src)?, algebra)
}

pub fn parse_skew(src: &str, ctx: &Arc<SkewContext>) -> Result<SkewElement> {
    eval_skew(&parse(src)?, ctx)
}
