//! Expression syntax: sums and differences of `*`-products of integers,
//! generator names and named scalars, with `^` taking an integer exponent.
//! Tensor factors are separated by `(#)`, which binds looser than `*`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{GenSet, NcPoly, TensorPoly};
#[cfg(test)]
use super::Word;
use crate::field::{FieldCtx, Fq};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.pos, self.msg)
    }
}

impl core::error::Error for ParseError {}

/// Named field constants visible to the parser.
#[derive(Clone, Debug, Default)]
pub struct ScalarEnv {
    values: BTreeMap<String, Fq>,
}

impl ScalarEnv {
    pub fn new() -> Self {
        ScalarEnv::default()
    }

    /// `w` bound to the field generator.
    pub fn for_field(ctx: &FieldCtx) -> Self {
        let mut env = ScalarEnv::new();
        env.set("w", ctx.generator());
        env
    }

    pub fn set(&mut self, name: &str, v: Fq) -> &mut Self {
        self.values.insert(name.to_string(), v);
        self
    }

    pub fn get(&self, name: &str) -> Option<Fq> {
        self.values.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Fq)> + '_ {
        self.values.iter().map(|(k, &v)| (k.as_str(), v))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Tensor,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            b'(' => {
                if bytes.get(i + 1) == Some(&b'#') && bytes.get(i + 2) == Some(&b')') {
                    out.push((i, Tok::Tensor));
                    i += 3;
                } else {
                    out.push((i, Tok::LParen));
                    i += 1;
                }
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i].parse::<u64>().map_err(|_| ParseError {
                    pos: start,
                    msg: "integer literal out of range".into(),
                })?;
                out.push((start, Tok::Num(n)));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
            }
            _ => {
                return Err(ParseError { pos: i, msg: format!("unexpected character {:?}", c as char) })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a FieldCtx,
    gens: &'a GenSet,
    env: &'a ScalarEnv,
}

/// A parsed factor: either a known scalar or a polynomial.
enum Val {
    Scalar(Fq),
    Poly(NcPoly),
}

impl Val {
    fn into_poly(self) -> NcPoly {
        match self {
            Val::Scalar(c) => NcPoly::constant(c),
            Val::Poly(p) => p,
        }
    }
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.here(), msg: msg.into() })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = self.term()?.into_poly();
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?.into_poly();
                    acc.add_assign(self.ctx, &t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?.into_poly();
                    acc.sub_assign(self.ctx, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            let rhs = self.unary()?;
            acc = match (acc, rhs) {
                (Val::Scalar(a), Val::Scalar(b)) => Val::Scalar(self.ctx.mul(a, b)),
                (Val::Scalar(a), Val::Poly(b)) => Val::Poly(b.scale(self.ctx, a)),
                (Val::Poly(a), Val::Scalar(b)) => Val::Poly(a.scale(self.ctx, b)),
                (Val::Poly(a), Val::Poly(b)) => Val::Poly(NcPoly::mul(self.ctx, &a, &b)),
            };
        }
        match self.peek() {
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                self.err("expected an operator; juxtaposition is not multiplication")
            }
            _ => Ok(acc),
        }
    }

    fn unary(&mut self) -> Result<Val, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(match self.unary()? {
                Val::Scalar(c) => Val::Scalar(self.ctx.neg(c)),
                Val::Poly(p) => Val::Poly(p.neg(self.ctx)),
            });
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let neg = if let Some(Tok::Minus) = self.peek() {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            Some(Tok::Num(n)) if n <= i64::MAX as u64 => Ok(if neg { -(n as i64) } else { n as i64 }),
            _ => {
                self.pos -= 1;
                self.err("expected an integer exponent")
            }
        }
    }

    fn power(&mut self) -> Result<Val, ParseError> {
        let (start, base, gen_order) = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let e = self.exponent()?;
            return match base {
                Val::Scalar(c) => self
                    .ctx
                    .pow_signed(c, e)
                    .map(Val::Scalar)
                    .map_err(|_| ParseError { pos: start, msg: "inverse of zero".into() }),
                Val::Poly(p) => {
                    let e = if e < 0 {
                        match gen_order {
                            Some(n) => (e.rem_euclid(n as i64)) as u32,
                            None => {
                                return Err(ParseError {
                                    pos: start,
                                    msg: "negative exponent needs a group-like generator of known order".into(),
                                })
                            }
                        }
                    } else {
                        u32::try_from(e).map_err(|_| ParseError { pos: start, msg: "exponent too large".into() })?
                    };
                    Ok(Val::Poly(NcPoly::pow(self.ctx, &p, e)))
                }
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<(usize, Val, Option<u32>), ParseError> {
        let start = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => Ok((start, Val::Scalar(self.ctx.from_int((n % self.ctx.p() as u64) as i64)), None)),
            Some(Tok::Ident(name)) => {
                if let Some(l) = self.gens.index(&name) {
                    let g = self.gens.get(l);
                    let ord = if g.grouplike { g.order } else { None };
                    Ok((start, Val::Poly(NcPoly::gen(l)), ord))
                } else if let Some(c) = self.env.get(&name) {
                    Ok((start, Val::Scalar(c), None))
                } else {
                    Err(ParseError { pos: start, msg: format!("unknown identifier `{name}`") })
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => {}
                    _ => {
                        self.pos -= 1;
                        return self.err("expected `)`");
                    }
                }
                match inner.as_scalar() {
                    Some(c) => Ok((start, Val::Scalar(c), None)),
                    None => Ok((start, Val::Poly(inner), None)),
                }
            }
            Some(_) => {
                self.pos -= 1;
                self.err("expected a number, identifier or `(`")
            }
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial over `gens`; names not in `gens` are looked up in `env`.
pub fn parse_poly(
    src: &str,
    ctx: &FieldCtx,
    gens: &GenSet,
    env: &ScalarEnv,
) -> Result<NcPoly, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len(), ctx, gens, env };
    let r = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("trailing input");
    }
    Ok(r)
}

/// Parses a tensor expression such as `x(#)1 + g(#)x`; every summand must
/// have `rank` factors. The literal `0` is accepted as the zero tensor.
pub fn parse_tensor(
    src: &str,
    rank: usize,
    ctx: &FieldCtx,
    gens: &GenSet,
    env: &ScalarEnv,
) -> Result<TensorPoly, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len(), ctx, gens, env };
    let mut acc = TensorPoly::zero(rank);
    let mut sign = Fq::ONE;
    loop {
        let start = p.here();
        let mut factors = alloc::vec![p.term()?.into_poly()];
        while let Some(Tok::Tensor) = p.peek() {
            p.bump();
            factors.push(p.term()?.into_poly());
        }
        if factors.len() == 1 && factors[0].is_zero() {
            // `0` stands for the zero tensor of any rank.
        } else if factors.len() != rank {
            return Err(ParseError {
                pos: start,
                msg: format!("expected {rank} tensor factors, found {}", factors.len()),
            });
        } else {
            let t = TensorPoly::from_factors(ctx, &factors);
            acc.add_scaled(ctx, &t, sign);
        }
        match p.peek() {
            Some(Tok::Plus) => {
                p.bump();
                sign = Fq::ONE;
            }
            Some(Tok::Minus) => {
                p.bump();
                sign = ctx.neg(Fq::ONE);
            }
            None => return Ok(acc),
            _ => return p.err("expected `+`, `-` or end of input"),
        }
    }
}

#[cfg(test)]
fn word_of(gens: &GenSet, names: &[&str]) -> Word {
    names.iter().map(|n| gens.index(n).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::freealg::Generator;

    fn setup() -> (FieldCtx, GenSet, ScalarEnv) {
        let ctx = make_field(2, &[3]).unwrap();
        let gens = GenSet::new(alloc::vec![Generator::grouplike("g", 3), Generator::new("x", 1)]);
        let mut env = ScalarEnv::for_field(&ctx);
        env.set("xi", ctx.root(3).unwrap());
        (ctx, gens, env)
    }

    #[test]
    fn parses_products_and_sums() {
        let (ctx, gens, env) = setup();
        let p = parse_poly("g*x - xi*x*g", &ctx, &gens, &env).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&word_of(&gens, &["g", "x"])), Fq::ONE);
        assert_eq!(p.coeff(&word_of(&gens, &["x", "g"])), ctx.root(3).unwrap());
    }

    #[test]
    fn rejects_juxtaposition() {
        let (ctx, gens, env) = setup();
        let e = parse_poly("g x", &ctx, &gens, &env).unwrap_err();
        assert_eq!(e.pos, 2);
        assert!(parse_poly("2x", &ctx, &gens, &env).is_err());
    }

    #[test]
    fn negative_powers_of_group_likes() {
        let (ctx, gens, env) = setup();
        let a = parse_poly("g^-1", &ctx, &gens, &env).unwrap();
        let b = parse_poly("g^2", &ctx, &gens, &env).unwrap();
        assert_eq!(a, b);
        assert!(parse_poly("x^-1", &ctx, &gens, &env).is_err());
    }

    #[test]
    fn display_round_trips() {
        let (ctx, gens, env) = setup();
        let p = parse_poly("(1 + g)^3*x + w^2*x^2 - xi", &ctx, &gens, &env).unwrap();
        let s = alloc::format!("{}", p.display(&ctx, &gens));
        assert_eq!(parse_poly(&s, &ctx, &gens, &env).unwrap(), p);
    }

    #[test]
    fn tensors() {
        let (ctx, gens, env) = setup();
        let t = parse_tensor("x(#)1 + g(#)x", 2, &ctx, &gens, &env).unwrap();
        assert_eq!(t.len(), 2);
        let s = alloc::format!("{}", t.display(&ctx, &gens));
        assert_eq!(parse_tensor(&s, 2, &ctx, &gens, &env).unwrap(), t);
        assert!(parse_tensor("x(#)1(#)g", 2, &ctx, &gens, &env).is_err());
        assert!(parse_tensor("0", 2, &ctx, &gens, &env).unwrap().is_zero());
    }
}
