//! Integer expressions over prime and index variables, used for exponents,
//! admissibility conditions and `{...}` placeholders in templates.
//!
//! Booleans are `0`/`1`. `a | b` means `a` divides `b`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntExprError {
    Syntax { src: String, at: usize },
    Unbound(String),
    Arithmetic(String),
}

impl core::fmt::Display for IntExprError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            IntExprError::Syntax { src, at } => write!(f, "bad integer expression `{src}` at byte {at}"),
            IntExprError::Unbound(v) => write!(f, "unbound integer variable `{v}`"),
            IntExprError::Arithmetic(s) => write!(f, "arithmetic error in `{s}`"),
        }
    }
}

/// Variable bindings, looked up by name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntEnv {
    vars: Vec<(String, i64)>,
}

impl IntEnv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, name: &str, v: i64) {
        match self.vars.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = v,
            None => self.vars.push((name.to_string(), v)),
        }
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.vars.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn vars(&self) -> &[(String, i64)] {
        &self.vars
    }
}

struct Parser<'a> {
    src: &'a str,
    b: &'a [u8],
    i: usize,
    env: &'a IntEnv,
}

type R = Result<i64, IntExprError>;

impl Parser<'_> {
    fn err(&self) -> IntExprError {
        IntExprError::Syntax { src: self.src.to_string(), at: self.i }
    }

    fn arith(&self) -> IntExprError {
        IntExprError::Arithmetic(self.src.to_string())
    }

    fn ws(&mut self) {
        while self.i < self.b.len() && self.b[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.ws();
        if self.src[self.i..].starts_with(tok) {
            self.i += tok.len();
            true
        } else {
            false
        }
    }

    /// Eats `tok` unless it is the prefix of `longer`.
    fn eat_not(&mut self, tok: &str, longer: &str) -> bool {
        self.ws();
        if self.src[self.i..].starts_with(longer) {
            return false;
        }
        self.eat(tok)
    }

    fn or(&mut self) -> R {
        let mut v = self.and()?;
        while self.eat("||") {
            let w = self.and()?;
            v = i64::from(v != 0 || w != 0);
        }
        Ok(v)
    }

    fn and(&mut self) -> R {
        let mut v = self.not()?;
        while self.eat("&&") {
            let w = self.not()?;
            v = i64::from(v != 0 && w != 0);
        }
        Ok(v)
    }

    fn not(&mut self) -> R {
        if self.eat_not("!", "!=") {
            return Ok(i64::from(self.not()? == 0));
        }
        self.cmp()
    }

    fn cmp(&mut self) -> R {
        let a = self.divides()?;
        for (tok, f) in [
            ("==", (|a, b| a == b) as fn(i64, i64) -> bool),
            ("!=", |a, b| a != b),
            ("<=", |a, b| a <= b),
            (">=", |a, b| a >= b),
            ("<", |a, b| a < b),
            (">", |a, b| a > b),
        ] {
            if self.eat(tok) {
                let b = self.divides()?;
                return Ok(i64::from(f(a, b)));
            }
        }
        Ok(a)
    }

    fn divides(&mut self) -> R {
        let a = self.sum()?;
        if self.eat_not("|", "||") {
            let b = self.sum()?;
            if a == 0 {
                return Ok(i64::from(b == 0));
            }
            return Ok(i64::from(b.rem_euclid(a) == 0));
        }
        Ok(a)
    }

    fn sum(&mut self) -> R {
        let mut v = self.prod()?;
        loop {
            if self.eat("+") {
                v = v.checked_add(self.prod()?).ok_or_else(|| self.arith())?;
            } else if self.eat("-") {
                v = v.checked_sub(self.prod()?).ok_or_else(|| self.arith())?;
            } else {
                return Ok(v);
            }
        }
    }

    fn prod(&mut self) -> R {
        let mut v = self.unary()?;
        loop {
            if self.eat("*") {
                v = v.checked_mul(self.unary()?).ok_or_else(|| self.arith())?;
            } else if self.eat("%") {
                let m = self.unary()?;
                v = v.checked_rem_euclid(m).ok_or_else(|| self.arith())?;
            } else if self.eat("/") {
                let m = self.unary()?;
                v = v.checked_div_euclid(m).ok_or_else(|| self.arith())?;
            } else {
                return Ok(v);
            }
        }
    }

    fn unary(&mut self) -> R {
        if self.eat("-") {
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.eat("^") {
            let e = self.unary()?;
            let e = u32::try_from(e).map_err(|_| self.arith())?;
            return base.checked_pow(e).ok_or_else(|| self.arith());
        }
        Ok(base)
    }

    fn atom(&mut self) -> R {
        self.ws();
        let start = self.i;
        if self.eat("(") {
            let v = self.or()?;
            if !self.eat(")") {
                return Err(self.err());
            }
            return Ok(v);
        }
        while self.i < self.b.len() && self.b[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if self.i > start {
            return self.src[start..self.i].parse().map_err(|_| self.arith());
        }
        while self.i < self.b.len() && (self.b[self.i].is_ascii_alphanumeric() || self.b[self.i] == b'_') {
            self.i += 1;
        }
        if self.i == start {
            return Err(self.err());
        }
        let name = &self.src[start..self.i];
        if name == "fact" {
            if !self.eat("(") {
                return Err(self.err());
            }
            let n = self.or()?;
            if !self.eat(")") || n < 0 {
                return Err(self.err());
            }
            return (1..=n).try_fold(1i64, |acc, k| acc.checked_mul(k)).ok_or_else(|| self.arith());
        }
        self.env.get(name).ok_or_else(|| IntExprError::Unbound(name.to_string()))
    }
}

pub fn eval(src: &str, env: &IntEnv) -> R {
    let mut p = Parser { src, b: src.as_bytes(), i: 0, env };
    let v = p.or()?;
    p.ws();
    if p.i != p.b.len() {
        return Err(p.err());
    }
    Ok(v)
}

pub fn holds(src: &str, env: &IntEnv) -> Result<bool, IntExprError> {
    eval(src, env).map(|v| v != 0)
}

/// Replaces every `{expr}` by its decimal value.
pub fn render(template: &str, env: &IntEnv) -> Result<String, IntExprError> {
    let mut out = String::with_capacity(template.len());
    let mut rest = template;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .ok_or_else(|| IntExprError::Syntax { src: template.to_string(), at: open })?;
        let v = eval(&rest[open + 1..open + close], env)?;
        out.push_str(&alloc::format!("{v}"));
        rest = &rest[open + close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

/// Identifiers occurring in `src` outside `{...}` placeholders.
pub fn identifiers(src: &str) -> Vec<&str> {
    let b = src.as_bytes();
    let mut out: Vec<&str> = Vec::new();
    let (mut i, mut depth) = (0, 0usize);
    while i < b.len() {
        match b[i] {
            b'{' => depth += 1,
            b'}' => depth = depth.saturating_sub(1),
            c if depth == 0 && (c.is_ascii_alphabetic() || c == b'_') => {
                let s = i;
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                if !out.contains(&&src[s..i]) {
                    out.push(&src[s..i]);
                }
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    out
}
