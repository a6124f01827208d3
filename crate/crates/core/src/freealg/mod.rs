//! Free associative algebras over a finite field and their tensor powers.

mod lambda;
mod parse;

pub use lambda::{ad_l_pow, ad_r_pow, bracket, jacobson_check, jacobson_terms, LambdaPoly};
pub use parse::{parse_poly, parse_tensor, ParseError, ScalarEnv};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write as _};

use crate::field::{FieldCtx, Fq};

pub type Letter = u8;
pub type Word = Vec<Letter>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub weight: u32,
    pub grouplike: bool,
    /// Multiplicative order, for group-like generators.
    pub order: Option<u32>,
}

impl Generator {
    pub fn new(name: &str, weight: u32) -> Self {
        Generator { name: name.into(), weight, grouplike: false, order: None }
    }

    pub fn grouplike(name: &str, order: u32) -> Self {
        Generator { name: name.into(), weight: 0, grouplike: true, order: Some(order) }
    }
}

/// Ordered generator list with weights and a precedence order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSet {
    gens: Vec<Generator>,
    /// `rank[i]` is the precedence of generator `i`; larger ranks compare higher.
    rank: Vec<u8>,
}

impl GenSet {
    /// Default precedence: group-likes above the rest, earlier declarations higher.
    pub fn new(gens: Vec<Generator>) -> Self {
        let mut idx: Vec<usize> = (0..gens.len()).collect();
        idx.sort_by_key(|&i| (gens[i].grouplike, core::cmp::Reverse(i)));
        let mut rank = alloc::vec![0u8; gens.len()];
        for (r, &i) in idx.iter().enumerate() {
            rank[i] = r as u8;
        }
        GenSet { gens, rank }
    }

    /// Explicit precedence, listed from lowest to highest.
    pub fn with_precedence(gens: Vec<Generator>, ascending: &[&str]) -> Option<Self> {
        if ascending.len() != gens.len() {
            return None;
        }
        let mut rank = alloc::vec![u8::MAX; gens.len()];
        for (r, name) in ascending.iter().enumerate() {
            let i = gens.iter().position(|g| g.name == *name)?;
            if rank[i] != u8::MAX {
                return None;
            }
            rank[i] = r as u8;
        }
        Some(GenSet { gens, rank })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn get(&self, i: Letter) -> &Generator {
        &self.gens[i as usize]
    }

    pub fn index(&self, name: &str) -> Option<Letter> {
        self.gens.iter().position(|g| g.name == name).map(|i| i as Letter)
    }

    pub fn rank(&self, i: Letter) -> u8 {
        self.rank[i as usize]
    }

    /// Names from lowest to highest precedence.
    pub fn precedence(&self) -> Vec<&str> {
        let mut idx: Vec<usize> = (0..self.gens.len()).collect();
        idx.sort_by_key(|&i| self.rank[i]);
        idx.into_iter().map(|i| self.gens[i].name.as_str()).collect()
    }

    pub fn weight(&self, w: &[Letter]) -> u64 {
        w.iter().map(|&l| self.gens[l as usize].weight as u64).sum()
    }

    pub fn is_group_word(&self, w: &[Letter]) -> bool {
        w.iter().all(|&l| self.gens[l as usize].grouplike)
    }

    /// Weight, then length, then precedence-lex from the left.
    pub fn cmp_wll(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        self.weight(a)
            .cmp(&self.weight(b))
            .then(a.len().cmp(&b.len()))
            .then_with(|| {
                for (x, y) in a.iter().zip(b) {
                    match self.rank(*x).cmp(&self.rank(*y)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }

    pub fn word_str(&self, w: &[Letter]) -> String {
        let mut s = String::new();
        write_word(&mut s, self, w).unwrap();
        s
    }
}

fn write_word(out: &mut impl fmt::Write, gens: &GenSet, w: &[Letter]) -> fmt::Result {
    if w.is_empty() {
        return out.write_char('1');
    }
    let mut i = 0;
    let mut first = true;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        if !first {
            out.write_char('*')?;
        }
        first = false;
        out.write_str(&gens.get(w[i]).name)?;
        if j - i > 1 {
            write!(out, "^{}", j - i)?;
        }
        i = j;
    }
    Ok(())
}

/// Sparse noncommutative polynomial; no stored term has a zero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcPoly {
    terms: BTreeMap<Word, Fq>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn constant(c: Fq) -> Self {
        NcPoly::monomial(Word::new(), c)
    }

    pub fn one() -> Self {
        NcPoly::constant(Fq::ONE)
    }

    pub fn monomial(w: Word, c: Fq) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NcPoly { terms }
    }

    pub fn word(w: Word) -> Self {
        NcPoly::monomial(w, Fq::ONE)
    }

    pub fn gen(l: Letter) -> Self {
        NcPoly::word(alloc::vec![l])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, Fq)> + '_ {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Fq)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &[Letter]) -> Fq {
        self.terms.get(w).copied().unwrap_or(Fq::ZERO)
    }

    /// Constant term as a scalar, if the polynomial has no other terms.
    pub fn as_scalar(&self) -> Option<Fq> {
        match self.terms.len() {
            0 => Some(Fq::ZERO),
            1 => self.terms.get(&Word::new()).copied(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, ctx: &FieldCtx, w: Word, c: Fq) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = ctx.add(*e.get(), c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, ctx: &FieldCtx, other: &NcPoly, c: Fq) {
        if c.is_zero() {
            return;
        }
        for (w, &d) in &other.terms {
            self.add_term(ctx, w.clone(), ctx.mul(c, d));
        }
    }

    pub fn add_assign(&mut self, ctx: &FieldCtx, other: &NcPoly) {
        self.add_scaled(ctx, other, Fq::ONE);
    }

    pub fn sub_assign(&mut self, ctx: &FieldCtx, other: &NcPoly) {
        self.add_scaled(ctx, other, ctx.neg(Fq::ONE));
    }

    pub fn sum(ctx: &FieldCtx, a: &NcPoly, b: &NcPoly) -> NcPoly {
        let mut r = a.clone();
        r.add_assign(ctx, b);
        r
    }

    pub fn diff(ctx: &FieldCtx, a: &NcPoly, b: &NcPoly) -> NcPoly {
        let mut r = a.clone();
        r.sub_assign(ctx, b);
        r
    }

    pub fn scale(&self, ctx: &FieldCtx, c: Fq) -> NcPoly {
        let mut r = NcPoly::zero();
        r.add_scaled(ctx, self, c);
        r
    }

    pub fn neg(&self, ctx: &FieldCtx) -> NcPoly {
        self.scale(ctx, ctx.neg(Fq::ONE))
    }

    pub fn mul(ctx: &FieldCtx, a: &NcPoly, b: &NcPoly) -> NcPoly {
        let mut r = NcPoly::zero();
        for (u, &c) in &a.terms {
            for (v, &d) in &b.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                r.add_term(ctx, w, ctx.mul(c, d));
            }
        }
        r
    }

    pub fn pow(ctx: &FieldCtx, a: &NcPoly, e: u32) -> NcPoly {
        let mut r = NcPoly::one();
        for _ in 0..e {
            r = NcPoly::mul(ctx, &r, a);
        }
        r
    }

    /// Multiplies every word on the left by `u` and on the right by `v`.
    pub fn sandwich(&self, ctx: &FieldCtx, u: &[Letter], v: &[Letter], c: Fq) -> NcPoly {
        let mut r = NcPoly::zero();
        for (w, &d) in &self.terms {
            let mut x = u.to_vec();
            x.extend_from_slice(w);
            x.extend_from_slice(v);
            r.add_term(ctx, x, ctx.mul(c, d));
        }
        r
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.terms.keys().flat_map(|w| w.iter().copied()).max()
    }

    /// Substitutes `images[l]` for each letter `l`; with `antihom` the factors
    /// of every word are multiplied in reverse order. `reduce` is applied after
    /// each multiplication.
    pub fn substitute_with(
        &self,
        ctx: &FieldCtx,
        images: &[NcPoly],
        antihom: bool,
        mut reduce: impl FnMut(NcPoly) -> NcPoly,
    ) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, &c) in &self.terms {
            let mut acc = NcPoly::constant(c);
            let letters: Vec<Letter> =
                if antihom { w.iter().rev().copied().collect() } else { w.clone() };
            for l in letters {
                acc = reduce(NcPoly::mul(ctx, &acc, &images[l as usize]));
                if acc.is_zero() {
                    break;
                }
            }
            out.add_assign(ctx, &acc);
        }
        out
    }

    pub fn substitute(&self, ctx: &FieldCtx, images: &[NcPoly], antihom: bool) -> NcPoly {
        self.substitute_with(ctx, images, antihom, |p| p)
    }

    /// Terms sorted from the largest word downwards in the weight-length-lex order.
    pub fn sorted_terms<'a>(&'a self, gens: &GenSet) -> Vec<(&'a Word, Fq)> {
        let mut v: Vec<(&Word, Fq)> = self.terms().collect();
        v.sort_by(|a, b| gens.cmp_wll(b.0, a.0));
        v
    }

    pub fn display<'a>(&'a self, ctx: &'a FieldCtx, gens: &'a GenSet) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, ctx, gens }
    }
}

fn write_coeff_word(
    out: &mut impl fmt::Write,
    ctx: &FieldCtx,
    gens: &GenSet,
    w: &[Letter],
    c: Fq,
    first: bool,
) -> fmt::Result {
    let minus_one = ctx.neg(Fq::ONE);
    let negative = c == minus_one && ctx.p() > 2;
    if first {
        if negative {
            out.write_str("-")?;
        }
    } else if negative {
        out.write_str(" - ")?;
    } else {
        out.write_str(" + ")?;
    }
    let unit = c == Fq::ONE || negative;
    if unit {
        write_word(out, gens, w)
    } else if w.is_empty() {
        write_scalar(out, ctx, c)
    } else {
        write_scalar(out, ctx, c)?;
        out.write_char('*')?;
        write_word(out, gens, w)
    }
}

fn write_scalar(out: &mut impl fmt::Write, ctx: &FieldCtx, c: Fq) -> fmt::Result {
    write!(out, "{}", ctx.display(c))
}

pub struct PolyDisplay<'a> {
    poly: &'a NcPoly,
    ctx: &'a FieldCtx,
    gens: &'a GenSet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_char('0');
        }
        for (i, (w, c)) in self.poly.sorted_terms(self.gens).into_iter().enumerate() {
            write_coeff_word(f, self.ctx, self.gens, w, c, i == 0)?;
        }
        Ok(())
    }
}

/// Sparse element of the `rank`-fold tensor power of the free algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorPoly {
    rank: usize,
    terms: BTreeMap<Vec<Word>, Fq>,
}

impl TensorPoly {
    pub fn zero(rank: usize) -> Self {
        TensorPoly { rank, terms: BTreeMap::new() }
    }

    pub fn unit(rank: usize) -> Self {
        let mut t = TensorPoly::zero(rank);
        t.terms.insert(alloc::vec![Word::new(); rank], Fq::ONE);
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, Fq)> + '_ {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coeff(&self, ws: &[Word]) -> Fq {
        self.terms.get(ws).copied().unwrap_or(Fq::ZERO)
    }

    pub fn add_term(&mut self, ctx: &FieldCtx, ws: Vec<Word>, c: Fq) {
        debug_assert_eq!(ws.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(ws) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = ctx.add(*e.get(), c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, ctx: &FieldCtx, other: &TensorPoly, c: Fq) {
        debug_assert_eq!(self.rank, other.rank);
        if c.is_zero() {
            return;
        }
        for (w, &d) in &other.terms {
            self.add_term(ctx, w.clone(), ctx.mul(c, d));
        }
    }

    pub fn add_assign(&mut self, ctx: &FieldCtx, other: &TensorPoly) {
        self.add_scaled(ctx, other, Fq::ONE);
    }

    pub fn sub_assign(&mut self, ctx: &FieldCtx, other: &TensorPoly) {
        self.add_scaled(ctx, other, ctx.neg(Fq::ONE));
    }

    pub fn scale(&self, ctx: &FieldCtx, c: Fq) -> TensorPoly {
        let mut r = TensorPoly::zero(self.rank);
        r.add_scaled(ctx, self, c);
        r
    }

    /// `a_1 (x) ... (x) a_n`.
    pub fn from_factors(ctx: &FieldCtx, factors: &[NcPoly]) -> TensorPoly {
        let mut acc = TensorPoly::unit(0);
        for f in factors {
            acc = acc.tensor_right(ctx, f);
        }
        acc
    }

    /// Appends one more tensor factor on the right.
    pub fn tensor_right(&self, ctx: &FieldCtx, f: &NcPoly) -> TensorPoly {
        let mut r = TensorPoly::zero(self.rank + 1);
        for (ws, &c) in &self.terms {
            for (w, d) in f.terms() {
                let mut v = ws.clone();
                v.push(w.clone());
                r.add_term(ctx, v, ctx.mul(c, d));
            }
        }
        r
    }

    pub fn tensor(ctx: &FieldCtx, a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
        let mut r = TensorPoly::zero(a.rank + b.rank);
        for (u, &c) in &a.terms {
            for (v, &d) in &b.terms {
                let mut w = u.clone();
                w.extend(v.iter().cloned());
                r.add_term(ctx, w, ctx.mul(c, d));
            }
        }
        r
    }

    /// Componentwise product; no braiding.
    pub fn mul(ctx: &FieldCtx, a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
        debug_assert_eq!(a.rank, b.rank);
        let mut r = TensorPoly::zero(a.rank);
        for (u, &c) in &a.terms {
            for (v, &d) in &b.terms {
                let w: Vec<Word> = u
                    .iter()
                    .zip(v)
                    .map(|(x, y)| {
                        let mut z = x.clone();
                        z.extend_from_slice(y);
                        z
                    })
                    .collect();
                r.add_term(ctx, w, ctx.mul(c, d));
            }
        }
        r
    }

    /// Rewrites every factor with `f` and re-expands.
    pub fn map_factors(
        &self,
        ctx: &FieldCtx,
        mut f: impl FnMut(usize, &Word) -> NcPoly,
    ) -> TensorPoly {
        let mut r = TensorPoly::zero(self.rank);
        let mut cache: BTreeMap<(usize, Word), NcPoly> = BTreeMap::new();
        for (ws, &c) in &self.terms {
            let mut partial: Vec<(Vec<Word>, Fq)> = alloc::vec![(Vec::new(), c)];
            for (i, w) in ws.iter().enumerate() {
                let img = cache.entry((i, w.clone())).or_insert_with(|| f(i, w)).clone();
                let mut next = Vec::new();
                for (pre, pc) in &partial {
                    for (iw, ic) in img.terms() {
                        let mut v = pre.clone();
                        v.push(iw.clone());
                        next.push((v, ctx.mul(*pc, ic)));
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            for (v, pc) in partial {
                r.add_term(ctx, v, pc);
            }
        }
        r
    }

    pub fn display<'a>(&'a self, ctx: &'a FieldCtx, gens: &'a GenSet) -> TensorDisplay<'a> {
        TensorDisplay { t: self, ctx, gens }
    }
}

pub struct TensorDisplay<'a> {
    t: &'a TensorPoly,
    ctx: &'a FieldCtx,
    gens: &'a GenSet,
}

impl fmt::Display for TensorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return f.write_char('0');
        }
        let mut v: Vec<(&Vec<Word>, Fq)> = self.t.terms().collect();
        v.sort_by(|a, b| {
            for (x, y) in b.0.iter().zip(a.0) {
                match self.gens.cmp_wll(x, y) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        });
        for (i, (ws, c)) in v.into_iter().enumerate() {
            let minus_one = self.ctx.neg(Fq::ONE);
            let negative = c == minus_one && self.ctx.p() > 2;
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if c != Fq::ONE && !negative {
                write_scalar(f, self.ctx, c)?;
                f.write_char('*')?;
            }
            for (j, w) in ws.iter().enumerate() {
                if j > 0 {
                    f.write_str("(#)")?;
                }
                write_word(f, self.gens, w)?;
            }
        }
        Ok(())
    }
}
