//! Parametrized presentations of the classified pointed Hopf algebras of
//! dimension `p^2 q`, `p q^2`, `p q r` and `p q` in characteristic `p`.
//!
//! Each [`CaseEntry`] holds one relation template. Templates are presentation
//! syntax with `{expr}` integer placeholders over `p, q, r, t` and the case's
//! integer parameters; field parameters appear as scalar names. Constraints are
//! field expressions that must vanish.

mod entries;
pub mod intexpr;
mod tables;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{is_prime, make_field, FieldCtx, FieldError, Fq};
use crate::freealg::{parse_poly, GenSet, Generator, ParseError, ScalarEnv};
use crate::hopf::{coproduct_tail, HopfPresentation, PresentationError, PresentationSpec, TailKind};
use intexpr::{IntEnv, IntExprError};

pub use entries::CATALOG;
pub use tables::{enumerate_yd, graded_relations, nichols_dimension, TableRow, YdEnumeration, YdRow};

macro_rules! case_ids {
    ($($v:ident),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CaseId { $($v),* }

        impl CaseId {
            pub const ALL: &'static [CaseId] = &[$(CaseId::$v),*];

            pub fn name(self) -> &'static str {
                match self { $(CaseId::$v => stringify!($v)),* }
            }
        }
    };
}

case_ids!(
    A1, A2, A3, A4a, A4b, A5, A6, B1a, B1b, B2a, C1a, C1b, C1c, C1d, C1e, C2a, C2b, C3a1, C3a2, C3b, C3c1,
    C3c2, C3c3, C3c4, C4a1, C4a2, C4b1, C4b2, C4c1, C4c2, C5a, C5b, D1a, D1b, D2a, D2b, D3a1, D3a2, D3b1, D3b2,
    D3b3, AA1, AA2, AB1a, AB1b, AB1c1, AB1c2, AB1d, AB1e, AB2a, AB2b, AB2c, AB2d, AB2e1, AB2e2, AB2f1, AB2f2,
    AC1, AD, BA1, BA2, BA3, BA4, BA5a, BA5b, BA6a, BA6b, BA7a, BA7b, BB1, BB2, CA1, CA2, CA3a, CA3b,
);

impl CaseId {
    pub fn entry(self) -> &'static CaseEntry {
        &CATALOG[self as usize]
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for CaseId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CatalogError::UnknownCase(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DimClass {
    P2Q,
    PQ2,
    PQR,
    PQ,
}

impl DimClass {
    pub const ALL: [DimClass; 4] = [DimClass::P2Q, DimClass::PQ2, DimClass::PQR, DimClass::PQ];

    pub fn name(self) -> &'static str {
        match self {
            DimClass::P2Q => "p2q",
            DimClass::PQ2 => "pq2",
            DimClass::PQR => "pqr",
            DimClass::PQ => "pq",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            DimClass::P2Q => "p^2*q",
            DimClass::PQ2 => "p*q^2",
            DimClass::PQR => "p*q*r",
            DimClass::PQ => "p*q",
        }
    }

    pub fn arity(self) -> usize {
        if self == DimClass::PQR {
            3
        } else {
            2
        }
    }

    pub fn dimension(self, pr: Primes) -> u64 {
        let (p, q) = (pr.p as u64, pr.q as u64);
        match self {
            DimClass::P2Q => p * p * q,
            DimClass::PQ2 => p * q * q,
            DimClass::PQR => p * q * pr.r.unwrap_or(1) as u64,
            DimClass::PQ => p * q,
        }
    }
}

impl core::str::FromStr for DimClass {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.to_ascii_lowercase().replace(['^', '²', '*'], "");
        let t = t.replace("p2q", "ppq").replace("pq2", "pqq");
        match t.as_str() {
            "ppq" => Ok(DimClass::P2Q),
            "pqq" => Ok(DimClass::PQ2),
            "pqr" => Ok(DimClass::PQR),
            "pq" => Ok(DimClass::PQ),
            _ => Err(CatalogError::UnknownClass(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Primes {
    pub p: u32,
    pub q: u32,
    pub r: Option<u32>,
}

impl Primes {
    pub fn pq(p: u32, q: u32) -> Self {
        Primes { p, q, r: None }
    }

    pub fn pqr(p: u32, q: u32, r: u32) -> Self {
        Primes { p, q, r: Some(r) }
    }
}

impl fmt::Display for Primes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.r {
            Some(r) => write!(f, "({}, {}, {})", self.p, self.q, r),
            None => write!(f, "({}, {})", self.p, self.q),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamDomain {
    /// `{0, 1}`.
    Binary,
    /// Any field element.
    Field,
    /// Integers in `lo..=hi`, bounds as integer expressions.
    Range { lo: &'static str, hi: &'static str },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamDecl {
    pub name: &'static str,
    pub domain: ParamDomain,
}

impl ParamDecl {
    pub fn is_int(&self) -> bool {
        matches!(self.domain, ParamDomain::Range { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenDecl {
    /// Group-like of the given order.
    GroupLike(&'static str, &'static str),
    /// Non-group-like generator of the given weight.
    Free(&'static str, &'static str),
}

/// Non-primitive coproduct term of a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tail {
    /// `omega_0(x)`.
    Omega0 { x: &'static str },
    /// `omega_theta(x)` with group-like `g`.
    OmegaTheta { x: &'static str, g: &'static str, theta: u32 },
    /// `theta_q(x)` with group-like `g` and root `xi` of order `q`.
    ThetaQ { x: &'static str, g: &'static str, xi: &'static str },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    /// Stated with the family.
    Stated,
    /// Not stated but required for the stated dimension.
    Forced,
}

impl Origin {
    pub fn name(self) -> &'static str {
        match self {
            Origin::Stated => "stated",
            Origin::Forced => "forced",
        }
    }
}

/// Field expression that must vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub expr: &'static str,
    pub origin: Origin,
    /// Where the condition comes from.
    pub source: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseEntry {
    pub id: CaseId,
    pub class: DimClass,
    pub group: &'static str,
    /// Integer conditions on the primes and integer parameters.
    pub admissible: &'static [&'static str],
    /// `(order, modulus)`: `t` is the least integer of that multiplicative order.
    pub twist: Option<(&'static str, &'static str)>,
    pub roots: &'static [(&'static str, &'static str)],
    pub gens: &'static [GenDecl],
    /// Affine order maps `(generator, slope, intercept)`; weight order when empty.
    pub affine: &'static [(&'static str, &'static str, &'static str)],
    pub params: &'static [ParamDecl],
    /// Relations besides `g^N = 1` for group-likes.
    pub relations: &'static [&'static str],
    /// Coproducts of the non-group-like generators.
    pub coproduct: &'static [(&'static str, &'static str)],
    pub tails: &'static [(&'static str, Tail)],
    pub constraints: &'static [Constraint],
    /// Readings that differ from the literal source text.
    pub deviations: &'static [&'static str],
    pub caveat: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogError {
    UnknownCase(String),
    UnknownClass(String),
    BadPrimes { case: CaseId, reason: String },
    Inadmissible { case: CaseId, condition: &'static str },
    NoTwist { case: CaseId },
    UnknownParam { case: CaseId, name: String },
    OutOfDomain { case: CaseId, name: String, value: String },
    ConstraintViolated { case: CaseId, predicate: String, source: &'static str },
    Template { case: CaseId, err: IntExprError },
    Field(FieldError),
    Parse { what: String, err: ParseError },
    Presentation(PresentationError),
    UnknownRow(String),
    RowPrimes { row: TableRow, primes: Primes },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownCase(s) => write!(f, "unknown case `{s}`"),
            CatalogError::UnknownClass(s) => write!(f, "unknown dimension class `{s}`"),
            CatalogError::BadPrimes { case, reason } => write!(f, "{case}: {reason}"),
            CatalogError::Inadmissible { case, condition } => {
                write!(f, "{case}: primes violate the side condition `{condition}`")
            }
            CatalogError::NoTwist { case } => write!(f, "{case}: no semidirect twist exists at these primes"),
            CatalogError::UnknownParam { case, name } => write!(f, "{case}: no parameter `{name}`"),
            CatalogError::OutOfDomain { case, name, value } => {
                write!(f, "{case}: `{value}` is outside the domain of `{name}`")
            }
            CatalogError::ConstraintViolated { case, predicate, source } => {
                write!(f, "{case}: ambiguity condition `{predicate} = 0` ({source}) fails")
            }
            CatalogError::Template { case, err } => write!(f, "{case}: {err}"),
            CatalogError::Field(e) => write!(f, "{e}"),
            CatalogError::Parse { what, err } => write!(f, "{what}: {err}"),
            CatalogError::Presentation(e) => write!(f, "{e}"),
            CatalogError::UnknownRow(s) => write!(f, "unknown table row `{s}`"),
            CatalogError::RowPrimes { row, primes } => {
                write!(f, "primes {primes} are not admissible for table row {}", row.name())
            }
        }
    }
}

impl core::error::Error for CatalogError {}

impl From<FieldError> for CatalogError {
    fn from(e: FieldError) -> Self {
        CatalogError::Field(e)
    }
}

impl From<PresentationError> for CatalogError {
    fn from(e: PresentationError) -> Self {
        CatalogError::Presentation(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Rejects any constraint violation and inadmissible primes.
    Strict,
    /// Records violations instead.
    Permissive,
}

/// Primes plus `name = literal` assignments; unset parameters are resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseParams {
    pub primes: Primes,
    pub values: Vec<(String, String)>,
}

impl CaseParams {
    pub fn new(primes: Primes) -> Self {
        CaseParams { primes, values: Vec::new() }
    }

    pub fn with(mut self, name: &str, value: &str) -> Self {
        self.values.retain(|(n, _)| n != name);
        self.values.push((name.to_string(), value.to_string()));
        self
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueSource {
    Given,
    /// Unset, and exactly one of `0, 1` satisfies the constraints on it.
    Required,
    /// Unset and defaulted to `0`.
    Default,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub name: &'static str,
    pub value: Fq,
    pub source: ValueSource,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub constraint: Constraint,
    /// Constraint with integer placeholders substituted.
    pub predicate: String,
    pub value: Fq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintStatus {
    /// Vanishes identically at these primes.
    Vacuous,
    Active,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintLine {
    pub constraint: Constraint,
    pub predicate: String,
    /// Reduced form in the parameters, `0` when vacuous.
    pub reduced: String,
    pub status: ConstraintStatus,
}

/// A case at concrete primes and parameters.
#[derive(Clone, Debug)]
pub struct Instance {
    pub id: CaseId,
    pub primes: Primes,
    pub ctx: Arc<FieldCtx>,
    /// `p, q, r, t` and integer parameters.
    pub ints: IntEnv,
    pub values: Vec<Assignment>,
    pub inadmissible: Vec<&'static str>,
    pub violations: Vec<Violation>,
    pub spec: PresentationSpec,
}

impl Instance {
    pub fn expected_dim(&self) -> u64 {
        self.id.entry().class.dimension(self.primes)
    }

    pub fn build(&self) -> Result<HopfPresentation, PresentationError> {
        self.spec.build_in(self.ctx.clone())
    }

    pub fn satisfied(&self) -> bool {
        self.violations.is_empty() && self.inadmissible.is_empty()
    }

    pub fn value(&self, name: &str) -> Option<Fq> {
        self.values.iter().find(|a| a.name == name).map(|a| a.value)
    }

    pub fn defaulted(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.values.iter().filter(|a| a.source == ValueSource::Default).map(|a| a.name)
    }
}

pub fn expected_dimension(id: CaseId, primes: Primes) -> u64 {
    id.entry().class.dimension(primes)
}

fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m < 2 || a % m == 0 {
        return None;
    }
    let mut x = a % m;
    for k in 1..m {
        if x == 1 {
            return Some(k);
        }
        x = x * a % m;
    }
    None
}

/// Least `t > 1` of multiplicative order exactly `order` modulo `m`.
pub fn least_of_order(order: u64, m: u64) -> Option<u64> {
    (2..m).find(|&t| multiplicative_order(t, m) == Some(order))
}

fn tmpl(case: CaseId, src: &str, ints: &IntEnv) -> Result<String, CatalogError> {
    intexpr::render(src, ints).map_err(|err| CatalogError::Template { case, err })
}

fn int(case: CaseId, src: &str, ints: &IntEnv) -> Result<i64, CatalogError> {
    intexpr::eval(src, ints).map_err(|err| CatalogError::Template { case, err })
}

fn check_primes(e: &CaseEntry, pr: Primes) -> Result<(), CatalogError> {
    let bad = |reason: String| CatalogError::BadPrimes { case: e.id, reason };
    let mut ps = alloc::vec![pr.p, pr.q];
    match (e.class.arity(), pr.r) {
        (3, Some(r)) => ps.push(r),
        (3, None) => return Err(bad("needs three primes p, q, r".into())),
        (2, Some(_)) => return Err(bad("takes two primes p, q".into())),
        _ => {}
    }
    for &x in &ps {
        if !is_prime(x) {
            return Err(bad(format!("{x} is not prime")));
        }
    }
    for i in 0..ps.len() {
        for j in 0..i {
            if ps[i] == ps[j] {
                return Err(bad("primes must be distinct".into()));
            }
        }
    }
    Ok(())
}

fn base_ints(e: &CaseEntry, pr: Primes) -> Result<IntEnv, CatalogError> {
    let mut ints = IntEnv::new();
    ints.set("p", pr.p as i64);
    ints.set("q", pr.q as i64);
    if let Some(r) = pr.r {
        ints.set("r", r as i64);
    }
    if let Some((ord, m)) = e.twist {
        let (ord, m) = (int(e.id, ord, &ints)?, int(e.id, m, &ints)?);
        let Some(t) = least_of_order(ord as u64, m as u64) else {
            // A missing twist is reported as the side condition that implies it.
            let failing = e.admissible.iter().find(|c| intexpr::holds(c, &ints) == Ok(false));
            return Err(match failing {
                Some(&condition) => CatalogError::Inadmissible { case: e.id, condition },
                None => CatalogError::NoTwist { case: e.id },
            });
        };
        ints.set("t", t as i64);
    }
    Ok(ints)
}

fn int_range(e: &CaseEntry, d: &ParamDecl, ints: &IntEnv) -> Result<(i64, i64), CatalogError> {
    match d.domain {
        ParamDomain::Range { lo, hi } => Ok((int(e.id, lo, ints)?, int(e.id, hi, ints)?)),
        _ => unreachable!("field parameter has no integer range"),
    }
}

fn failing_conditions(e: &CaseEntry, ints: &IntEnv) -> Result<Vec<&'static str>, CatalogError> {
    let mut out = Vec::new();
    for &c in e.admissible {
        if !intexpr::holds(c, ints).map_err(|err| CatalogError::Template { case: e.id, err })? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Every admissible assignment of the integer parameters at `pr`.
pub fn integer_assignments(id: CaseId, pr: Primes) -> Result<Vec<IntEnv>, CatalogError> {
    let e = id.entry();
    check_primes(e, pr)?;
    let base = base_ints(e, pr)?;
    let mut out = alloc::vec![base];
    for d in e.params.iter().filter(|d| d.is_int()) {
        let mut next = Vec::new();
        for env in &out {
            let (lo, hi) = int_range(e, d, env)?;
            for v in lo..=hi {
                let mut env = env.clone();
                env.set(d.name, v);
                next.push(env);
            }
        }
        out = next;
    }
    let mut keep = Vec::new();
    for env in out {
        if failing_conditions(e, &env)?.is_empty() {
            keep.push(env);
        }
    }
    Ok(keep)
}

pub fn is_admissible(id: CaseId, pr: Primes) -> bool {
    integer_assignments(id, pr).map(|v| !v.is_empty()).unwrap_or(false)
}

fn primes_upto(n: u32) -> Vec<u32> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

/// Admissible primes among `(2,3), (3,2)` (or `(2,3,5)`), else the least
/// admissible tuple by product and then lexicographically.
pub fn smallest_admissible_primes(id: CaseId) -> Vec<Primes> {
    let e = id.entry();
    let pinned: Vec<Primes> = match e.class.arity() {
        3 => alloc::vec![Primes::pqr(2, 3, 5)],
        _ => alloc::vec![Primes::pq(2, 3), Primes::pq(3, 2)],
    };
    let hit: Vec<Primes> = pinned.into_iter().filter(|&pr| is_admissible(id, pr)).collect();
    if !hit.is_empty() {
        return hit;
    }
    let ps = primes_upto(31);
    let mut cands: Vec<Primes> = Vec::new();
    for &p in &ps {
        for &q in &ps {
            if e.class.arity() == 3 {
                for &r in &ps {
                    cands.push(Primes::pqr(p, q, r));
                }
            } else {
                cands.push(Primes::pq(p, q));
            }
        }
    }
    let key = |pr: &Primes| (pr.p as u64 * pr.q as u64 * pr.r.unwrap_or(1) as u64, *pr);
    cands.sort_by_key(key);
    cands.into_iter().find(|&pr| is_admissible(id, pr)).into_iter().collect()
}

/// The field together with its named roots and their orders.
type FieldBinding = (Arc<FieldCtx>, Vec<(String, u32)>);

fn field_for(e: &CaseEntry, ints: &IntEnv) -> Result<FieldBinding, CatalogError> {
    let mut roots = Vec::new();
    for (name, ord) in e.roots {
        roots.push((name.to_string(), int(e.id, ord, ints)? as u32));
    }
    let orders: Vec<u32> = roots.iter().map(|(_, o)| *o).collect();
    let p = ints.get("p").unwrap() as u32;
    Ok((Arc::new(make_field(p, &orders)?), roots))
}

fn scalar_env(ctx: &FieldCtx, roots: &[(String, u32)]) -> Result<ScalarEnv, CatalogError> {
    let mut env = ScalarEnv::for_field(ctx);
    for (name, n) in roots {
        env.set(name, ctx.root_of_unity(*n)?);
    }
    Ok(env)
}

struct Evaluator<'a> {
    e: &'static CaseEntry,
    ctx: &'a FieldCtx,
    ints: &'a IntEnv,
    empty: GenSet,
}

impl Evaluator<'_> {
    fn value(&self, c: &Constraint, env: &ScalarEnv) -> Result<(String, Fq), CatalogError> {
        let pred = tmpl(self.e.id, c.expr, self.ints)?;
        let poly = parse_poly(&pred, self.ctx, &self.empty, env)
            .map_err(|err| CatalogError::Parse { what: format!("constraint `{}`", c.expr), err })?;
        let v = poly.as_scalar().unwrap_or(Fq::ZERO);
        Ok((pred, v))
    }

    fn field_params(&self) -> impl Iterator<Item = &'static ParamDecl> {
        self.e.params.iter().filter(|d| !d.is_int())
    }

    fn mentions(c: &Constraint, name: &str) -> bool {
        intexpr::identifiers(c.expr).contains(&name)
    }

    /// True when every field parameter mentioned by `c` is bound in `env`.
    fn decided(&self, c: &Constraint, env: &ScalarEnv) -> bool {
        self.field_params().all(|d| !Self::mentions(c, d.name) || env.get(d.name).is_some())
    }
}

/// Substitutes primes and parameters into a case.
pub fn instantiate(id: CaseId, params: &CaseParams, mode: Mode) -> Result<Instance, CatalogError> {
    let e = id.entry();
    let pr = params.primes;
    check_primes(e, pr)?;
    let mut ints = base_ints(e, pr)?;
    for (name, _) in &params.values {
        if !e.params.iter().any(|d| d.name == name) {
            return Err(CatalogError::UnknownParam { case: id, name: name.clone() });
        }
    }
    for d in e.params.iter().filter(|d| d.is_int()) {
        let (lo, hi) = int_range(e, d, &ints)?;
        let v = match params.get(d.name) {
            Some(s) => {
                let v: i64 = s.trim().parse().map_err(|_| CatalogError::OutOfDomain {
                    case: id,
                    name: d.name.into(),
                    value: s.into(),
                })?;
                if v < lo || v > hi {
                    return Err(CatalogError::OutOfDomain { case: id, name: d.name.into(), value: s.into() });
                }
                v
            }
            None => {
                // Least value meeting the side conditions, else the lower bound.
                let ok = (lo..=hi).find(|&v| {
                    let mut t = ints.clone();
                    t.set(d.name, v);
                    failing_conditions(e, &t).map(|f| f.is_empty()).unwrap_or(false)
                });
                ok.unwrap_or(lo)
            }
        };
        ints.set(d.name, v);
    }
    let inadmissible = failing_conditions(e, &ints)?;
    if mode == Mode::Strict {
        if let Some(&c) = inadmissible.first() {
            return Err(CatalogError::Inadmissible { case: id, condition: c });
        }
    }
    let (ctx, roots) = field_for(e, &ints)?;
    let mut env = scalar_env(&ctx, &roots)?;
    let ev = Evaluator { e, ctx: &ctx, ints: &ints, empty: GenSet::new(Vec::new()) };
    let mut values = Vec::new();
    for d in ev.field_params() {
        if let Some(s) = params.get(d.name) {
            let v = ctx.parse_element(s.trim()).ok_or_else(|| CatalogError::OutOfDomain {
                case: id,
                name: d.name.into(),
                value: s.into(),
            })?;
            if d.domain == ParamDomain::Binary && v != Fq::ZERO && v != Fq::ONE {
                return Err(CatalogError::OutOfDomain { case: id, name: d.name.into(), value: s.into() });
            }
            env.set(d.name, v);
            values.push(Assignment { name: d.name, value: v, source: ValueSource::Given });
        }
    }
    for d in ev.field_params() {
        if env.get(d.name).is_some() {
            continue;
        }
        let mut fits = Vec::new();
        for cand in [Fq::ZERO, Fq::ONE] {
            let mut trial = env.clone();
            trial.set(d.name, cand);
            let mut ok = true;
            for c in e.constraints.iter().filter(|c| Evaluator::mentions(c, d.name)) {
                if ev.decided(c, &trial) && !ev.value(c, &trial)?.1.is_zero() {
                    ok = false;
                }
            }
            if ok {
                fits.push(cand);
            }
        }
        let (v, source) = match fits.as_slice() {
            [only] => (*only, ValueSource::Required),
            _ => (Fq::ZERO, ValueSource::Default),
        };
        env.set(d.name, v);
        values.push(Assignment { name: d.name, value: v, source });
    }
    // Keep declaration order so reports are stable.
    values.sort_by_key(|a| e.params.iter().position(|d| d.name == a.name));
    let mut violations = Vec::new();
    for c in e.constraints {
        let (predicate, v) = ev.value(c, &env)?;
        if !v.is_zero() {
            if mode == Mode::Strict {
                return Err(CatalogError::ConstraintViolated { case: id, predicate, source: c.source });
            }
            violations.push(Violation { constraint: *c, predicate, value: v });
        }
    }
    let spec = presentation(e, &ctx, &ints, &roots, &values)?;
    Ok(Instance { id, primes: pr, ctx, ints, values, inadmissible, violations, spec })
}

fn presentation(
    e: &'static CaseEntry,
    ctx: &FieldCtx,
    ints: &IntEnv,
    roots: &[(String, u32)],
    values: &[Assignment],
) -> Result<PresentationSpec, CatalogError> {
    let mut spec = PresentationSpec {
        name: e.id.name().into(),
        p: ctx.p(),
        orders: roots.iter().map(|(_, o)| *o).collect(),
        degree: Some(ctx.k()),
        roots: roots.to_vec(),
        ..PresentationSpec::default()
    };
    for a in values {
        spec.scalars.push((a.name.into(), format!("{}", ctx.display(a.value))));
    }
    let mut group_rels = Vec::new();
    for g in e.gens {
        match *g {
            GenDecl::GroupLike(name, ord) => {
                let n = int(e.id, ord, ints)? as u32;
                spec.generators.push(Generator::grouplike(name, n));
                group_rels.push(format!("{name}^{n} = 1"));
            }
            GenDecl::Free(name, w) => {
                spec.generators.push(Generator::new(name, int(e.id, w, ints)? as u32));
            }
        }
    }
    for &(g, a, b) in e.affine {
        spec.affine.push((g.into(), (int(e.id, a, ints)? as u64, int(e.id, b, ints)? as u64)));
    }
    spec.relations = group_rels;
    for r in e.relations {
        spec.relations.push(tmpl(e.id, r, ints)?);
    }
    let gens = GenSet::new(spec.generators.clone());
    let letter = |n: &str| {
        gens.index(n)
            .ok_or_else(|| CatalogError::Presentation(PresentationError::UnknownGenerator(n.into())))
    };
    for (name, src) in e.coproduct {
        let mut d = tmpl(e.id, src, ints)?;
        for (_, t) in e.tails.iter().filter(|(y, _)| y == name) {
            let (x, kind) = match *t {
                Tail::Omega0 { x } => (x, TailKind::Omega0),
                Tail::OmegaTheta { x, g, theta } => (x, TailKind::OmegaTheta { g: letter(g)?, theta }),
                Tail::ThetaQ { x, g, xi } => {
                    let (_, n) = roots.iter().find(|(r, _)| r == xi).expect("tail root is declared");
                    let q = *n;
                    (x, TailKind::ThetaQ { g: letter(g)?, q, xi: ctx.root_of_unity(q)? })
                }
            };
            let tail = coproduct_tail(ctx, letter(x)?, kind)?;
            d.push_str(" + ");
            d.push_str(&format!("{}", tail.display(ctx, &gens)));
        }
        spec.coproduct.push((name.to_string(), d));
    }
    Ok(spec)
}

/// Each constraint at `params`, marked vacuous when it vanishes identically in
/// the field parameters.
pub fn constraint_report(id: CaseId, params: &CaseParams) -> Result<Vec<ConstraintLine>, CatalogError> {
    let e = id.entry();
    let inst = instantiate(id, params, Mode::Permissive)?;
    let (ctx, roots) = field_for(e, &inst.ints)?;
    let env = scalar_env(&ctx, &roots)?;
    // Parameters become free letters so that identical vanishing is exact.
    let pgens = GenSet::new(e.params.iter().filter(|d| !d.is_int()).map(|d| Generator::new(d.name, 1)).collect());
    let mut out = Vec::new();
    for c in e.constraints {
        let predicate = tmpl(id, c.expr, &inst.ints)?;
        let poly = parse_poly(&predicate, &ctx, &pgens, &env)
            .map_err(|err| CatalogError::Parse { what: format!("constraint `{}`", c.expr), err })?;
        let status = if poly.is_zero() { ConstraintStatus::Vacuous } else { ConstraintStatus::Active };
        let reduced = format!("{}", poly.display(&ctx, &pgens));
        out.push(ConstraintLine { constraint: *c, predicate, reduced, status });
    }
    Ok(out)
}

/// One point of the `{0,1}` grid over field parameters, for every admissible
/// integer assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPoint {
    pub params: CaseParams,
    pub satisfied: bool,
}

pub fn parameter_grid(id: CaseId, pr: Primes) -> Result<Vec<GridPoint>, CatalogError> {
    let e = id.entry();
    let fields: Vec<&ParamDecl> = e.params.iter().filter(|d| !d.is_int()).collect();
    let mut out = Vec::new();
    for ints in integer_assignments(id, pr)? {
        let mut base = CaseParams::new(pr);
        for d in e.params.iter().filter(|d| d.is_int()) {
            base = base.with(d.name, &format!("{}", ints.get(d.name).unwrap()));
        }
        for bits in 0u32..(1 << fields.len()) {
            let mut cp = base.clone();
            for (k, d) in fields.iter().enumerate() {
                cp = cp.with(d.name, if bits >> k & 1 == 1 { "1" } else { "0" });
            }
            let inst = instantiate(id, &cp, Mode::Permissive)?;
            out.push(GridPoint { params: cp, satisfied: inst.satisfied() });
        }
    }
    Ok(out)
}

/// Cases of one dimension class, in catalog order.
pub fn cases_of(class: DimClass) -> impl Iterator<Item = CaseId> {
    CaseId::ALL.iter().copied().filter(move |c| c.entry().class == class)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_order_matches_ids() {
        assert_eq!(CATALOG.len(), CaseId::ALL.len());
        for (i, e) in CATALOG.iter().enumerate() {
            assert_eq!(e.id as usize, i, "{}", e.id);
        }
    }

    #[test]
    fn least_twists() {
        assert_eq!(least_of_order(2, 3), Some(2));
        assert_eq!(least_of_order(3, 7), Some(2));
        assert_eq!(least_of_order(2, 5), Some(4));
        assert_eq!(least_of_order(3, 5), None);
    }

    #[test]
    fn names_round_trip() {
        for &c in CaseId::ALL {
            assert_eq!(c.name().parse::<CaseId>().unwrap(), c);
        }
        assert_eq!("p^2q".parse::<DimClass>().unwrap(), DimClass::P2Q);
        assert_eq!("pq2".parse::<DimClass>().unwrap(), DimClass::PQ2);
    }
}
