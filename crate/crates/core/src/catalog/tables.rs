//! Yetter-Drinfeld realizations of the Nichols algebras `R` in each table row.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{least_of_order, CatalogError, DimClass, Primes};
use crate::field::{is_prime, make_field, FieldCtx, Fq};
use crate::freealg::{GenSet, Generator};
use crate::hopf::{bosonize, coproduct_tail, PresentationSpec, TailKind, YDRealization, YdElement, YdError, YdGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableRow {
    A,
    B1,
    B2,
    C,
    D,
    AA,
    AB1,
    AB2,
    AC,
    AD,
    BA,
    BB,
}

impl TableRow {
    pub const ALL: [TableRow; 12] = [
        TableRow::A,
        TableRow::B1,
        TableRow::B2,
        TableRow::C,
        TableRow::D,
        TableRow::AA,
        TableRow::AB1,
        TableRow::AB2,
        TableRow::AC,
        TableRow::AD,
        TableRow::BA,
        TableRow::BB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableRow::A => "A",
            TableRow::B1 => "B1",
            TableRow::B2 => "B2",
            TableRow::C => "C",
            TableRow::D => "D",
            TableRow::AA => "AA",
            TableRow::AB1 => "AB1",
            TableRow::AB2 => "AB2",
            TableRow::AC => "AC",
            TableRow::AD => "AD",
            TableRow::BA => "BA",
            TableRow::BB => "BB",
        }
    }

    pub fn table(self) -> u8 {
        match self.class() {
            DimClass::P2Q => 1,
            DimClass::PQ2 => 2,
            _ => 3,
        }
    }

    pub fn class(self) -> DimClass {
        use TableRow::*;
        match self {
            A | B1 | B2 | C | D => DimClass::P2Q,
            AA | AB1 | AB2 | AC | AD => DimClass::PQ2,
            BA | BB => DimClass::PQR,
        }
    }

    /// Number of realizations listed for the row.
    pub fn expected_count(self, q: u32) -> usize {
        use TableRow::*;
        match self {
            A => 6,
            B1 => 2,
            B2 => 1,
            C => 4 * q as usize - 1,
            D => 3,
            AA => 2,
            AB1 => 5,
            AB2 => 6,
            AC | AD => 1,
            BA => 7,
            BB => 2,
        }
    }

    pub fn admissible(self, pr: Primes) -> bool {
        let (p, q) = (pr.p, pr.q);
        let mut ps = alloc::vec![p, q];
        match (self.class().arity(), pr.r) {
            (3, Some(r)) => ps.push(r),
            (2, None) => {}
            _ => return false,
        }
        if ps.iter().any(|&x| !is_prime(x)) || (1..ps.len()).any(|i| ps[..i].contains(&ps[i])) {
            return false;
        }
        match self {
            TableRow::B1 => (p - 1) % q == 0,
            TableRow::B2 => (q - 1) % p == 0,
            TableRow::BB => (q - 1) % pr.r.unwrap() == 0,
            _ => true,
        }
    }
}

impl core::str::FromStr for TableRow {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TableRow::ALL
            .iter()
            .copied()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CatalogError::UnknownRow(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdRow {
    pub label: String,
    pub realization: YDRealization,
}

#[derive(Clone, Debug)]
pub struct YdEnumeration {
    pub row: TableRow,
    pub primes: Primes,
    pub ctx: Arc<FieldCtx>,
    pub rows: Vec<YdRow>,
    /// Affine maps orienting `g h = h^t g` in the semidirect rows.
    pub affine: Vec<(String, (u64, u64))>,
}

impl YdEnumeration {
    pub fn count(&self) -> usize {
        self.rows.len()
    }

    /// The bosonization of row `i` with its graded Nichols relations.
    pub fn bosonize(&self, i: usize) -> Result<PresentationSpec, YdError> {
        let r = &self.rows[i];
        let rels = graded_relations(&self.ctx, &r.realization);
        let mut spec = bosonize(&self.ctx, &r.label, &rels, &r.realization)?;
        spec.affine = self.affine.clone();
        Ok(spec)
    }
}

/// Homogeneous element: `(name, weight, degree exponents, character exponents)`.
type Elem = (&'static str, u32, Vec<u32>, Vec<u32>);

struct Builder<'a> {
    ctx: &'a FieldCtx,
    group: YdGroup,
    /// Root giving the character value of each group generator.
    roots: Vec<Fq>,
    rows: Vec<YdRow>,
}

impl Builder<'_> {
    fn label(&self, e: &Elem) -> String {
        let part = |exps: &[u32], sym: &str| -> String {
            let v: Vec<String> = self
                .group
                .gens
                .iter()
                .zip(exps)
                .filter(|(_, &k)| k > 0)
                .map(|((g, _), &k)| {
                    let s = if sym.is_empty() { g.clone() } else { format!("{sym}_{g}") };
                    if k == 1 {
                        s
                    } else {
                        format!("{s}^{k}")
                    }
                })
                .collect();
            if v.is_empty() {
                String::new()
            } else {
                v.join("*")
            }
        };
        let deg = part(&e.2, "");
        let chi = part(&e.3, "chi");
        let deg = if deg.is_empty() { "1".to_string() } else { deg };
        let chi = if chi.is_empty() { "eps".to_string() } else { chi };
        format!("{} in V_{{{deg}}}^{{{chi}}}", e.0)
    }

    fn push(&mut self, elems: Vec<Elem>, tail: Option<TailKind>) {
        let labels: Vec<String> = elems.iter().map(|e| self.label(e)).collect();
        let mut out = Vec::new();
        let gens = {
            let mut v: Vec<Generator> = self.group.gens.iter().map(|(n, o)| Generator::grouplike(n, *o)).collect();
            for e in &elems {
                v.push(Generator::new(e.0, e.1));
            }
            GenSet::new(v)
        };
        let x = self.group.gens.len() as u8;
        for (k, (name, weight, degree, chi)) in elems.into_iter().enumerate() {
            let character = chi.iter().zip(&self.roots).map(|(&e, &r)| self.ctx.pow(r, e as u64)).collect();
            let tail = match (k, tail) {
                (1, Some(kind)) => {
                    let t = coproduct_tail(self.ctx, x, kind).expect("tail data is valid");
                    Some(format!("{}", t.display(self.ctx, &gens)))
                }
                _ => None,
            };
            out.push(YdElement { name: name.into(), weight, degree, character, tail });
        }
        self.rows.push(YdRow {
            label: labels.join(", "),
            realization: YDRealization { group: self.group.clone(), elements: out },
        });
    }
}

fn x1(deg: u32, chi: u32) -> Vec<Elem> {
    alloc::vec![("x", 1, alloc::vec![deg], alloc::vec![chi])]
}

/// The realizations listed for `row` at admissible primes.
pub fn enumerate_yd(row: TableRow, primes: Primes) -> Result<YdEnumeration, CatalogError> {
    if !row.admissible(primes) {
        return Err(CatalogError::RowPrimes { row, primes });
    }
    let (p, q) = (primes.p, primes.q);
    let r = primes.r.unwrap_or(1);
    let orders: Vec<u32> = match row {
        TableRow::A | TableRow::B1 | TableRow::C | TableRow::D | TableRow::AA | TableRow::AB2 => alloc::vec![q],
        TableRow::AC | TableRow::AD => alloc::vec![q],
        TableRow::AB1 => alloc::vec![q * q],
        TableRow::BA => alloc::vec![q * r],
        TableRow::BB => alloc::vec![r],
        TableRow::B2 => alloc::vec![],
    };
    let ctx = Arc::new(make_field(p, &orders)?);
    let root = match orders.first() {
        Some(&n) => ctx.root_of_unity(n)?,
        None => Fq::ONE,
    };
    let cyclic = |n: u32| YdGroup { gens: alloc::vec![("g".into(), n)], relations: Vec::new() };
    let affine = match row {
        TableRow::B1 => alloc::vec![("g".into(), (p as u64, 0))],
        TableRow::B2 => alloc::vec![("g".into(), (q as u64, 0))],
        TableRow::BB => alloc::vec![("g".into(), (q as u64, 0))],
        _ => Vec::new(),
    };
    let semidirect = |ng: u32, nh: u32, t: u64| YdGroup {
        gens: alloc::vec![("g".into(), ng), ("h".into(), nh)],
        relations: alloc::vec![format!("g*h = h^{t}*g")],
    };
    let (group, roots) = match row {
        TableRow::A | TableRow::AA => (cyclic(p * q), alloc::vec![root]),
        TableRow::B1 => (semidirect(q, p, least_of_order(q as u64, p as u64).unwrap()), alloc::vec![root, Fq::ONE]),
        TableRow::B2 => (semidirect(p, q, least_of_order(p as u64, q as u64).unwrap()), alloc::vec![Fq::ONE, Fq::ONE]),
        TableRow::C | TableRow::D | TableRow::AC | TableRow::AD => (cyclic(q), alloc::vec![root]),
        TableRow::AB1 => (cyclic(q * q), alloc::vec![root]),
        TableRow::AB2 => (
            YdGroup { gens: alloc::vec![("g".into(), q), ("h".into(), q)], relations: alloc::vec!["g*h = h*g".into()] },
            alloc::vec![root, root],
        ),
        TableRow::BA => (cyclic(q * r), alloc::vec![root]),
        TableRow::BB => (semidirect(r, q, least_of_order(r as u64, q as u64).unwrap()), alloc::vec![root, Fq::ONE]),
    };
    let mut b = Builder { ctx: &ctx, group, roots, rows: Vec::new() };
    match row {
        TableRow::A => {
            for (d, c) in [(0, 0), (0, 1), (1, 0), (p, 0), (q, 0), (q, 1)] {
                b.push(x1(d, c), None);
            }
        }
        TableRow::B1 => {
            for c in [0, 1] {
                b.push(alloc::vec![("x", 1, alloc::vec![0, 0], alloc::vec![c, 0])], None);
            }
        }
        TableRow::B2 => b.push(alloc::vec![("x", 1, alloc::vec![0, 0], alloc::vec![0, 0])], None),
        TableRow::C => {
            let pair = |dx: u32, cx: u32, dy: u32, cy: u32| -> Vec<Elem> {
                alloc::vec![("x", 1, alloc::vec![dx], alloc::vec![cx]), ("y", 1, alloc::vec![dy], alloc::vec![cy])]
            };
            b.push(pair(0, 0, 0, 0), None);
            for nu in 1..q {
                b.push(pair(0, 0, 0, nu), None);
            }
            for mu in 0..q {
                b.push(pair(0, 1, 0, mu), None);
            }
            for mu in 0..q {
                b.push(pair(1, 0, mu, 0), None);
            }
            for nu in 1..q {
                b.push(pair(0, 0, nu, 0), None);
            }
        }
        TableRow::D => {
            let pair = |dx: u32, cx: u32, dy: u32, cy: u32| -> Vec<Elem> {
                alloc::vec![("x", 1, alloc::vec![dx], alloc::vec![cx]), ("y", p, alloc::vec![dy], alloc::vec![cy])]
            };
            b.push(pair(0, 0, 0, 0), Some(TailKind::Omega0));
            b.push(pair(0, 1, 0, p % q), Some(TailKind::Omega0));
            b.push(pair(1, 0, p % q, 0), Some(TailKind::OmegaTheta { g: 0, theta: 1 }));
        }
        TableRow::AA => {
            b.push(x1(1, 1), None);
            b.push(x1(p, 1), None);
        }
        TableRow::AB1 => {
            for (d, c) in [(0, 0), (1, 0), (q, 0), (0, 1), (0, q)] {
                b.push(x1(d, c), None);
            }
        }
        TableRow::AB2 => {
            for (d, c) in [([0, 0], [0, 0]), ([0, 0], [0, 1]), ([0, 0], [1, 0]), ([0, 0], [1, 1]), ([1, 0], [0, 0]), ([1, 0], [0, 1])] {
                b.push(alloc::vec![("x", 1, d.to_vec(), c.to_vec())], None);
            }
        }
        TableRow::AC => {
            b.push(alloc::vec![("x", 1, alloc::vec![1], alloc::vec![1]), ("y", 1, alloc::vec![0], alloc::vec![0])], None)
        }
        TableRow::AD => b.push(
            alloc::vec![("x", 1, alloc::vec![1], alloc::vec![1]), ("y", q, alloc::vec![0], alloc::vec![0])],
            Some(TailKind::ThetaQ { g: 0, q, xi: root }),
        ),
        TableRow::BA => {
            for (d, c) in [(0, 0), (0, 1), (0, q), (0, r), (1, 0), (q, 0), (r, 0)] {
                b.push(x1(d, c), None);
            }
        }
        TableRow::BB => {
            for c in [0, 1] {
                b.push(alloc::vec![("x", 1, alloc::vec![0, 0], alloc::vec![c, 0])], None);
            }
        }
    }
    let rows = b.rows;
    Ok(YdEnumeration { row, primes, ctx, rows, affine })
}

/// Nilpotency of a homogeneous element: `p` for trivial self-braiding, else the
/// order of the braiding scalar.
fn height(ctx: &FieldCtx, yd: &YDRealization, i: usize) -> u32 {
    let b = yd.braiding(ctx, i, i);
    if b == Fq::ONE {
        ctx.p()
    } else {
        ctx.order(b)
    }
}

/// Relations of the graded `R`: truncations `x^N = 0` and braided
/// commutators `x_i x_j = chi_j(deg x_i) x_j x_i`.
pub fn graded_relations(ctx: &FieldCtx, yd: &YDRealization) -> Vec<String> {
    let mut out = Vec::new();
    let els = &yd.elements;
    for (i, x) in els.iter().enumerate() {
        out.push(format!("{}^{} = 0", x.name, height(ctx, yd, i)));
    }
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            let c = yd.braiding(ctx, i, j);
            out.push(format!("{a}*{b} = ({c})*{b}*{a}", a = els[i].name, b = els[j].name, c = ctx.display(c)));
        }
    }
    out
}

/// `dim R` of the graded realization.
pub fn nichols_dimension(ctx: &FieldCtx, yd: &YDRealization) -> u64 {
    (0..yd.elements.len()).map(|i| height(ctx, yd, i) as u64).product()
}
