//! Oriented rewriting systems for two-sided ideals of free algebras, with
//! overlap ambiguity checks, normal-word enumeration and bounded completion.

mod ambiguity;
mod complete;
mod normal;

pub use ambiguity::{Ambiguity, AmbiguityKind, AmbiguityReport, ConfluenceReport};
pub use complete::{complete, CompletionBounds, CompletionError};
pub use normal::{NormalBasis, WordAutomaton};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::field::{FieldCtx, Fq};
use crate::freealg::{GenSet, Letter, NcPoly, TensorPoly, Word};

/// Monomial well-order used to orient relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderKind {
    /// Weight, then length, then precedence-lex.
    Wll,
    /// Per-generator affine maps `n -> a n + b` composed along the word and
    /// compared on (slope, intercept), ties broken by [`OrderKind::Wll`].
    /// Every slope must be at least 1 and every generator must have `a > 1` or `b > 0`.
    Affine(Vec<(u64, u64)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    gens: GenSet,
    kind: OrderKind,
}

/// Sort key realising a [`MonomialOrder`] as a plain lexicographic tuple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    slope: u128,
    intercept: u128,
    weight: u64,
    len: usize,
    ranks: Vec<u8>,
}

impl MonomialOrder {
    pub fn wll(gens: GenSet) -> Self {
        MonomialOrder { gens, kind: OrderKind::Wll }
    }

    pub fn affine(gens: GenSet, maps: Vec<(u64, u64)>) -> Self {
        assert_eq!(maps.len(), gens.len(), "one affine map per generator");
        assert!(
            maps.iter().all(|&(a, b)| a >= 1 && (a > 1 || b > 0)),
            "affine maps must be strictly increasing on positive integers"
        );
        MonomialOrder { gens, kind: OrderKind::Affine(maps) }
    }

    pub fn gens(&self) -> &GenSet {
        &self.gens
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    fn affine_value(&self, w: &[Letter]) -> (u128, u128) {
        match &self.kind {
            OrderKind::Wll => (0, 0),
            OrderKind::Affine(maps) => {
                let (mut a, mut b) = (1u128, 0u128);
                for &l in w.iter().rev() {
                    let (s, t) = maps[l as usize];
                    a = a.saturating_mul(s as u128);
                    b = b.saturating_mul(s as u128).saturating_add(t as u128);
                }
                (a, b)
            }
        }
    }

    fn key(&self, w: &[Letter]) -> Key {
        let (slope, intercept) = self.affine_value(w);
        let weight = self.gens.weight(w);
        let ranks = w.iter().map(|&l| self.gens.rank(l)).collect();
        Key { slope, intercept, weight, len: w.len(), ranks }
    }

    fn word_of_key(&self, k: &Key, inv_rank: &[Letter]) -> Word {
        k.ranks.iter().map(|&r| inv_rank[r as usize]).collect()
    }

    pub fn cmp(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        let (sa, ia) = self.affine_value(a);
        let (sb, ib) = self.affine_value(b);
        sa.cmp(&sb).then(ia.cmp(&ib)).then_with(|| self.gens.cmp_wll(a, b))
    }

    /// Largest word of a nonzero polynomial.
    pub fn leading<'a>(&self, p: &'a NcPoly) -> Option<(&'a Word, Fq)> {
        p.terms().max_by(|a, b| self.cmp(a.0, b.0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    /// Every word here is strictly below `lhs` and irreducible when the system
    /// is inter-reduced.
    pub rhs: NcPoly,
    /// Index of the input relation this rule came from, if any.
    pub origin: Option<usize>,
}

/// A defining relation, optionally with the word intended as its head.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub poly: NcPoly,
    pub head: Option<Word>,
}

impl Relation {
    pub fn new(poly: NcPoly) -> Self {
        Relation { poly, head: None }
    }

    /// `head = rhs`, asserting that `head` dominates every monomial of `rhs`.
    pub fn oriented(ctx: &FieldCtx, head: Word, rhs: &NcPoly) -> Self {
        let mut poly = NcPoly::word(head.clone());
        poly.sub_assign(ctx, rhs);
        Relation { poly, head: Some(head) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrientError {
    /// The declared head is not the largest word of its relation.
    NotDominant { relation: usize, head: String, larger: String },
}

impl fmt::Display for OrientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientError::NotDominant { relation, head, larger } => write!(
                f,
                "relation {relation}: declared head `{head}` is below `{larger}` in the reduction order"
            ),
        }
    }
}

impl core::error::Error for OrientError {}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    ctx: Arc<FieldCtx>,
    order: MonomialOrder,
    rules: Vec<Rule>,
    relations: Vec<NcPoly>,
    /// `by_first[l]` lists rules whose lhs starts with letter `l`, in admission order.
    by_first: Vec<Vec<usize>>,
    inv_rank: Vec<Letter>,
    has_unit_rule: bool,
}

impl RewriteSystem {
    pub fn empty(ctx: Arc<FieldCtx>, order: MonomialOrder) -> Self {
        let n = order.gens.len();
        let mut inv_rank = alloc::vec![0 as Letter; n];
        for l in 0..n as Letter {
            inv_rank[order.gens.rank(l) as usize] = l;
        }
        RewriteSystem {
            ctx,
            order,
            rules: Vec::new(),
            relations: Vec::new(),
            by_first: alloc::vec![Vec::new(); n],
            inv_rank,
            has_unit_rule: false,
        }
    }

    /// Orients `relations` into an inter-reduced rule set.
    pub fn orient(
        ctx: Arc<FieldCtx>,
        order: MonomialOrder,
        relations: &[Relation],
    ) -> Result<Self, OrientError> {
        let mut sys = RewriteSystem::empty(ctx, order);
        for (i, rel) in relations.iter().enumerate() {
            if let Some(head) = &rel.head {
                if let Some((lead, _)) = sys.order.leading(&rel.poly) {
                    if lead != head {
                        return Err(OrientError::NotDominant {
                            relation: i,
                            head: sys.order.gens.word_str(head),
                            larger: sys.order.gens.word_str(lead),
                        });
                    }
                }
            }
            sys.relations.push(rel.poly.clone());
        }
        for (i, r) in relations.iter().enumerate() {
            sys.admit(r.poly.clone(), Some(i));
        }
        Ok(sys)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn ctx_arc(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn gens(&self) -> &GenSet {
        &self.order.gens
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// The defining relations the system was built from.
    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    /// True when the ideal contains 1.
    pub fn is_trivial(&self) -> bool {
        self.has_unit_rule
    }

    fn rebuild_index(&mut self) {
        for v in self.by_first.iter_mut() {
            v.clear();
        }
        self.has_unit_rule = false;
        for (i, r) in self.rules.iter().enumerate() {
            match r.lhs.first() {
                Some(&l) => self.by_first[l as usize].push(i),
                None => self.has_unit_rule = true,
            }
        }
    }

    /// Adds `p` to the ideal, keeping the rule set inter-reduced. Returns false
    /// when `p` already reduces to zero.
    pub fn admit(&mut self, p: NcPoly, origin: Option<usize>) -> bool {
        let ctx = self.ctx.clone();
        let mut queue: Vec<(NcPoly, Option<usize>)> = alloc::vec![(p, origin)];
        let mut added = false;
        while let Some((poly, origin)) = queue.pop() {
            let r = self.reduce(&poly);
            let Some((lead, lc)) = self.order.leading(&r) else { continue };
            let lead = lead.clone();
            let inv = ctx.inv(lc).expect("leading coefficient is nonzero");
            let mut rhs = NcPoly::zero();
            for (w, c) in r.terms() {
                if *w != lead {
                    rhs.add_term(&ctx, w.clone(), ctx.neg(ctx.mul(inv, c)));
                }
            }
            added = true;
            let mut kept = Vec::with_capacity(self.rules.len() + 1);
            for rule in self.rules.drain(..) {
                if contains_factor(&rule.lhs, &lead) {
                    let mut back = NcPoly::word(rule.lhs.clone());
                    back.sub_assign(&ctx, &rule.rhs);
                    queue.push((back, rule.origin));
                } else {
                    kept.push(rule);
                }
            }
            kept.push(Rule { lhs: lead, rhs, origin });
            self.rules = kept;
            self.rebuild_index();
            for i in 0..self.rules.len() {
                let rhs = self.rules[i].rhs.clone();
                let red = self.reduce(&rhs);
                self.rules[i].rhs = red;
            }
        }
        added
    }

    /// Leftmost occurrence of the earliest-admitted matching rule.
    pub fn find_redex(&self, w: &[Letter]) -> Option<(usize, usize)> {
        if self.has_unit_rule {
            let i = self.rules.iter().position(|r| r.lhs.is_empty()).unwrap();
            return Some((0, i));
        }
        for pos in 0..w.len() {
            for &ri in &self.by_first[w[pos] as usize] {
                let lhs = &self.rules[ri].lhs;
                if w.len() - pos >= lhs.len() && w[pos..pos + lhs.len()] == lhs[..] {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &[Letter]) -> bool {
        self.find_redex(w).is_none()
    }

    /// Normal form, processing the largest pending word first so that every
    /// word is rewritten at most once.
    pub fn reduce(&self, p: &NcPoly) -> NcPoly {
        let ctx = &*self.ctx;
        if self.has_unit_rule {
            return NcPoly::zero();
        }
        let mut pending: BTreeMap<Key, Fq> = BTreeMap::new();
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            push_term(ctx, &mut pending, self.order.key(w), c);
        }
        while let Some((key, c)) = pending.pop_last() {
            let w = self.order.word_of_key(&key, &self.inv_rank);
            match self.find_redex(&w) {
                None => out.add_term(ctx, w, c),
                Some((pos, ri)) => {
                    let rule = &self.rules[ri];
                    let (u, v) = (&w[..pos], &w[pos + rule.lhs.len()..]);
                    for (rw, rc) in rule.rhs.terms() {
                        let mut x = Vec::with_capacity(u.len() + rw.len() + v.len());
                        x.extend_from_slice(u);
                        x.extend_from_slice(rw);
                        x.extend_from_slice(v);
                        push_term(ctx, &mut pending, self.order.key(&x), ctx.mul(c, rc));
                    }
                }
            }
        }
        out
    }

    pub fn reduce_word(&self, w: &[Letter]) -> NcPoly {
        self.reduce(&NcPoly::word(w.to_vec()))
    }

    /// Factorwise normal form of a tensor.
    pub fn reduce_tensor(&self, t: &TensorPoly) -> TensorPoly {
        t.map_factors(&self.ctx, |_, w| self.reduce_word(w))
    }

    pub fn mul(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        self.reduce(&NcPoly::mul(&self.ctx, a, b))
    }

    pub fn pow(&self, a: &NcPoly, e: u32) -> NcPoly {
        let mut r = self.reduce(&NcPoly::one());
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    pub fn mul_tensor(&self, a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
        self.reduce_tensor(&TensorPoly::mul(&self.ctx, a, b))
    }

    pub fn rule_display(&self, r: &Rule) -> String {
        alloc::format!(
            "{} -> {}",
            self.gens().word_str(&r.lhs),
            r.rhs.display(&self.ctx, self.gens())
        )
    }
}

fn push_term(ctx: &FieldCtx, pending: &mut BTreeMap<Key, Fq>, k: Key, c: Fq) {
    if c.is_zero() {
        return;
    }
    match pending.entry(k) {
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

pub(crate) fn contains_factor(w: &[Letter], f: &[Letter]) -> bool {
    f.is_empty() || w.windows(f.len()).any(|s| s == f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::freealg::{parse_poly, Generator, ScalarEnv};

    fn system(order: impl Fn(GenSet) -> MonomialOrder, gens: Vec<Generator>, rels: &[&str]) -> RewriteSystem {
        let ctx = Arc::new(make_field(2, &[3]).unwrap());
        let gs = GenSet::new(gens);
        let env = ScalarEnv::for_field(&ctx);
        let rels: Vec<Relation> =
            rels.iter().map(|s| Relation::new(parse_poly(s, &ctx, &gs, &env).unwrap())).collect();
        RewriteSystem::orient(ctx, order(gs), &rels).unwrap()
    }

    #[test]
    fn orients_group_and_commutation() {
        let s = system(
            MonomialOrder::wll,
            alloc::vec![Generator::grouplike("g", 3), Generator::new("x", 1)],
            &["g^3 - 1", "g*x - x*g"],
        );
        let shown: Vec<String> = s.rules().iter().map(|r| s.rule_display(r)).collect();
        assert_eq!(shown, ["g^3 -> 1", "g*x -> x*g"]);
        let gx = s.reduce_word(&[0, 0, 0, 0, 1]);
        assert_eq!(gx, NcPoly::word(alloc::vec![1, 0]));
    }

    #[test]
    fn weighted_orientation() {
        let s = system(
            MonomialOrder::wll,
            alloc::vec![Generator::grouplike("g", 3), Generator::new("x", 1), Generator::new("y", 2)],
            &["g*y - y*g - (x*g^2 + x*g + g^2 + g)"],
        );
        assert_eq!(s.rule_display(&s.rules()[0]), "g*y -> y*g + x*g^2 + x*g + g^2 + g");
    }

    #[test]
    fn declared_head_must_dominate() {
        let ctx = Arc::new(make_field(3, &[2]).unwrap());
        let gens = GenSet::new(alloc::vec![Generator::grouplike("g", 2), Generator::grouplike("h", 3)]);
        let (g, h) = (gens.index("g").unwrap(), gens.index("h").unwrap());
        let rel = Relation::oriented(&ctx, alloc::vec![g, h], &NcPoly::word(alloc::vec![h, h, g]));
        let wll = RewriteSystem::orient(ctx.clone(), MonomialOrder::wll(gens.clone()), core::slice::from_ref(&rel));
        assert!(matches!(wll, Err(OrientError::NotDominant { .. })));
        let mut maps = alloc::vec![(1, 1); 2];
        maps[g as usize] = (3, 0);
        let aff = RewriteSystem::orient(ctx, MonomialOrder::affine(gens, maps), &[rel]).unwrap();
        assert_eq!(aff.rule_display(&aff.rules()[0]), "g*h -> h^2*g");
    }

    #[test]
    fn inter_reduction_drops_dominated_heads() {
        let s = system(
            MonomialOrder::wll,
            alloc::vec![Generator::new("x", 1)],
            &["x^3", "x^2 - x"],
        );
        // x = x^2 = x^3 = 0 in the quotient.
        assert_eq!(s.rules().len(), 1);
        assert_eq!(s.rule_display(&s.rules()[0]), "x -> 0");
    }
}
