use alloc::string::String;
use alloc::vec::Vec;

use super::bialgebra::{HopfAlgebra, HopfError};
use crate::field::Fq;
use crate::freealg::{Letter, NcPoly};
use crate::linalg::{add_entry, axpy, unit, SparseVec};

/// Antipode as the images of generators and of every basis word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antipode {
    pub on_gens: Vec<SparseVec>,
    pub on_basis: Vec<SparseVec>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AntipodeReport {
    /// Generators where `m(S (x) id) Delta != u . eps`.
    pub left_failures: Vec<String>,
    /// Generators where `m(id (x) S) Delta != u . eps`.
    pub right_failures: Vec<String>,
    /// Relations not killed by the anti-homomorphic extension of `S`.
    pub relation_failures: Vec<usize>,
}

impl AntipodeReport {
    pub fn ok(&self) -> bool {
        self.left_failures.is_empty() && self.right_failures.is_empty() && self.relation_failures.is_empty()
    }
}

impl HopfAlgebra {
    /// `S(a_1 ... a_k) = S(a_k) ... S(a_1)` from images of generators.
    pub fn antihom_word(&self, images: &[SparseVec], w: &[Letter]) -> SparseVec {
        let mut acc = self.alg.unit();
        for &l in w.iter().rev() {
            acc = self.alg.mul(&acc, &images[l as usize]);
            if acc.is_empty() {
                break;
            }
        }
        acc
    }

    pub fn antihom(&self, images: &[SparseVec], p: &NcPoly) -> SparseVec {
        let ctx = self.ctx();
        let mut out = SparseVec::new();
        for (w, c) in p.terms() {
            axpy(ctx, &mut out, c, &self.antihom_word(images, w));
        }
        out
    }

    /// Group-likes get `S(g) = g^(N-1)`. For any other `x` with a unique term
    /// `x (x) a`, `a` a group word, `S(x) = -m(S (x) id)(Delta x - x (x) a) S(a)`.
    pub fn derive_antipode(&self) -> Result<Antipode, HopfError> {
        let gens = self.pres.gens();
        let n = gens.len();
        let d = self.dim();
        let mut on_gens: Vec<Option<SparseVec>> = alloc::vec![None; n];
        for (i, g) in gens.gens().iter().enumerate() {
            if g.grouplike {
                let ord = g.order.ok_or_else(|| HopfError::MissingOrder(g.name.clone()))?;
                let w = alloc::vec![i as Letter; ord.saturating_sub(1) as usize];
                on_gens[i] = Some(self.alg.eval_word(&w));
            }
        }
        // Leading term and remainder of each non-group-like coproduct.
        let mut pending: Vec<(usize, SparseVec, SparseVec)> = Vec::new();
        for (i, g) in gens.gens().iter().enumerate() {
            if g.grouplike {
                continue;
            }
            let xi = self
                .alg
                .index_of(&[i as Letter])
                .ok_or_else(|| HopfError::NoLeadingTerm(g.name.clone()))?;
            let dx = self.delta_gen(i as Letter);
            let lead: Vec<(usize, Fq)> = dx
                .iter()
                .filter(|(&idx, _)| idx / d == xi && gens.is_group_word(&self.alg.basis()[idx % d]))
                .map(|(&idx, &c)| (idx % d, c))
                .collect();
            let [(a, c)] = lead[..] else {
                return Err(HopfError::NoLeadingTerm(g.name.clone()));
            };
            if c != Fq::ONE {
                return Err(HopfError::NoLeadingTerm(g.name.clone()));
            }
            let mut rest = dx.clone();
            rest.remove(&(xi * d + a));
            pending.push((i, rest, unit(a)));
        }
        while !pending.is_empty() {
            let before = pending.len();
            let mut still = Vec::new();
            for (i, rest, a) in pending {
                match self.try_solve(&on_gens, &rest, &a) {
                    Some(s) => on_gens[i] = Some(s),
                    None => still.push((i, rest, a)),
                }
            }
            if still.len() == before {
                let names = still.iter().map(|(i, _, _)| gens.get(*i as Letter).name.clone()).collect();
                return Err(HopfError::Unsolvable(names));
            }
            pending = still;
        }
        let on_gens: Vec<SparseVec> = on_gens.into_iter().map(|s| s.unwrap()).collect();
        let on_basis = self.alg.basis().iter().map(|w| self.antihom_word(&on_gens, w)).collect();
        Ok(Antipode { on_gens, on_basis })
    }

    /// `-m(S (x) id)(rest) S(a)` when every factor's antipode is known.
    fn try_solve(&self, known: &[Option<SparseVec>], rest: &SparseVec, a: &SparseVec) -> Option<SparseVec> {
        let ctx = self.ctx();
        let d = self.dim();
        let images_of = |w: &[Letter]| -> Option<SparseVec> {
            let mut acc = self.alg.unit();
            for &l in w.iter().rev() {
                acc = self.alg.mul(&acc, known[l as usize].as_ref()?);
            }
            Some(acc)
        };
        let mut sum = SparseVec::new();
        for (&idx, &c) in rest {
            let (i, j) = (idx / d, idx % d);
            let si = images_of(&self.alg.basis()[i])?;
            let prod = self.alg.mul(&si, &unit(j));
            axpy(ctx, &mut sum, c, &prod);
        }
        let sa = {
            let &ai = a.keys().next()?;
            images_of(&self.alg.basis()[ai])?
        };
        let s = self.alg.mul(&sum, &sa);
        Some(crate::linalg::scale(ctx, &s, ctx.neg(Fq::ONE)))
    }

    /// `m(S (x) id) v` and `m(id (x) S) v` for `v` in the square.
    pub fn convolutions(&self, s: &Antipode, v: &SparseVec) -> (SparseVec, SparseVec) {
        let ctx = self.ctx();
        let d = self.dim();
        let mut left = SparseVec::new();
        let mut right = SparseVec::new();
        for (&idx, &c) in v {
            let (i, j) = (idx / d, idx % d);
            axpy(ctx, &mut left, c, &self.alg.mul(&s.on_basis[i], &unit(j)));
            axpy(ctx, &mut right, c, &self.alg.mul(&unit(i), &s.on_basis[j]));
        }
        (left, right)
    }

    pub fn verify_antipode(&self, s: &Antipode) -> AntipodeReport {
        let ctx = self.ctx();
        let gens = self.pres.gens();
        let one = self.alg.index_of(&[]).unwrap();
        let mut rep = AntipodeReport::default();
        for l in 0..gens.len() as Letter {
            let (left, right) = self.convolutions(s, self.delta_gen(l));
            let mut expect = SparseVec::new();
            add_entry(ctx, &mut expect, one, self.pres.counit[l as usize]);
            if left != expect {
                rep.left_failures.push(gens.get(l).name.clone());
            }
            if right != expect {
                rep.right_failures.push(gens.get(l).name.clone());
            }
        }
        for (i, r) in self.pres.sys.relations().iter().enumerate() {
            if !self.antihom(&s.on_gens, r).is_empty() {
                rep.relation_failures.push(i);
            }
        }
        rep
    }

    /// Least `m >= 1` with `S^m = id`, if at most `bound`.
    pub fn antipode_order(&self, s: &Antipode, bound: u64) -> Option<u64> {
        let ctx = self.ctx();
        let d = self.dim();
        let apply = |v: &SparseVec| -> SparseVec {
            let mut out = SparseVec::new();
            for (&i, &c) in v {
                axpy(ctx, &mut out, c, &s.on_basis[i]);
            }
            out
        };
        let mut cur: Vec<SparseVec> = (0..d).map(unit).collect();
        for m in 1..=bound {
            cur = cur.iter().map(&apply).collect();
            if cur.iter().enumerate().all(|(i, v)| *v == unit(i)) {
                return Some(m);
            }
        }
        None
    }
}
