use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::algebra::{AlgebraError, FiniteAlgebra};
use super::presentation::HopfPresentation;
use crate::field::{FieldCtx, Fq};
use crate::freealg::{Letter, NcPoly};
use crate::linalg::{add_entry, axpy, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfError {
    NotConfluent { obstructions: usize },
    Algebra(AlgebraError),
    MissingOrder(String),
    /// No term `x (x) a` with `a` group-like isolates `S(x)`.
    NoLeadingTerm(String),
    /// Antipode images depend on each other cyclically.
    Unsolvable(Vec<String>),
}

impl fmt::Display for HopfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfError::NotConfluent { obstructions } => {
                write!(f, "rewriting system is not confluent ({obstructions} unresolved ambiguities)")
            }
            HopfError::Algebra(e) => write!(f, "{e}"),
            HopfError::MissingOrder(g) => write!(f, "group-like `{g}` has no declared order"),
            HopfError::NoLeadingTerm(g) => {
                write!(f, "coproduct of `{g}` has no unique term `{g} (x) a` with a group-like")
            }
            HopfError::Unsolvable(gs) => write!(f, "antipode cannot be solved for {gs:?}"),
        }
    }
}

impl core::error::Error for HopfError {}

impl From<AlgebraError> for HopfError {
    fn from(e: AlgebraError) -> Self {
        HopfError::Algebra(e)
    }
}

/// A presentation together with its normal basis and coproduct tables.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub pres: HopfPresentation,
    pub alg: FiniteAlgebra,
    delta_gen: Vec<SparseVec>,
    delta: Vec<SparseVec>,
    counit: Vec<Fq>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BialgebraReport {
    /// Relations whose coproduct does not vanish, with the residue.
    pub coproduct_failures: Vec<(usize, String)>,
    pub counit_failures: Vec<usize>,
    pub coassociativity_failures: Vec<String>,
    pub counit_axiom_failures: Vec<String>,
}

impl BialgebraReport {
    pub fn ok(&self) -> bool {
        self.coproduct_failures.is_empty()
            && self.counit_failures.is_empty()
            && self.coassociativity_failures.is_empty()
            && self.counit_axiom_failures.is_empty()
    }
}

impl HopfAlgebra {
    /// Requires a confluent system with a finite normal basis of at most `limit` words.
    pub fn new(pres: HopfPresentation, limit: usize) -> Result<Self, HopfError> {
        let report = pres.sys.check_confluence();
        if !report.confluent() {
            return Err(HopfError::NotConfluent { obstructions: report.obstructions().count() });
        }
        Self::new_unchecked(pres, limit)
    }

    /// As [`HopfAlgebra::new`] without re-checking confluence.
    pub fn new_unchecked(pres: HopfPresentation, limit: usize) -> Result<Self, HopfError> {
        let alg = FiniteAlgebra::new(pres.sys.clone(), limit)?;
        let delta_gen: Vec<SparseVec> = pres.coproduct.iter().map(|t| alg.eval_tensor(t)).collect();
        let d = alg.dim();
        let mut delta: Vec<SparseVec> = Vec::with_capacity(d);
        let mut counit: Vec<Fq> = Vec::with_capacity(d);
        let ctx = alg.ctx().clone();
        for w in alg.basis() {
            match w.split_last() {
                None => {
                    let one = alg.index_of(&[]).unwrap();
                    delta.push(crate::linalg::unit(one * d + one));
                    counit.push(Fq::ONE);
                }
                Some((&l, prefix)) => {
                    let pi = alg.index_of(prefix).expect("normal words are prefix-closed");
                    delta.push(alg.mul_tensor(&delta[pi], &delta_gen[l as usize], 2));
                    counit.push(ctx.mul(counit[pi], pres.counit[l as usize]));
                }
            }
        }
        Ok(HopfAlgebra { pres, alg, delta_gen, delta, counit })
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.alg.ctx()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn delta_basis(&self, i: usize) -> &SparseVec {
        &self.delta[i]
    }

    pub fn delta_gen(&self, l: Letter) -> &SparseVec {
        &self.delta_gen[l as usize]
    }

    pub fn counit_basis(&self, i: usize) -> Fq {
        self.counit[i]
    }

    pub fn delta(&self, v: &SparseVec) -> SparseVec {
        let ctx = self.ctx();
        let mut out = SparseVec::new();
        for (&i, &c) in v {
            axpy(ctx, &mut out, c, &self.delta[i]);
        }
        out
    }

    pub fn counit(&self, v: &SparseVec) -> Fq {
        let ctx = self.ctx();
        v.iter().fold(Fq::ZERO, |acc, (&i, &c)| ctx.add(acc, ctx.mul(c, self.counit[i])))
    }

    /// Coproduct of a free-algebra polynomial, extended multiplicatively.
    pub fn delta_free(&self, p: &NcPoly) -> SparseVec {
        let ctx = self.ctx();
        let one = self.alg.index_of(&[]).unwrap();
        let d = self.dim();
        let mut out = SparseVec::new();
        for (w, c) in p.terms() {
            let mut acc = crate::linalg::unit(one * d + one);
            for &l in w {
                acc = self.alg.mul_tensor(&acc, &self.delta_gen[l as usize], 2);
                if acc.is_empty() {
                    break;
                }
            }
            axpy(ctx, &mut out, c, &acc);
        }
        out
    }

    fn counit_free(&self, p: &NcPoly) -> Fq {
        let ctx = self.ctx();
        p.terms().fold(Fq::ZERO, |acc, (w, c)| {
            let e = w.iter().fold(c, |e, &l| ctx.mul(e, self.pres.counit[l as usize]));
            ctx.add(acc, e)
        })
    }

    /// `(Delta (x) id) v` and `(id (x) Delta) v` for `v` in the square.
    pub fn coassociators(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let ctx = self.ctx();
        let d = self.dim();
        let mut left = SparseVec::new();
        let mut right = SparseVec::new();
        for (&idx, &c) in v {
            let (i, j) = (idx / d, idx % d);
            for (&ab, &e) in &self.delta[i] {
                add_entry(ctx, &mut left, ab * d + j, ctx.mul(c, e));
            }
            for (&ab, &e) in &self.delta[j] {
                add_entry(ctx, &mut right, i * d * d + ab, ctx.mul(c, e));
            }
        }
        (left, right)
    }

    /// Bialgebra axioms: coproduct and counit kill every relation, and both
    /// are coassociative and counital on generators.
    pub fn check_bialgebra(&self) -> BialgebraReport {
        let ctx = self.ctx();
        let gens = self.pres.gens();
        let d = self.dim();
        let mut rep = BialgebraReport::default();
        for (i, r) in self.pres.sys.relations().iter().enumerate() {
            let dr = self.delta_free(r);
            if !dr.is_empty() {
                let t = self.alg.tensor_poly(&dr, 2);
                rep.coproduct_failures.push((i, alloc::format!("{}", t.display(ctx, gens))));
            }
            if !self.counit_free(r).is_zero() {
                rep.counit_failures.push(i);
            }
        }
        for l in 0..gens.len() as Letter {
            let name = gens.get(l).name.clone();
            let dl = &self.delta_gen[l as usize];
            let (a, b) = self.coassociators(dl);
            if a != b {
                rep.coassociativity_failures.push(name.clone());
            }
            let gv = self.alg.eval_word(&[l]);
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for (&idx, &c) in dl {
                let (i, j) = (idx / d, idx % d);
                add_entry(ctx, &mut left, j, ctx.mul(c, self.counit[i]));
                add_entry(ctx, &mut right, i, ctx.mul(c, self.counit[j]));
            }
            if left != gv || right != gv {
                rep.counit_axiom_failures.push(name);
            }
        }
        rep
    }
}
