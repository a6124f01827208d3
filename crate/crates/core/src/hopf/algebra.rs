use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{FieldCtx, Fq};
use crate::freealg::{Letter, NcPoly, TensorPoly, Word};
use crate::linalg::{add_entry, axpy, SparseVec};
use crate::rewrite::{NormalBasis, RewriteSystem};

/// Largest basis for which the full multiplication table is cached.
const MULT_TABLE_LIMIT: usize = 400;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    Infinite { witness: Word },
    TooLarge(u64),
    /// Ideal contains 1.
    Zero,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::Infinite { .. } => write!(f, "the quotient is infinite-dimensional"),
            AlgebraError::TooLarge(n) => write!(f, "basis of size {n} exceeds the enumeration limit"),
            AlgebraError::Zero => write!(f, "the quotient is the zero algebra"),
        }
    }
}

impl core::error::Error for AlgebraError {}

/// Finite-dimensional quotient with basis the irreducible words of a
/// confluent system.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    sys: RewriteSystem,
    basis: Vec<Word>,
    index: BTreeMap<Word, usize>,
    /// `right[l][i]` = coordinates of `basis[i] * l`.
    right: Vec<Vec<SparseVec>>,
    mult: Option<Vec<Vec<SparseVec>>>,
}

impl FiniteAlgebra {
    /// The caller guarantees that `sys` is confluent.
    pub fn new(sys: RewriteSystem, limit: usize) -> Result<Self, AlgebraError> {
        if sys.is_trivial() {
            return Err(AlgebraError::Zero);
        }
        let basis = match sys.normal_words(limit) {
            Ok(NormalBasis::Finite(ws)) => ws,
            Ok(NormalBasis::Infinite { prefix, cycle }) => {
                let mut witness = prefix;
                witness.extend_from_slice(&cycle);
                return Err(AlgebraError::Infinite { witness });
            }
            Err(n) => return Err(AlgebraError::TooLarge(n)),
        };
        let index: BTreeMap<Word, usize> =
            basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let ngens = sys.gens().len();
        let mut right = Vec::with_capacity(ngens);
        for l in 0..ngens as Letter {
            let col: Vec<SparseVec> = basis
                .iter()
                .map(|w| {
                    let mut x = w.clone();
                    x.push(l);
                    let r = sys.reduce_word(&x);
                    r.terms().map(|(w, c)| (index[w], c)).collect()
                })
                .collect();
            right.push(col);
        }
        let mut alg = FiniteAlgebra { sys, basis, index, right, mult: None };
        if alg.basis.len() <= MULT_TABLE_LIMIT {
            let n = alg.basis.len();
            let mut table = Vec::with_capacity(n);
            for i in 0..n {
                let row: Vec<SparseVec> = (0..n)
                    .map(|j| alg.right_mul_word(&crate::linalg::unit(i), &alg.basis[j].clone()))
                    .collect();
                table.push(row);
            }
            alg.mult = Some(table);
        }
        Ok(alg)
    }

    pub fn sys(&self) -> &RewriteSystem {
        &self.sys
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.sys.ctx()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn index_of(&self, w: &[Letter]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn unit(&self) -> SparseVec {
        crate::linalg::unit(self.index[&Word::new()])
    }

    /// `v * l`.
    pub fn right_mul_letter(&self, v: &SparseVec, l: Letter) -> SparseVec {
        let ctx = self.ctx();
        let mut out = SparseVec::new();
        for (&i, &c) in v {
            axpy(ctx, &mut out, c, &self.right[l as usize][i]);
        }
        out
    }

    pub fn right_mul_word(&self, v: &SparseVec, w: &[Letter]) -> SparseVec {
        let mut cur = v.clone();
        for &l in w {
            cur = self.right_mul_letter(&cur, l);
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> SparseVec {
        match &self.mult {
            Some(t) => t[i][j].clone(),
            None => self.right_mul_word(&crate::linalg::unit(i), &self.basis[j]),
        }
    }

    fn mul_basis_into(&self, out: &mut SparseVec, i: usize, j: usize, c: Fq) {
        let ctx = self.ctx();
        match &self.mult {
            Some(t) => axpy(ctx, out, c, &t[i][j]),
            None => {
                let v = self.right_mul_word(&crate::linalg::unit(i), &self.basis[j]);
                axpy(ctx, out, c, &v);
            }
        }
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let ctx = self.ctx();
        let mut out = SparseVec::new();
        for (&i, &c) in a {
            for (&j, &d) in b {
                self.mul_basis_into(&mut out, i, j, ctx.mul(c, d));
            }
        }
        out
    }

    /// Image of a free-algebra word.
    pub fn eval_word(&self, w: &[Letter]) -> SparseVec {
        self.right_mul_word(&self.unit(), w)
    }

    /// Image of a free-algebra polynomial.
    pub fn eval(&self, p: &NcPoly) -> SparseVec {
        let ctx = self.ctx();
        let mut out = SparseVec::new();
        for (w, c) in p.terms() {
            axpy(ctx, &mut out, c, &self.eval_word(w));
        }
        out
    }

    pub fn poly(&self, v: &SparseVec) -> NcPoly {
        let mut p = NcPoly::zero();
        for (&i, &c) in v {
            p.add_term(self.ctx(), self.basis[i].clone(), c);
        }
        p
    }

    /// Tensor of rank `n` in basis coordinates, index `sum_k i_k d^(n-1-k)`.
    pub fn eval_tensor(&self, t: &TensorPoly) -> SparseVec {
        let ctx = self.ctx();
        let d = self.dim();
        let mut out = SparseVec::new();
        let mut cache: BTreeMap<Word, SparseVec> = BTreeMap::new();
        for (ws, c) in t.terms() {
            let mut partial: Vec<(usize, Fq)> = alloc::vec![(0, c)];
            for w in ws {
                let img = cache.entry(w.clone()).or_insert_with(|| self.eval_word(w)).clone();
                let mut next = Vec::with_capacity(partial.len() * img.len());
                for &(idx, pc) in &partial {
                    for (&j, &jc) in &img {
                        next.push((idx * d + j, ctx.mul(pc, jc)));
                    }
                }
                partial = next;
            }
            for (idx, pc) in partial {
                add_entry(ctx, &mut out, idx, pc);
            }
        }
        out
    }

    /// Inverse of [`FiniteAlgebra::eval_tensor`].
    pub fn tensor_poly(&self, v: &SparseVec, rank: usize) -> TensorPoly {
        let d = self.dim();
        let mut t = TensorPoly::zero(rank);
        for (&idx, &c) in v {
            let mut ws = alloc::vec![Word::new(); rank];
            let mut r = idx;
            for k in (0..rank).rev() {
                ws[k] = self.basis[r % d].clone();
                r /= d;
            }
            t.add_term(self.ctx(), ws, c);
        }
        t
    }

    /// Componentwise product in the `rank`-fold tensor power.
    pub fn mul_tensor(&self, a: &SparseVec, b: &SparseVec, rank: usize) -> SparseVec {
        let ctx = self.ctx();
        let d = self.dim();
        let mut out = SparseVec::new();
        let split = |mut idx: usize| -> Vec<usize> {
            let mut v = alloc::vec![0usize; rank];
            for k in (0..rank).rev() {
                v[k] = idx % d;
                idx /= d;
            }
            v
        };
        for (&ia, &ca) in a {
            let xa = split(ia);
            for (&ib, &cb) in b {
                let xb = split(ib);
                let mut partial: Vec<(usize, Fq)> = alloc::vec![(0, ctx.mul(ca, cb))];
                for k in 0..rank {
                    let prod = self.mul_basis(xa[k], xb[k]);
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for &(idx, pc) in &partial {
                        for (&j, &jc) in &prod {
                            next.push((idx * d + j, ctx.mul(pc, jc)));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (idx, pc) in partial {
                    add_entry(ctx, &mut out, idx, pc);
                }
            }
        }
        out
    }
}
